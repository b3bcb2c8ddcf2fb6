#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "kgraph/dual.hpp"
#include "kgraph/io.hpp"
#include "kgraph/structure.hpp"

#include <map>

using namespace kg;
using kg::testing::load_fixture;

namespace {

const std::vector<Degree> kSmall = {Degree{0, 0}, Degree{1, 0}, Degree{0, 1}, Degree{1, 1}};

std::vector<Degree> degrees_upto(const Degree& top) {
    std::vector<Degree> out;
    for (unsigned a = 0; a <= top[0]; ++a)
        for (unsigned b = 0; b <= top[1]; ++b)
            out.push_back(Degree{a, b});
    return out;
}

std::vector<std::string> names(const KGraph& g) {
    return {g.vertices().begin(), g.vertices().end()};
}

}  // namespace

TEST_CASE("dual of T1 at (1,1) is T1 renamed") {
    KGraph t1 = load_fixture("t1.kg");
    auto d = dual(t1, Degree{1, 1});
    CHECK(names(d.graph) == std::vector<std::string>{"b.r"});
    CHECK(d.graph.edge_count() == 2);
    std::map<std::string, std::string> edge_names{{"b.b.r", "b"}, {"b.r.r", "r"}};
    KGraph renamed = kg::testing::relabel(
        d.graph, [](const std::string&) { return std::string("v"); },
        [&](const std::string& e) { return edge_names.at(e); });
    CHECK(serialize_kgraph(renamed) == serialize_kgraph(t1));
}

TEST_CASE("dual at p = 0 is the graph itself") {
    for (const auto& [name, g] : kg::testing::standard_corpus(5, 3)) {
        CAPTURE(name);
        CHECK(serialize_kgraph(dual(g, Degree{0, 0}).graph) == serialize_kgraph(g));
    }
}

TEST_CASE("dual of FLIP2 at (1,1)") {
    KGraph flip = load_fixture("flip2.kg");
    auto d = dual(flip, Degree{1, 1});
    CHECK(names(d.graph) == std::vector<std::string>{"b1.r1", "b2.r1"});
    std::size_t c1 = 0, c2 = 0;
    for (const auto& e : d.graph.edges())
        (e.color == 1 ? c1 : c2) += 1;
    // |Λ^(2,1)| and |Λ^(1,2)| from the path-count matrices
    CHECK(c1 == count_paths(flip, Degree{2, 1})(0, 0));
    CHECK(c2 == count_paths(flip, Degree{1, 2})(0, 0));
    CHECK(c1 == 4);
    CHECK(c2 == 2);

    IntMatrix m1 = dual_matrix(flip, Degree{1, 1}, 1), m2 = dual_matrix(flip, Degree{1, 1}, 2);
    CHECK(m1.is_binary());
    CHECK(m2.is_binary());
    for (std::size_t r = 0; r < 2; ++r)
        CHECK(m1(r, 0) + m1(r, 1) == 2);
    CHECK(m2 * m2.transpose() == IntMatrix::identity(2));
    CHECK((m2(0, 0) + m2(0, 1) == 1 && m2(0, 0) + m2(1, 0) == 1));
}

TEST_CASE("dual matrices of T1 and TORS") {
    KGraph t1 = load_fixture("t1.kg");
    CHECK(dual_matrix(t1, Degree{1, 1}, 1) == IntMatrix{{1}});
    CHECK(dual_matrix(t1, Degree{1, 1}, 2) == IntMatrix{{1}});
    KGraph tors = load_fixture("tors.kg");
    for (const auto& p : {Degree{1, 1}, Degree{2, 1}, Degree{1, 2}})
        for (int i = 1; i <= 2; ++i)
            CHECK(dual_matrix(tors, p, i).is_binary());
}

TEST_CASE("iterated duals") {
    KGraph t1 = load_fixture("t1.kg");
    CHECK(iterated_dual_equal(t1, Degree{1, 0}, Degree{0, 1}));
    KGraph flip = load_fixture("flip2.kg");
    auto cmp = compare_iterated_dual(flip, Degree{1, 1}, Degree{1, 0});
    CHECK(cmp.equal);
    CHECK(cmp.iterated == cmp.direct);
    CHECK(cmp.direct == serialize_kgraph(dual(flip, Degree{2, 1}).graph));
    for (const auto& [name, g] : kg::testing::standard_corpus(5, 5)) {
        CAPTURE(name);
        CHECK(iterated_dual_equal(g, Degree{0, 0}, Degree{0, 0}));
        for (const auto& p : kSmall)
            for (const auto& q : kSmall) {
                auto inner = dual(g, p);
                auto outer = dual(inner.graph, q);
                // counts of q(pΛ) agree with (p+q)Λ before any renaming
                auto direct = dual(g, p + q);
                CHECK(outer.graph.vertex_count() == direct.graph.vertex_count());
                CHECK(outer.graph.edge_count() == direct.graph.edge_count());
                CHECK(outer.graph.squares().size() == direct.graph.squares().size());
                CHECK(iterated_dual_equal(g, p, q));
            }
    }
}

TEST_CASE("at most one dual path of degree n <= p between two vertices") {
    for (const auto& [name, g] : kg::testing::standard_corpus(8, 17)) {
        CAPTURE(name);
        for (const auto& p : {Degree{1, 0}, Degree{0, 1}, Degree{1, 1}, Degree{2, 1}}) {
            auto d = dual(g, p);
            for (const auto& n : degrees_upto(p)) {
                std::map<std::pair<VertexId, VertexId>, int> seen;
                for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
                    for (const auto& path : paths_from(d.graph, v, n))
                        CHECK(++seen[{path.range, path.source}] == 1);
            }
        }
    }
}

TEST_CASE("duals inherit no sources and count paths like the base graph") {
    for (const auto& [name, g] : kg::testing::standard_corpus(8, 23)) {
        CAPTURE(name);
        for (const auto& p : {Degree{1, 0}, Degree{1, 1}, Degree{2, 1}}) {
            auto d = dual(g, p);
            CHECK(structural_report(d.graph).no_sources);
            for (const auto& n : degrees_upto(Degree{2, 2}))
                for (VertexId beta = 0; beta < d.graph.vertex_count(); ++beta)
                    CHECK(paths_from(d.graph, beta, n).size() ==
                          paths_from(g, d.vertex_origin[beta].source, n).size());
        }
    }
}

TEST_CASE("lifting dual paths glues at p and adds degrees") {
    for (const auto& [name, g] : kg::testing::standard_corpus(6, 29)) {
        CAPTURE(name);
        Degree p{1, 1};
        auto d = dual(g, p);
        for (const auto& n : degrees_upto(Degree{1, 1}))
            for (const auto& lambda : paths_of_degree(d.graph, n))
                for (const auto& m : degrees_upto(Degree{1, 1}))
                    for (const auto& mu : paths_from(d.graph, lambda.source, m)) {
                        Path both = compose(d.graph, lambda, mu);
                        Path lifted = lift_to_base(g, d, both);
                        Path a = lift_to_base(g, d, lambda), b = lift_to_base(g, d, mu);
                        CHECK(lifted.degree == n + m + p);
                        CHECK(segment(g, a, Degree{0, 0}, a.degree) == segment(g, lifted, Degree{0, 0}, a.degree));
                        CHECK(segment(g, b, p, b.degree) == segment(g, lifted, a.degree, lifted.degree));
                        CHECK(segment(g, b, Degree{0, 0}, p) == segment(g, a, a.degree - p, a.degree));
                    }
    }
}

TEST_CASE("size guard") {
    KGraph flip = load_fixture("flip2.kg");
    CHECK_THROWS_AS(dual(flip, Degree{4, 0}, DualLimits{8}), DualTooLarge);
    CHECK_NOTHROW(dual(flip, Degree{3, 0}, DualLimits{8}));
}

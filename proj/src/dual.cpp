#include "kgraph/dual.hpp"

#include "kgraph/io.hpp"
#include "kgraph/structure.hpp"

#include <set>

namespace kg {

namespace {

void claim_name(std::set<std::string>& taken, const std::string& name, const char* what) {
    if (!taken.insert(name).second)
        throw std::runtime_error(std::string("dual naming collision on ") + what + " '" + name +
                                 "' (ids containing '.' can make names ambiguous)");
}

}  // namespace

DualGraph dual(const KGraph& g, const Degree& p, DualLimits limits) {
    if (p.rank() != static_cast<std::size_t>(g.rank()))
        throw std::invalid_argument("dual: degree " + p.to_string() + " has the wrong rank");
    const std::size_t k = g.rank();

    auto objects = paths_of_degree(g, p);
    if (objects.size() > limits.max_vertices)
        throw DualTooLarge("dual graph would have " + std::to_string(objects.size()) + " vertices (limit " +
                           std::to_string(limits.max_vertices) + ")");

    Skeleton s;
    s.rank = g.rank();
    std::vector<std::pair<std::string, Path>> vertex_names;
    std::vector<std::pair<std::string, Path>> edge_names;
    std::set<std::string> taken;

    for (auto& beta : objects) {
        auto name = path_name(g, beta);
        claim_name(taken, name, "vertex");
        s.vertices.push_back({name});
        vertex_names.emplace_back(std::move(name), std::move(beta));
    }

    taken.clear();
    for (int i = 1; i <= g.rank(); ++i) {
        Degree ei = Degree::unit(k, i);
        Degree top = p + ei;
        for (auto& lambda : paths_of_degree(g, top)) {
            auto name = path_name(g, lambda);
            claim_name(taken, name, "edge");
            auto range = segment(g, lambda, Degree(k), p);
            auto source = segment(g, lambda, ei, top);
            s.edges.push_back({name, i, path_name(g, source), path_name(g, range)});
            edge_names.emplace_back(std::move(name), std::move(lambda));
        }
    }

    for (int i = 1; i <= g.rank(); ++i)
        for (int j = i + 1; j <= g.rank(); ++j) {
            Degree ei = Degree::unit(k, i), ej = Degree::unit(k, j);
            Degree top = p + ei + ej;
            for (const auto& tau : paths_of_degree(g, top)) {
                auto a = segment(g, tau, Degree(k), p + ei);
                auto b = segment(g, tau, ei, top);
                auto c = segment(g, tau, Degree(k), p + ej);
                auto d = segment(g, tau, ej, top);
                s.squares.push_back({path_name(g, a), path_name(g, b), path_name(g, c), path_name(g, d)});
            }
        }

    DualGraph out{KGraph::build(s), p, {}, {}};
    out.vertex_origin.resize(out.graph.vertex_count());
    for (auto& [name, path] : vertex_names)
        out.vertex_origin[*out.graph.find_vertex(name)] = std::move(path);
    out.edge_origin.resize(out.graph.edge_count());
    for (auto& [name, path] : edge_names)
        out.edge_origin[*out.graph.find_edge(name)] = std::move(path);
    return out;
}

Path lift_to_base(const KGraph& base, const DualGraph& d, const Path& dual_path) {
    if (dual_path.is_vertex())
        return d.vertex_origin.at(dual_path.range);
    Path acc = d.edge_origin.at(dual_path.edges.front());
    for (std::size_t i = 1; i < dual_path.edges.size(); ++i) {
        const Path& mu = d.edge_origin.at(dual_path.edges[i]);
        acc = compose(base, acc, segment(base, mu, d.p, mu.degree));
    }
    return acc;
}

DualComparison compare_iterated_dual(const KGraph& g, const Degree& p, const Degree& q, DualLimits limits) {
    DualGraph inner = dual(g, p, limits);
    DualGraph outer = dual(inner.graph, q, limits);
    DualGraph direct = dual(g, p + q, limits);

    const KGraph& h = outer.graph;
    std::vector<std::string> vertex_name(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        vertex_name[v] = path_name(g, lift_to_base(g, inner, outer.vertex_origin[v]));
    std::vector<std::string> edge_name(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        edge_name[e] = path_name(g, lift_to_base(g, inner, outer.edge_origin[e]));

    Skeleton renamed;
    renamed.rank = h.rank();
    for (const auto& name : vertex_name)
        renamed.vertices.push_back({name});
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const auto& edge = h.edge(e);
        renamed.edges.push_back({edge_name[e], edge.color, vertex_name[edge.source], vertex_name[edge.range]});
    }
    for (const auto& sq : h.squares())
        renamed.squares.push_back({edge_name[sq.a], edge_name[sq.b], edge_name[sq.c], edge_name[sq.d]});

    DualComparison result;
    result.direct = serialize_kgraph(direct.graph);
    try {
        result.iterated = serialize_kgraph(KGraph::build(renamed));
    } catch (const InvalidKGraph& e) {
        result.iterated = e.what();
        return result;
    }
    result.equal = result.iterated == result.direct;
    return result;
}

bool iterated_dual_equal(const KGraph& g, const Degree& p, const Degree& q, DualLimits limits) {
    return compare_iterated_dual(g, p, q, limits).equal;
}

IntMatrix dual_matrix(const KGraph& g, const Degree& p, int color, DualLimits limits) {
    return coordinate_matrix(dual(g, p, limits).graph, color);
}

}  // namespace kg

#include "kgraph/words.hpp"

#include "kgraph/dual.hpp"
#include "kgraph/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace kg {

std::size_t lattice_size(const Degree& shape) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < shape.rank(); ++i)
        n *= shape[i] + 1;
    return n;
}

std::size_t lattice_index(const Degree& shape, const Degree& l) {
    if (!leq(l, shape))
        throw std::out_of_range("lattice point " + l.to_string() + " outside [0, " + shape.to_string() + "]");
    std::size_t index = 0;
    for (std::size_t i = 0; i < shape.rank(); ++i)
        index = index * (shape[i] + 1) + l[i];
    return index;
}

Degree lattice_point(const Degree& shape, std::size_t index) {
    Degree l(shape.rank());
    for (std::size_t i = shape.rank(); i-- > 0;) {
        l[i] = static_cast<Degree::value_type>(index % (shape[i] + 1));
        index /= shape[i] + 1;
    }
    return l;
}

VertexId Word::at(const Degree& l) const {
    return letters.at(lattice_index(shape, l));
}

bool has_binary_matrices(const KGraph& g) {
    for (int c = 1; c <= g.rank(); ++c)
        if (!coordinate_matrix(g, c).is_binary())
            return false;
    return true;
}

VertexId vertex_at(const KGraph& g, const Path& lambda, const Degree& n) {
    if (n.is_zero())
        return lambda.range;
    return segment(g, lambda, Degree(n.rank()), n).source;
}

namespace {

void require_binary(const KGraph& g) {
    if (!has_binary_matrices(g))
        throw std::invalid_argument("coordinate matrices are not {0,1}-valued");
}

// Fills the factorisation grid of a 2-graph path: H[a][b] is the colour-1 edge
// from lattice point (a,b) to (a+1,b), V[a][b] the colour-2 edge from (a,b) to (a,b+1).
Word grid_word(const KGraph& g, const Path& lambda) {
    const std::size_t n1 = lambda.degree[0], n2 = lambda.degree[1];
    std::vector<EdgeId> H(n1 * (n2 + 1)), V((n1 + 1) * n2);
    auto h = [&](std::size_t a, std::size_t b) -> EdgeId& { return H[a * (n2 + 1) + b]; };
    auto v = [&](std::size_t a, std::size_t b) -> EdgeId& { return V[a * n2 + b]; };
    for (std::size_t a = 0; a < n1; ++a)
        h(a, 0) = lambda.edges[a];
    for (std::size_t b = 0; b < n2; ++b)
        v(n1, b) = lambda.edges[n1 + b];
    for (std::size_t b = 0; b < n2; ++b)
        for (std::size_t a = n1; a-- > 0;) {
            auto [left, top] = g.commute(h(a, b), v(a + 1, b));
            v(a, b) = left;
            h(a, b + 1) = top;
        }

    Word w{lambda.degree, std::vector<VertexId>((n1 + 1) * (n2 + 1))};
    for (std::size_t a = 0; a <= n1; ++a)
        for (std::size_t b = 0; b <= n2; ++b) {
            VertexId x;
            if (a > 0)
                x = g.edge(h(a - 1, b)).source;
            else if (b > 0)
                x = g.edge(v(0, b - 1)).source;
            else
                x = lambda.range;
            w.letters[a * (n2 + 1) + b] = x;
        }
    return w;
}

std::optional<EdgeId> unique_edge(const KGraph& g, int color, VertexId range, VertexId source) {
    for (EdgeId e : g.edges_into(range, color))
        if (g.edge(e).source == source)
            return e;
    return std::nullopt;
}

}  // namespace

Word word_of_path(const KGraph& g01, const Path& lambda) {
    require_binary(g01);
    if (g01.rank() == 2)
        return grid_word(g01, lambda);
    Word w{lambda.degree, std::vector<VertexId>(lattice_size(lambda.degree))};
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        w.letters[i] = vertex_at(g01, lambda, lattice_point(lambda.degree, i));
    return w;
}

bool is_allowable(const KGraph& g01, const Word& w) {
    if (w.shape.rank() != static_cast<std::size_t>(g01.rank()) || w.letters.size() != lattice_size(w.shape))
        return false;
    for (VertexId x : w.letters)
        if (x >= g01.vertex_count())
            return false;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        Degree l = lattice_point(w.shape, i);
        for (int j = 1; j <= g01.rank(); ++j) {
            if (l[j - 1] == w.shape[j - 1])
                continue;
            Degree next = l + Degree::unit(l.rank(), j);
            if (!unique_edge(g01, j, w.letters[i], w.at(next)))
                return false;
        }
    }
    return true;
}

Path path_of_word(const KGraph& g01, const Word& w) {
    require_binary(g01);
    if (!is_allowable(g01, w))
        throw std::invalid_argument("word is not allowable");
    Degree at(w.shape.rank());
    std::vector<EdgeId> edges;
    for (int j = 1; j <= g01.rank(); ++j)
        for (unsigned step = 0; step < w.shape[j - 1]; ++step) {
            Degree next = at + Degree::unit(at.rank(), j);
            edges.push_back(*unique_edge(g01, j, w.at(at), w.at(next)));
            at = next;
        }
    Path path = edges.empty() ? identity_path(g01, w.letters.front()) : normalize(g01, edges);
    if (word_of_path(g01, path) != w)
        throw std::invalid_argument("word is allowable but is not the word of any path");
    return path;
}

std::string offset_string(const Offset& m) {
    return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ")";
}

bool shell_less(const Offset& a, const Offset& b) {
    auto norm = [](const Offset& m) { return std::max(std::abs(m[0]), std::abs(m[1])); };
    if (norm(a) != norm(b))
        return norm(a) < norm(b);
    return a < b;
}

std::vector<Offset> offset_window(unsigned bound) {
    std::vector<Offset> out;
    int b = static_cast<int>(bound);
    for (int x = -b; x <= b; ++x)
        for (int y = -b; y <= b; ++y)
            if (x != 0 || y != 0)
                out.push_back({x, y});
    std::sort(out.begin(), out.end(), shell_less);
    return out;
}

Degree h3_search_shape(const Offset& m, const Degree& margin) {
    Degree shape(2);
    shape[0] = static_cast<Degree::value_type>(std::abs(m[0]));
    shape[1] = static_cast<Degree::value_type>(std::abs(m[1]));
    return shape + margin;
}

std::optional<Witness> find_h3_witness(const KGraph& g01, const Offset& m, const Degree& margin) {
    require_binary(g01);
    if (g01.rank() != 2)
        throw std::invalid_argument("(H3) search needs a 2-graph");
    Degree shape = h3_search_shape(m, margin);
    std::optional<Witness> found;
    for (VertexId v = 0; v < g01.vertex_count() && !found; ++v)
        for_each_path_from(g01, v, shape, [&](const Path& lambda) {
            Word w = word_of_path(g01, lambda);
            for (std::size_t i = 0; i < w.letters.size(); ++i) {
                Degree l1 = lattice_point(shape, i);
                long x = static_cast<long>(l1[0]) + m[0], y = static_cast<long>(l1[1]) + m[1];
                if (x < 0 || y < 0 || x > static_cast<long>(shape[0]) || y > static_cast<long>(shape[1]))
                    continue;
                Degree l2{static_cast<Degree::value_type>(x), static_cast<Degree::value_type>(y)};
                if (w.letters[i] != w.at(l2)) {
                    found = Witness{lambda, l1};
                    return false;
                }
            }
            return true;
        });
    return found;
}

RSReport check_rs(const KGraph& g01, const RSOptions& options) {
    if (g01.rank() != 2)
        throw std::invalid_argument("(H0)-(H3) are defined for 2-graphs");
    require_binary(g01);
    RSReport report;
    IntMatrix m1 = coordinate_matrix(g01, 1), m2 = coordinate_matrix(g01, 2);
    report.h0 = !m1.is_zero() && !m2.is_zero();
    IntMatrix product = m1 * m2;
    report.h1a = product == m2 * m1;
    report.h1b = product.is_binary();

    std::vector<std::vector<std::size_t>> successors(g01.vertex_count());
    for (const auto& e : g01.edges())
        successors[e.range].push_back(e.source);
    report.h2 = is_strongly_connected(successors);

    report.h3_bound = options.h3_bound;
    report.h3_margin = options.h3_margin;
    report.h3_window = offset_window(options.h3_bound);
    for (const auto& m : report.h3_window) {
        if (auto w = find_h3_witness(g01, m, options.h3_margin))
            report.witnesses.emplace(m, std::move(*w));
        else
            report.h3_failures.push_back(m);
    }
    report.h3_verdict = report.h3_failures.empty() ? H3Verdict::pass_on_window : H3Verdict::fail;
    return report;
}

bool h2_iff_strongly_connected(const KGraph& g) {
    auto ones = dual(g, Degree::ones(g.rank()));
    RSOptions no_window;
    no_window.h3_bound = 0;
    return check_rs(ones.graph, no_window).h2 == structural_report(g).strongly_connected;
}

namespace {

// Shortest path with range `from` and source `to` (BFS walking edges from range to
// source, neighbours in colour then edge order).
std::optional<Path> connector(const KGraph& g, VertexId from, VertexId to) {
    if (from == to)
        return identity_path(g, from);
    std::vector<std::optional<EdgeId>> via(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        VertexId at = queue.front();
        queue.pop_front();
        for (int c = 1; c <= g.rank(); ++c)
            for (EdgeId e : g.edges_into(at, c)) {
                VertexId next = g.edge(e).source;
                if (seen[next])
                    continue;
                seen[next] = true;
                via[next] = e;
                if (next == to) {
                    std::vector<EdgeId> walk;
                    for (VertexId x = to; x != from; x = g.edge(*via[x]).range)
                        walk.push_back(*via[x]);
                    std::reverse(walk.begin(), walk.end());
                    return normalize(g, walk);
                }
                queue.push_back(next);
            }
    }
    return std::nullopt;
}

Path require_connector(const KGraph& g, VertexId from, VertexId to) {
    auto path = connector(g, from, to);
    if (!path)
        throw std::invalid_argument("no connector from " + g.vertex_name(from) + " to " + g.vertex_name(to) +
                                    " (graph is not strongly connected)");
    return *path;
}

}  // namespace

AperiodicPrefix aperiodic_prefix(const KGraph& g01, const std::map<Offset, Witness>& witnesses, std::size_t count) {
    require_binary(g01);
    if (g01.rank() != 2)
        throw std::invalid_argument("aperiodic prefix construction needs a 2-graph");
    if (g01.vertex_count() == 0)
        throw std::invalid_argument("graph has no vertices");

    for (const auto& [m, wit] : witnesses) {
        Word w = word_of_path(g01, wit.path);
        long x = static_cast<long>(wit.position[0]) + m[0], y = static_cast<long>(wit.position[1]) + m[1];
        bool inside = leq(wit.position, w.shape) && x >= 0 && y >= 0 && x <= static_cast<long>(w.shape[0]) &&
                      y <= static_cast<long>(w.shape[1]);
        if (!inside ||
            w.at(wit.position) == w.at(Degree{static_cast<Degree::value_type>(x), static_cast<Degree::value_type>(y)}))
            throw std::invalid_argument("witness for m = " + offset_string(m) + " does not separate its letters");
    }

    AperiodicPrefix x;
    x.base = 0;
    x.count = count;
    x.prefix = identity_path(g01, x.base);
    if (count == 0)
        return x;
    if (witnesses.empty())
        throw std::invalid_argument("a nonempty prefix needs at least one witness");
    auto report = structural_report(g01);
    if (!report.strongly_connected || !report.no_sources)
        throw std::invalid_argument("prefix construction needs a strongly connected graph with no sources");

    for (const auto& [m, wit] : witnesses)
        x.listing.push_back(m);
    std::sort(x.listing.begin(), x.listing.end(), shell_less);

    const Degree one = Degree::ones(2);
    std::map<Offset, std::size_t> built;
    for (std::size_t i = 0; i < count; ++i) {
        const Offset& m = x.listing[i % x.listing.size()];
        if (auto it = built.find(m); it != built.end()) {
            std::size_t j = it->second;
            x.alpha.push_back(x.alpha[j]);
            x.lambda.push_back(x.lambda[j]);
            x.beta.push_back(x.beta[j]);
            x.rho.push_back(x.rho[j]);
            x.position.push_back(x.position[j]);
            continue;
        }
        const Witness& wit = witnesses.at(m);
        Path alpha = require_connector(g01, x.base, wit.path.range);
        Path beta = require_connector(g01, wit.path.source, x.base);
        Path rho = compose(g01, compose(g01, alpha, wit.path), beta);
        for (int c = 1; c <= 2; ++c)
            while (rho.degree[c - 1] == 0) {
                auto into = g01.edges_into(x.base, c);
                if (into.empty())
                    throw std::invalid_argument("base vertex receives no edge of color " + std::to_string(c));
                Path loop = compose(g01, edge_path(g01, into.front()),
                                    require_connector(g01, g01.edge(into.front()).source, x.base));
                beta = compose(g01, beta, loop);
                rho = compose(g01, compose(g01, alpha, wit.path), beta);
            }
        built.emplace(m, i);
        x.alpha.push_back(std::move(alpha));
        x.lambda.push_back(wit.path);
        x.beta.push_back(std::move(beta));
        x.rho.push_back(std::move(rho));
        x.position.push_back(wit.position);
    }

    Degree at(2);
    for (std::size_t i = 1; i <= count; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            x.pieces.push_back(j);
            x.piece_start.push_back(at);
            at += x.rho[j].degree;
            x.prefix = compose(g01, x.prefix, x.rho[j]);
        }
    return x;
}

VertexId prefix_letter(const KGraph& g01, const AperiodicPrefix& x, const Degree& n) {
    if (!leq(n, x.prefix.degree))
        throw std::out_of_range("point " + n.to_string() + " lies beyond the prefix " + x.prefix.degree.to_string());
    for (std::size_t k = 0; k < x.pieces.size(); ++k) {
        const Path& piece = x.rho[x.pieces[k]];
        Degree end = x.piece_start[k] + piece.degree;
        if (!leq(n, end))
            continue;
        if (leq(x.piece_start[k], n))
            return vertex_at(g01, piece, n - x.piece_start[k]);
        break;
    }
    return vertex_at(g01, x.prefix, n);
}

std::optional<Degree> separation_offset(const AperiodicPrefix& x, const Degree& s, const Degree& t) {
    if (s == t || x.count == 0)
        return std::nullopt;
    Offset m{static_cast<int>(t[0]) - static_cast<int>(s[0]), static_cast<int>(t[1]) - static_cast<int>(s[1])};
    auto found = std::find(x.listing.begin(), x.listing.end(), m);
    if (found == x.listing.end())
        return std::nullopt;
    std::size_t I = static_cast<std::size_t>(found - x.listing.begin()) + 1;
    std::size_t J = std::max({s[0], s[1], t[0], t[1]});
    std::size_t K = std::max(I, J + 1);
    if (K > x.count)
        return std::nullopt;

    Degree n(2);
    for (std::size_t i = 1; i < K; ++i)      // d(τ_1 ... τ_{K-1})
        for (std::size_t j = 0; j < i; ++j)
            n += x.rho[j].degree;
    for (std::size_t j = 0; j + 1 < I; ++j)  // d(ρ_1 ... ρ_{I-1})
        n += x.rho[j].degree;
    n += x.alpha[I - 1].degree;
    n += x.position[I - 1];
    return n - s;
}

std::vector<SeparationCheck> separation_checks(const KGraph& g01, const AperiodicPrefix& x, unsigned bound) {
    std::vector<SeparationCheck> out;
    Degree box{bound, bound};
    for (std::size_t a = 0; a < lattice_size(box); ++a)
        for (std::size_t b = 0; b < lattice_size(box); ++b) {
            Degree s = lattice_point(box, a), t = lattice_point(box, b);
            auto n = separation_offset(x, s, t);
            if (!n)
                continue;
            out.push_back({s, t, *n, prefix_letter(g01, x, *n + s), prefix_letter(g01, x, *n + t)});
        }
    return out;
}

}  // namespace kg

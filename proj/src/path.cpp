#include "kgraph/path.hpp"

#include <algorithm>
#include <cstdlib>
#include <string_view>

namespace kg {

namespace {

Degree degree_of(const KGraph& g, std::span<const EdgeId> edges) {
    Degree d(g.rank());
    for (EdgeId e : edges)
        d[g.edge(e).color - 1] += 1;
    return d;
}

void require_composable(const KGraph& g, std::span<const EdgeId> edges) {
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (g.edge(edges[i]).source != g.edge(edges[i + 1]).range)
            throw std::invalid_argument("edges " + g.edge(edges[i]).id + " and " + g.edge(edges[i + 1]).id +
                                        " are not composable");
}

// In-place insertion sort by colour; every adjacent transposition is a square rewrite.
void sort_by_color(const KGraph& g, std::vector<EdgeId>& edges) {
    for (std::size_t i = 1; i < edges.size(); ++i)
        for (std::size_t j = i; j > 0 && g.edge(edges[j - 1]).color > g.edge(edges[j]).color; --j) {
            auto [x, y] = g.commute(edges[j - 1], edges[j]);
            edges[j - 1] = x;
            edges[j] = y;
        }
}

Path make_path(const KGraph& g, std::vector<EdgeId> edges) {
    Path p;
    p.range = g.edge(edges.front()).range;
    p.source = g.edge(edges.back()).source;
    p.degree = degree_of(g, edges);
    p.edges = std::move(edges);
    return p;
}

std::vector<int> sorted_colors(const Degree& d) {
    std::vector<int> colors;
    for (std::size_t i = 0; i < d.rank(); ++i)
        colors.insert(colors.end(), d[i], static_cast<int>(i) + 1);
    return colors;
}

}  // namespace

Path identity_path(const KGraph& g, VertexId v) {
    if (v >= g.vertex_count())
        throw std::out_of_range("vertex index out of range");
    return Path{v, v, Degree(g.rank()), {}};
}

Path edge_path(const KGraph& g, EdgeId e) {
    return make_path(g, {e});
}

Path normalize(const KGraph& g, std::span<const EdgeId> raw) {
    if (raw.empty())
        throw std::invalid_argument("cannot normalize an empty edge sequence; use identity_path");
    require_composable(g, raw);
    std::vector<EdgeId> edges(raw.begin(), raw.end());
    sort_by_color(g, edges);
    return make_path(g, std::move(edges));
}

Path compose(const KGraph& g, const Path& lambda, const Path& mu) {
    if (lambda.source != mu.range)
        throw std::invalid_argument("paths are not composable: s(lambda) = " + g.vertex_name(lambda.source) +
                                    ", r(mu) = " + g.vertex_name(mu.range));
    if (lambda.is_vertex())
        return mu;
    if (mu.is_vertex())
        return lambda;
    std::vector<EdgeId> edges = lambda.edges;
    edges.insert(edges.end(), mu.edges.begin(), mu.edges.end());
    sort_by_color(g, edges);
    return make_path(g, std::move(edges));
}

std::vector<EdgeId> reorder(const KGraph& g, std::span<const EdgeId> edges, std::span<const int> colors) {
    if (edges.size() != colors.size())
        throw std::invalid_argument("reorder: colour sequence has the wrong length");
    std::vector<EdgeId> out(edges.begin(), edges.end());
    for (std::size_t p = 0; p < out.size(); ++p) {
        std::size_t q = p;
        while (q < out.size() && g.edge(out[q]).color != colors[p])
            ++q;
        if (q == out.size())
            throw std::invalid_argument("reorder: colour sequence does not match the path degree");
        for (; q > p; --q) {
            auto [x, y] = g.commute(out[q - 1], out[q]);
            out[q - 1] = x;
            out[q] = y;
        }
    }
    return out;
}

Path segment(const KGraph& g, const Path& lambda, const Degree& m, const Degree& n) {
    if (!leq(m, n) || !leq(n, lambda.degree))
        throw std::out_of_range("segment bounds " + m.to_string() + ", " + n.to_string() +
                                " not within [0, " + lambda.degree.to_string() + "]");
    auto colors = sorted_colors(m);
    auto middle = sorted_colors(n - m);
    auto tail = sorted_colors(lambda.degree - n);
    colors.insert(colors.end(), middle.begin(), middle.end());
    colors.insert(colors.end(), tail.begin(), tail.end());
    auto edges = reorder(g, lambda.edges, colors);

    auto first = m.total();
    auto last = n.total();
    if (first == last) {
        VertexId v = first == 0 ? lambda.range : g.edge(edges[first - 1]).source;
        return identity_path(g, v);
    }
    std::vector<EdgeId> piece(edges.begin() + first, edges.begin() + last);
    sort_by_color(g, piece);
    return make_path(g, std::move(piece));
}

std::string path_name(const KGraph& g, const Path& path) {
    if (path.is_vertex())
        return g.vertex_name(path.range);
    std::string out;
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        if (i)
            out += '.';
        out += g.edge(path.edges[i]).id;
    }
    return out;
}

unsigned enumeration_cap() {
    if (const char* env = std::getenv("KG_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0')
            return static_cast<unsigned>(v);
    }
    return 8;
}

void check_enumeration_cap(const Degree& n) {
    unsigned cap = enumeration_cap();
    for (std::size_t i = 0; i < n.rank(); ++i)
        if (n[i] > cap)
            throw EnumerationCapExceeded("degree " + n.to_string() + " exceeds the enumeration cap " +
                                         std::to_string(cap) + " (set KG_ENUM_CAP to raise it)");
}

bool for_each_path_from(const KGraph& g, VertexId v, const Degree& n, const std::function<bool(const Path&)>& visit) {
    if (n.rank() != static_cast<std::size_t>(g.rank()))
        throw std::invalid_argument("degree " + n.to_string() + " has the wrong rank");
    check_enumeration_cap(n);
    auto colors = sorted_colors(n);
    Path current{v, v, n, {}};
    current.edges.reserve(colors.size());

    std::function<bool(VertexId, std::size_t)> extend = [&](VertexId at, std::size_t depth) -> bool {
        if (depth == colors.size()) {
            current.source = at;
            return visit(current);
        }
        for (EdgeId e : g.edges_into(at, colors[depth])) {
            current.edges.push_back(e);
            bool go_on = extend(g.edge(e).source, depth + 1);
            current.edges.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    };
    return extend(v, 0);
}

std::vector<Path> paths_from(const KGraph& g, VertexId v, const Degree& n) {
    std::vector<Path> out;
    for_each_path_from(g, v, n, [&](const Path& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<Path> paths_of_degree(const KGraph& g, const Degree& n) {
    std::vector<Path> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto some = paths_from(g, v, n);
        out.insert(out.end(), std::make_move_iterator(some.begin()), std::make_move_iterator(some.end()));
    }
    return out;
}

}  // namespace kg

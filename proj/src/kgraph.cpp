#include "kgraph/kgraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

namespace kg {

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string quoted(std::string_view s) {
    return "'" + std::string(s) + "'";
}

// Index-based view of a skeleton used while validating; entries that failed
// earlier checks are marked unusable instead of being dropped so later checks
// can still run on the rest.
struct Draft {
    struct E {
        int color = 0;
        int source = -1;
        int range = -1;
        bool usable = false;
    };
    std::vector<E> edges;
    std::map<std::string, int, std::less<>> edge_index;
};

class Validator {
public:
    explicit Validator(const Skeleton& s) : s_(s) {}

    ValidationReport run() {
        if (s_.rank < 1)
            add(0, "rank must be at least 1 (got " + std::to_string(s_.rank) + ")");
        check_vertices();
        check_edges();
        check_squares();
        if (!square_problems_ && s_.rank >= 3)
            check_cubes();
        return std::move(report_);
    }

private:
    void add(int line, std::string message) {
        report_.issues.push_back({line, std::move(message)});
    }

    void check_vertices() {
        for (const auto& v : s_.vertices) {
            if (v.id.empty()) {
                add(v.line, "vertex with empty id");
                continue;
            }
            if (!vertex_ids_.emplace(v.id, static_cast<int>(vertex_ids_.size())).second)
                add(v.line, "duplicate vertex " + quoted(v.id));
        }
    }

    void check_edges() {
        draft_.edges.resize(s_.edges.size());
        for (std::size_t i = 0; i < s_.edges.size(); ++i) {
            const auto& e = s_.edges[i];
            auto& d = draft_.edges[i];
            bool usable = true;
            if (e.id.empty()) {
                add(e.line, "edge with empty id");
                usable = false;
            } else if (!draft_.edge_index.emplace(e.id, static_cast<int>(i)).second) {
                add(e.line, "duplicate edge " + quoted(e.id));
                usable = false;
            }
            if (e.color < 1 || e.color > s_.rank) {
                add(e.line, "edge " + quoted(e.id) + ": color out of range (" + std::to_string(e.color) +
                                " not in 1.." + std::to_string(s_.rank) + ")");
                usable = false;
            }
            auto src = vertex_ids_.find(e.source);
            if (src == vertex_ids_.end()) {
                add(e.line, "edge " + quoted(e.id) + " has undeclared source vertex " + quoted(e.source));
                usable = false;
            }
            auto rng = vertex_ids_.find(e.range);
            if (rng == vertex_ids_.end()) {
                add(e.line, "edge " + quoted(e.id) + " has undeclared range vertex " + quoted(e.range));
                usable = false;
            }
            d.color = e.color;
            d.source = src == vertex_ids_.end() ? -1 : src->second;
            d.range = rng == vertex_ids_.end() ? -1 : rng->second;
            d.usable = usable;
        }
        for (const auto& d : draft_.edges)
            if (!d.usable)
                square_problems_ = true;
    }

    int lookup_edge(const SquareDecl& sq, const std::string& id) {
        auto it = draft_.edge_index.find(id);
        if (it == draft_.edge_index.end()) {
            add(sq.line, "square references unknown edge " + quoted(id));
            return -1;
        }
        if (!draft_.edges[it->second].usable)
            return -1;
        return it->second;
    }

    static std::string pair_text(const Skeleton& s, int x, int y) {
        return "(" + s.edges[x].id + "," + s.edges[y].id + ")";
    }

    void check_squares() {
        const auto& E = draft_.edges;
        for (const auto& sq : s_.squares) {
            int a = lookup_edge(sq, sq.a), b = lookup_edge(sq, sq.b);
            int c = lookup_edge(sq, sq.c), d = lookup_edge(sq, sq.d);
            if (a < 0 || b < 0 || c < 0 || d < 0) {
                square_problems_ = true;
                continue;
            }
            std::string label = "square " + sq.a + " " + sq.b + " " + sq.c + " " + sq.d;
            bool good = true;
            if (!(E[a].color < E[b].color && E[c].color == E[b].color && E[d].color == E[a].color)) {
                add(sq.line, label + ": colors must read i j j i with i < j");
                good = false;
            }
            if (E[a].source != E[b].range) {
                add(sq.line, label + ": " + sq.a + " and " + sq.b + " are not composable");
                good = false;
            }
            if (E[c].source != E[d].range) {
                add(sq.line, label + ": " + sq.c + " and " + sq.d + " are not composable");
                good = false;
            }
            if (E[a].range != E[c].range || E[b].source != E[d].source) {
                add(sq.line, label + ": the two factorizations have different endpoints");
                good = false;
            }
            if (!good) {
                square_problems_ = true;
                continue;
            }
            if (!forward_.emplace(pair_key(a, b), pair_key(c, d)).second) {
                add(sq.line, "composable pair " + pair_text(s_, a, b) + " has more than one square");
                square_problems_ = true;
            }
            if (!backward_.emplace(pair_key(c, d), pair_key(a, b)).second) {
                add(sq.line, "composable pair " + pair_text(s_, c, d) + " is the target of more than one square");
                square_problems_ = true;
            }
        }
        std::vector<std::vector<int>> by_range;
        for (std::size_t y = 0; y < E.size(); ++y)
            if (E[y].usable) {
                if (static_cast<std::size_t>(E[y].range) >= by_range.size())
                    by_range.resize(E[y].range + 1);
                by_range[E[y].range].push_back(static_cast<int>(y));
            }
        for (std::size_t x = 0; x < E.size(); ++x) {
            if (!E[x].usable || static_cast<std::size_t>(E[x].source) >= by_range.size())
                continue;
            for (int y : by_range[E[x].source]) {
                if (E[x].color == E[y].color)
                    continue;
                auto key = pair_key(static_cast<std::uint32_t>(x), y);
                if (E[x].color < E[y].color && !forward_.contains(key)) {
                    add(0, "composable pair " + pair_text(s_, x, y) + " has no square");
                    square_problems_ = true;
                } else if (E[x].color > E[y].color && !backward_.contains(key)) {
                    add(0, "composable pair " + pair_text(s_, x, y) + " is not the target of any square");
                    square_problems_ = true;
                }
            }
        }
    }

    std::pair<int, int> swap_pair(int x, int y) const {
        auto key = pair_key(x, y);
        const auto& table = draft_.edges[x].color < draft_.edges[y].color ? forward_ : backward_;
        auto v = table.at(key);
        return {static_cast<int>(v >> 32), static_cast<int>(v & 0xffffffffu)};
    }

    // Both hexagon routes from colours (i,j,l) to (l,j,i) must agree.
    void check_cubes() {
        const auto& E = draft_.edges;
        for (std::size_t x = 0; x < E.size(); ++x)
            for (std::size_t y = 0; y < E.size(); ++y) {
                if (E[y].range != E[x].source || E[x].color >= E[y].color)
                    continue;
                for (std::size_t z = 0; z < E.size(); ++z) {
                    if (E[z].range != E[y].source || E[y].color >= E[z].color)
                        continue;
                    std::array<int, 3> left{int(x), int(y), int(z)};
                    std::array<int, 3> right = left;
                    auto step = [&](std::array<int, 3>& t, int pos) {
                        auto [p, q] = swap_pair(t[pos], t[pos + 1]);
                        t[pos] = p;
                        t[pos + 1] = q;
                    };
                    step(left, 0), step(left, 1), step(left, 0);
                    step(right, 1), step(right, 0), step(right, 1);
                    if (left != right)
                        add(0, "cube condition fails for (" + s_.edges[x].id + "," + s_.edges[y].id + "," +
                                   s_.edges[z].id + "): rewrites give (" + s_.edges[left[0]].id + "," +
                                   s_.edges[left[1]].id + "," + s_.edges[left[2]].id + ") and (" +
                                   s_.edges[right[0]].id + "," + s_.edges[right[1]].id + "," +
                                   s_.edges[right[2]].id + ")");
                }
            }
    }

    const Skeleton& s_;
    ValidationReport report_;
    std::map<std::string, int, std::less<>> vertex_ids_;
    Draft draft_;
    std::unordered_map<std::uint64_t, std::uint64_t> forward_;
    std::unordered_map<std::uint64_t, std::uint64_t> backward_;
    bool square_problems_ = false;
};

}  // namespace

bool ValidationReport::mentions(std::string_view fragment) const {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const Diagnostic& d) { return d.message.find(fragment) != std::string::npos; });
}

std::string ValidationReport::to_string() const {
    std::string out;
    for (const auto& d : issues) {
        if (d.line > 0)
            out += "line " + std::to_string(d.line) + ": ";
        out += d.message + "\n";
    }
    return out;
}

ValidationReport validate(const Skeleton& skeleton) {
    return Validator(skeleton).run();
}

InvalidKGraph::InvalidKGraph(ValidationReport report)
    : std::runtime_error("invalid k-graph:\n" + report.to_string()), report_(std::move(report)) {}

KGraph KGraph::build(const Skeleton& skeleton) {
    auto report = validate(skeleton);
    if (!report.ok())
        throw InvalidKGraph(std::move(report));

    KGraph g;
    g.rank_ = skeleton.rank;
    for (const auto& v : skeleton.vertices)
        g.vertices_.push_back(v.id);
    std::sort(g.vertices_.begin(), g.vertices_.end());

    std::vector<const EdgeDecl*> decls;
    for (const auto& e : skeleton.edges)
        decls.push_back(&e);
    std::sort(decls.begin(), decls.end(), [](auto* l, auto* r) { return l->id < r->id; });
    for (const auto* e : decls)
        g.edges_.push_back({e->id, e->color, *g.find_vertex(e->source), *g.find_vertex(e->range)});

    g.into_.assign(g.vertices_.size() * g.rank_, {});
    g.out_of_.assign(g.vertices_.size() * g.rank_, {});
    for (EdgeId e = 0; e < g.edges_.size(); ++e) {
        const auto& edge = g.edges_[e];
        g.into_[g.slot(edge.range, edge.color)].push_back(e);
        g.out_of_[g.slot(edge.source, edge.color)].push_back(e);
    }

    for (const auto& sq : skeleton.squares) {
        Square s{*g.find_edge(sq.a), *g.find_edge(sq.b), *g.find_edge(sq.c), *g.find_edge(sq.d)};
        g.squares_.push_back(s);
        g.rewrite_[pair_key(s.a, s.b)] = {s.c, s.d};
        g.rewrite_[pair_key(s.c, s.d)] = {s.a, s.b};
    }
    std::sort(g.squares_.begin(), g.squares_.end(),
              [](const Square& l, const Square& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });
    return g;
}

std::optional<VertexId> KGraph::find_vertex(std::string_view id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id)
        return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> KGraph::find_edge(std::string_view id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, std::string_view key) { return e.id < key; });
    if (it == edges_.end() || it->id != id)
        return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

std::span<const EdgeId> KGraph::edges_into(VertexId v, int color) const {
    if (color < 1 || color > rank_)
        throw std::out_of_range("color " + std::to_string(color) + " out of range");
    return into_.at(slot(v, color));
}

std::span<const EdgeId> KGraph::edges_out_of(VertexId v, int color) const {
    if (color < 1 || color > rank_)
        throw std::out_of_range("color " + std::to_string(color) + " out of range");
    return out_of_.at(slot(v, color));
}

std::pair<EdgeId, EdgeId> KGraph::commute(EdgeId first, EdgeId second) const {
    auto it = rewrite_.find(pair_key(first, second));
    if (it == rewrite_.end())
        throw std::invalid_argument("edges " + edge(first).id + "," + edge(second).id +
                                    " are not a composable pair of distinct colors");
    return it->second;
}

Skeleton KGraph::to_skeleton() const {
    Skeleton s;
    s.rank = rank_;
    for (const auto& v : vertices_)
        s.vertices.push_back({v});
    for (const auto& e : edges_)
        s.edges.push_back({e.id, e.color, vertices_[e.source], vertices_[e.range]});
    for (const auto& sq : squares_)
        s.squares.push_back({edges_[sq.a].id, edges_[sq.b].id, edges_[sq.c].id, edges_[sq.d].id});
    return s;
}

}  // namespace kg

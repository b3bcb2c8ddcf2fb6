#include "kgraph/structure.hpp"

#include <stdexcept>

namespace kg {

IntMatrix coordinate_matrix(const KGraph& g, int color) {
    if (color < 1 || color > g.rank())
        throw std::out_of_range("color " + std::to_string(color) + " out of range 1.." + std::to_string(g.rank()));
    IntMatrix m(g.vertex_count(), g.vertex_count());
    for (const auto& e : g.edges())
        if (e.color == color)
            m(e.source, e.range) += 1;
    return m;
}

IntMatrix count_paths(const KGraph& g, const Degree& n) {
    if (n.rank() != static_cast<std::size_t>(g.rank()))
        throw std::invalid_argument("degree " + n.to_string() + " has the wrong rank");
    IntMatrix out = IntMatrix::identity(g.vertex_count());
    for (int color = 1; color <= g.rank(); ++color) {
        IntMatrix m = coordinate_matrix(g, color);
        for (unsigned i = 0; i < n[color - 1]; ++i)
            out = out * m;
    }
    return out;
}

namespace {

std::vector<bool> reachable(const std::vector<std::vector<std::size_t>>& successors, std::size_t start) {
    std::vector<bool> seen(successors.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : successors[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

}  // namespace

bool is_strongly_connected(const std::vector<std::vector<std::size_t>>& successors) {
    if (successors.empty())
        return true;
    std::vector<std::vector<std::size_t>> reversed(successors.size());
    for (std::size_t v = 0; v < successors.size(); ++v)
        for (auto w : successors[v])
            reversed[w].push_back(v);
    auto fwd = reachable(successors, 0);
    auto bwd = reachable(reversed, 0);
    for (std::size_t v = 0; v < successors.size(); ++v)
        if (!fwd[v] || !bwd[v])
            return false;
    return true;
}

StructuralReport structural_report(const KGraph& g) {
    StructuralReport report;
    report.no_sources = true;
    report.no_sinks = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (int c = 1; c <= g.rank(); ++c) {
            if (g.edges_into(v, c).empty())
                report.no_sources = false;
            if (g.edges_out_of(v, c).empty())
                report.no_sinks = false;
        }
    // v Λ w nonempty means w reaches v walking edges from range to source
    std::vector<std::vector<std::size_t>> successors(g.vertex_count());
    for (const auto& e : g.edges())
        successors[e.range].push_back(e.source);
    report.strongly_connected = is_strongly_connected(successors);
    return report;
}

}  // namespace kg

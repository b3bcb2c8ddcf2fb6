#pragma once

#include "kgraph/degree.hpp"
#include "kgraph/int_matrix.hpp"
#include "kgraph/kgraph.hpp"

#include <string>
#include <vector>

namespace kg {

/// (M_i)_{v,w} = |w Λ^{e_i} v|: row = source, column = range, canonical vertex order.
IntMatrix coordinate_matrix(const KGraph& g, int color);

/// Entry (v,w) = |w Λ^n v|, computed as M_1^{n_1} ... M_k^{n_k}.
IntMatrix count_paths(const KGraph& g, const Degree& n);

struct StructuralReport {
    bool row_finite = true;
    bool no_sources = false;
    bool no_sinks = false;
    bool strongly_connected = false;
    bool finite = true;
};

StructuralReport structural_report(const KGraph& g);

/// Directed graph on 0..n-1 given as successor lists. An empty graph counts as strongly connected.
bool is_strongly_connected(const std::vector<std::vector<std::size_t>>& successors);

}  // namespace kg

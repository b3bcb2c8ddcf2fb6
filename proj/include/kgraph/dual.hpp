#pragma once

#include "kgraph/degree.hpp"
#include "kgraph/int_matrix.hpp"
#include "kgraph/kgraph.hpp"
#include "kgraph/path.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kg {

/// The dual graph pΛ together with the Λ-path each of its vertices and edges stands for.
struct DualGraph {
    KGraph graph;
    Degree p;
    std::vector<Path> vertex_origin;  // indexed by dual VertexId, each of degree p
    std::vector<Path> edge_origin;    // indexed by dual EdgeId, degree p + e_colour
};

struct DualLimits {
    std::size_t max_vertices = 20000;
};

class DualTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertices Λ^p, colour-i edges Λ^{p+e_i} with r_p(λ) = λ(0,p) and s_p(λ) = λ(e_i, p+e_i),
/// squares from Λ^{p+e_i+e_j}. Names are path_name() of the underlying Λ-path, so
/// dual(g, 0) is canonically identical to g.
DualGraph dual(const KGraph& g, const Degree& p, DualLimits limits = {});

/// The Λ-path underlying a path in pΛ: edges are glued with λ ∘_p μ = λ μ(p, d(μ)).
Path lift_to_base(const KGraph& base, const DualGraph& dual, const Path& dual_path);

struct DualComparison {
    bool equal = false;
    std::string iterated;  // serialize(q(pΛ)) after renaming to Λ-paths
    std::string direct;    // serialize((p+q)Λ)
};

/// Builds q(pΛ), renames every vertex/edge to its underlying Λ-path and compares the
/// canonical serialisation with that of (p+q)Λ.
DualComparison compare_iterated_dual(const KGraph& g, const Degree& p, const Degree& q, DualLimits limits = {});

bool iterated_dual_equal(const KGraph& g, const Degree& p, const Degree& q, DualLimits limits = {});

/// coordinate_matrix(dual(g,p), i)
IntMatrix dual_matrix(const KGraph& g, const Degree& p, int color, DualLimits limits = {});

}  // namespace kg

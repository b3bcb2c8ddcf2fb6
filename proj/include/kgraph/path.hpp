#pragma once

#include "kgraph/degree.hpp"
#include "kgraph/kgraph.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kg {

/// A morphism in colour-nondecreasing normal form. Edges read from the range end:
/// edges[0] has range `range`, and s(edges[i]) = r(edges[i+1]).
struct Path {
    VertexId range = 0;
    VertexId source = 0;
    Degree degree;
    std::vector<EdgeId> edges;

    bool is_vertex() const { return edges.empty(); }
    friend bool operator==(const Path&, const Path&) = default;
};

Path identity_path(const KGraph& g, VertexId v);
Path edge_path(const KGraph& g, EdgeId e);

/// Normal form of a composable edge sequence. Throws std::invalid_argument on
/// non-composable or empty input.
Path normalize(const KGraph& g, std::span<const EdgeId> raw);

/// λμ, requires s(λ) = r(μ).
Path compose(const KGraph& g, const Path& lambda, const Path& mu);

/// λ(m,n) for 0 <= m <= n <= d(λ).
Path segment(const KGraph& g, const Path& lambda, const Degree& m, const Degree& n);

/// The factorisation of a path into the given colour sequence (whose colour
/// multiset must match the path's degree).
std::vector<EdgeId> reorder(const KGraph& g, std::span<const EdgeId> edges, std::span<const int> colors);

/// Edge ids joined by '.', or the vertex id for a degree-0 path.
std::string path_name(const KGraph& g, const Path& path);

class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest coordinate an enumerated degree may have: KG_ENUM_CAP, default 8.
unsigned enumeration_cap();
/// Throws EnumerationCapExceeded if any coordinate of n exceeds enumeration_cap().
void check_enumeration_cap(const Degree& n);

/// Calls visit on every path in vΛ^n in lexicographic edge-index order; stops early
/// when visit returns false. Returns false iff stopped early.
bool for_each_path_from(const KGraph& g, VertexId v, const Degree& n, const std::function<bool(const Path&)>& visit);

/// vΛ^n
std::vector<Path> paths_from(const KGraph& g, VertexId v, const Degree& n);
/// Λ^n, grouped by range in vertex order.
std::vector<Path> paths_of_degree(const KGraph& g, const Degree& n);

}  // namespace kg

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    std::string id;
    int color = 0;  // 1..k
    VertexId source = 0;
    VertexId range = 0;
};

/// Factorisation square a·b = c·d with colour(a) = colour(d) = i < j = colour(b) = colour(c).
struct Square {
    EdgeId a = 0;
    EdgeId b = 0;
    EdgeId c = 0;
    EdgeId d = 0;
    friend bool operator==(const Square&, const Square&) = default;
};

// Unvalidated, name-based input. `line` is 0 when the declaration has no source line.

struct VertexDecl {
    std::string id;
    int line = 0;
};

struct EdgeDecl {
    std::string id;
    int color = 0;
    std::string source;
    std::string range;
    int line = 0;
};

struct SquareDecl {
    std::string a, b, c, d;
    int line = 0;
};

struct Skeleton {
    int rank = 0;
    std::vector<VertexDecl> vertices;
    std::vector<EdgeDecl> edges;
    std::vector<SquareDecl> squares;
};

struct Diagnostic {
    int line = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<Diagnostic> issues;

    bool ok() const { return issues.empty(); }
    bool mentions(std::string_view fragment) const;
    /// One issue per line, prefixed with "line N: " when the line is known.
    std::string to_string() const;
};

/// Every violated invariant of the presented k-graph: dangling endpoints, duplicate ids,
/// colour errors, malformed/missing/duplicate squares, non-bijective square maps and,
/// for k >= 3, failures of the cube (associativity) condition. Never throws.
ValidationReport validate(const Skeleton& skeleton);

class InvalidKGraph : public std::runtime_error {
public:
    explicit InvalidKGraph(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// A validated finite k-graph presented by its skeleton and factorisation squares.
/// Vertices and edges are indexed in lexicographic order of their ids.
class KGraph {
public:
    /// Throws InvalidKGraph if validate() reports anything.
    static KGraph build(const Skeleton& skeleton);

    int rank() const { return rank_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const std::string> vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }
    const std::vector<Square>& squares() const { return squares_; }

    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    std::optional<VertexId> find_vertex(std::string_view id) const;
    std::optional<EdgeId> find_edge(std::string_view id) const;

    /// Edges of the given colour with range v, ascending.
    std::span<const EdgeId> edges_into(VertexId v, int color) const;
    /// Edges of the given colour with source v, ascending.
    std::span<const EdgeId> edges_out_of(VertexId v, int color) const;

    /// Refactors the composable bichromatic pair (first, second) into the other colour order.
    std::pair<EdgeId, EdgeId> commute(EdgeId first, EdgeId second) const;

    Skeleton to_skeleton() const;

private:
    KGraph() = default;
    std::size_t slot(VertexId v, int color) const { return static_cast<std::size_t>(v) * rank_ + (color - 1); }

    int rank_ = 0;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<Square> squares_;
    std::vector<std::vector<EdgeId>> into_;
    std::vector<std::vector<EdgeId>> out_of_;
    std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> rewrite_;
};

}  // namespace kg

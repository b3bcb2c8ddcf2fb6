#pragma once

#include "kgraph/degree.hpp"
#include "kgraph/kgraph.hpp"
#include "kgraph/path.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kg {

/// Vertex labelling of the lattice interval [0, shape]. Letters are stored in
/// mixed-radix order with the first coordinate most significant.
struct Word {
    Degree shape;
    std::vector<VertexId> letters;

    VertexId at(const Degree& l) const;
    friend bool operator==(const Word&, const Word&) = default;
};

std::size_t lattice_size(const Degree& shape);
std::size_t lattice_index(const Degree& shape, const Degree& l);
Degree lattice_point(const Degree& shape, std::size_t index);

/// All coordinate matrices are {0,1}.
bool has_binary_matrices(const KGraph& g);

/// s(λ(0,l)) at every l <= d(λ). Requires {0,1} coordinate matrices.
Word word_of_path(const KGraph& g01, const Path& lambda);

/// M_j(w(l+e_j), w(l)) = 1 wherever both points lie in [0, shape].
bool is_allowable(const KGraph& g01, const Word& w);

/// Inverse of word_of_path. Throws std::invalid_argument if w is not allowable, or
/// if it is allowable but not the word of any path (possible only when some
/// product M_i M_j has entries above 1).
Path path_of_word(const KGraph& g01, const Word& w);

/// Vertex s(λ(0,n)).
VertexId vertex_at(const KGraph& g, const Path& lambda, const Degree& n);

using Offset = std::array<int, 2>;

std::string offset_string(const Offset& m);
/// Order on Z^2 \ {0}: by max-norm, then lexicographically.
bool shell_less(const Offset& a, const Offset& b);
/// Every m != 0 with max-norm <= bound, in shell order.
std::vector<Offset> offset_window(unsigned bound);

struct Witness {
    Path path;        // λ_m
    Degree position;  // l_m; w(l_m) != w(l_m + m)
};

enum class H3Verdict { pass_on_window, fail };

struct RSOptions {
    unsigned h3_bound = 3;
    Degree h3_margin{2, 2};
};

struct RSReport {
    bool h0 = false;
    bool h1a = false;
    bool h1b = false;
    bool h2 = false;
    unsigned h3_bound = 0;
    Degree h3_margin;
    std::vector<Offset> h3_window;
    std::vector<Offset> h3_failures;
    std::map<Offset, Witness> witnesses;
    H3Verdict h3_verdict = H3Verdict::fail;

    bool h0_to_h2() const { return h0 && h1a && h1b && h2; }
};

/// Search shape for m: (m+ v m-) + margin.
Degree h3_search_shape(const Offset& m, const Degree& margin);

/// First path (in enumeration order) of the search shape whose word separates m, if any.
std::optional<Witness> find_h3_witness(const KGraph& g01, const Offset& m, const Degree& margin);

/// (H0)-(H2) exactly, (H3) on the window |m|_inf <= h3_bound. Requires a 2-graph with
/// {0,1} coordinate matrices.
RSReport check_rs(const KGraph& g01, const RSOptions& options = {});

/// Self-test: (H2) for dual(g, 1) agrees with strong connectivity of g.
bool h2_iff_strongly_connected(const KGraph& g);

/// Finite prefix τ_1 τ_2 ... τ_count of the infinite path built from witnesses,
/// τ_i = ρ_1 ... ρ_i, ρ_i = α_i λ_{m_i} β_i.
struct AperiodicPrefix {
    VertexId base = 0;
    std::vector<Offset> listing;  // witnessed m in shell order; m_i = listing[(i-1) % size]
    std::size_t count = 0;
    std::vector<Path> alpha, lambda, beta, rho;  // indexed by i - 1
    std::vector<Degree> position;                // l_{m_i}
    std::vector<std::size_t> pieces;             // flattened ρ indices making up x
    std::vector<Degree> piece_start;             // degree offset of each flattened piece
    Path prefix;
};

/// Throws std::invalid_argument on a bad witness or when no connector exists.
AperiodicPrefix aperiodic_prefix(const KGraph& g01, const std::map<Offset, Witness>& witnesses, std::size_t count);

/// x(n) for n within the prefix, read from the piece containing n.
VertexId prefix_letter(const KGraph& g01, const AperiodicPrefix& x, const Degree& n);

struct SeparationCheck {
    Degree s, t;
    Degree offset;  // N(s,t)
    VertexId letter_s = 0;
    VertexId letter_t = 0;

    bool separated() const { return letter_s != letter_t; }
};

/// N(s,t) = d(τ_1..τ_{K-1}) + d(ρ_1..ρ_{I-1}) + d(α_I) + l_{t-s} - s, when t - s is
/// listed and K = max(I, J+1) <= count.
std::optional<Degree> separation_offset(const AperiodicPrefix& x, const Degree& s, const Degree& t);

/// Every covered pair s != t in [0,bound]^2 with σ^s(x)(N) and σ^t(x)(N) read off the prefix.
std::vector<SeparationCheck> separation_checks(const KGraph& g01, const AperiodicPrefix& x, unsigned bound);

}  // namespace kg

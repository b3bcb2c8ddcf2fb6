#pragma once

#include "kgraph/degree.hpp"
#include "kgraph/int_matrix.hpp"
#include "kgraph/kgraph.hpp"
#include "kgraph/snf.hpp"
#include "kgraph/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kg {

enum class KMode { dual, direct };

std::string mode_name(KMode mode);
KMode parse_mode(const std::string& text);

struct KHypotheses {
    bool finite = true;
    bool no_sources = false;
    bool no_sinks = false;
    bool strongly_connected = false;
    bool aperiodic_on_window = false;
    unsigned h3_bound = 0;
    Degree h3_margin;
    std::vector<Offset> h3_failures;
};

struct KTheoryResult {
    KMode mode = KMode::dual;
    Degree p;  // dual mode only
    std::size_t k0_rank = 0;
    std::size_t k1_rank = 0;
    std::vector<Integer> k0_torsion;
    std::vector<Integer> k1_torsion;
    std::optional<KHypotheses> hypotheses;

    /// "K0 = Z^2 (+) Z/2"
    std::string k0_string() const;
    std::string k1_string() const;
};

struct KTheoryOptions {
    KMode mode = KMode::dual;
    std::optional<Degree> p;  // defaults to (1,1)
    bool check_hypotheses = true;
    RSOptions rs;
};

class KTheoryPreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// [I - M_1   I - M_2]
IntMatrix k_block(const IntMatrix& m1, const IntMatrix& m2);

/// K-groups from coordinate matrices: ranks from both blocks, K0 torsion from the
/// untransposed block, K1 torsion from the transposed one.
KTheoryResult k_groups_from_matrices(const IntMatrix& m1, const IntMatrix& m2);

/// Requires a finite 2-graph with no sinks or sources. Dual mode uses the matrices of pΛ
/// (default p = (1,1)); direct mode those of Λ itself.
KTheoryResult k_groups(const KGraph& g, const KTheoryOptions& options = {});

/// Whether the hypotheses of the structure theorem hold; K-groups are computed regardless.
struct QualificationReport {
    KHypotheses hypotheses;
    bool h0_to_h2 = false;
    bool conclusion_applies = false;
    std::string text;
};

QualificationReport qualifies_rs(const KGraph& g, const RSOptions& rs = {});

/// Dual-mode and direct-mode results agree on ranks and torsion.
bool mode_agreement(const KGraph& g);

}  // namespace kg

#include "kgraph/ktheory.hpp"

#include "kgraph/dual.hpp"
#include "kgraph/structure.hpp"

#include <sstream>

namespace kg {

namespace {

std::string group_string(std::size_t rank, const std::vector<Integer>& torsion) {
    return CokernelResult{rank, torsion}.to_string();
}

}  // namespace

std::string mode_name(KMode mode) {
    return mode == KMode::dual ? "dual" : "direct";
}

KMode parse_mode(const std::string& text) {
    if (text == "dual")
        return KMode::dual;
    if (text == "direct")
        return KMode::direct;
    throw std::invalid_argument("unknown mode '" + text + "' (expected dual or direct)");
}

std::string KTheoryResult::k0_string() const {
    return "K0 = " + group_string(k0_rank, k0_torsion);
}

std::string KTheoryResult::k1_string() const {
    return "K1 = " + group_string(k1_rank, k1_torsion);
}

IntMatrix k_block(const IntMatrix& m1, const IntMatrix& m2) {
    IntMatrix id = IntMatrix::identity(m1.rows());
    return IntMatrix::hconcat(id - m1, id - m2);
}

KTheoryResult k_groups_from_matrices(const IntMatrix& m1, const IntMatrix& m2) {
    CokernelResult plain = cokernel(k_block(m1, m2));
    CokernelResult transposed = cokernel(k_block(m1.transpose(), m2.transpose()));
    KTheoryResult out;
    out.k0_rank = out.k1_rank = plain.free_rank + transposed.free_rank;
    out.k0_torsion = plain.torsion;
    out.k1_torsion = transposed.torsion;
    return out;
}

namespace {

KHypotheses gather_hypotheses(const KGraph& g, const RSOptions& rs) {
    auto structure = structural_report(g);
    KHypotheses h;
    h.finite = structure.finite;
    h.no_sources = structure.no_sources;
    h.no_sinks = structure.no_sinks;
    h.strongly_connected = structure.strongly_connected;
    h.h3_bound = rs.h3_bound;
    h.h3_margin = rs.h3_margin;
    if (structure.no_sources) {
        auto report = check_rs(dual(g, Degree::ones(2)).graph, rs);
        h.aperiodic_on_window = report.h3_verdict == H3Verdict::pass_on_window;
        h.h3_failures = report.h3_failures;
    }
    return h;
}

}  // namespace

KTheoryResult k_groups(const KGraph& g, const KTheoryOptions& options) {
    if (g.rank() != 2)
        throw KTheoryPreconditionError("K-theory formulas are implemented for 2-graphs");
    auto structure = structural_report(g);
    if (!structure.no_sources || !structure.no_sinks)
        throw KTheoryPreconditionError("K-theory formulas need a finite 2-graph with no sinks or sources");

    KTheoryResult out;
    if (options.mode == KMode::dual) {
        Degree p = options.p.value_or(Degree::ones(2));
        auto pg = dual(g, p);
        out = k_groups_from_matrices(coordinate_matrix(pg.graph, 1), coordinate_matrix(pg.graph, 2));
        out.p = p;
    } else {
        out = k_groups_from_matrices(coordinate_matrix(g, 1), coordinate_matrix(g, 2));
    }
    out.mode = options.mode;
    if (options.check_hypotheses)
        out.hypotheses = gather_hypotheses(g, options.rs);
    return out;
}

QualificationReport qualifies_rs(const KGraph& g, const RSOptions& rs) {
    QualificationReport q;
    std::ostringstream text;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    if (g.rank() != 2) {
        text << "not a 2-graph (rank " << g.rank() << "); the structure theorem does not apply\n";
        q.text = text.str();
        return q;
    }
    q.hypotheses = gather_hypotheses(g, rs);
    const auto& h = q.hypotheses;
    if (h.no_sources)
        q.h0_to_h2 = check_rs(dual(g, Degree::ones(2)).graph, RSOptions{0, rs.h3_margin}).h0_to_h2();

    text << "finite: " << yes(h.finite) << "\n";
    text << "no sources: " << yes(h.no_sources) << "\n";
    text << "no sinks: " << yes(h.no_sinks) << "\n";
    text << "strongly connected: " << yes(h.strongly_connected) << "\n";
    if (h.no_sources) {
        text << "aperiodicity (H3 on window |m| <= " << h.h3_bound << ", margin " << h.h3_margin.to_string()
             << "): " << (h.aperiodic_on_window ? "pass-on-window" : "fail");
        if (!h.h3_failures.empty()) {
            text << " (no witness for";
            for (const auto& m : h.h3_failures)
                text << " " << offset_string(m);
            text << ")";
        }
        text << "\n";
    } else {
        text << "aperiodicity: not checked (graph has sources)\n";
    }
    q.conclusion_applies = h.finite && h.strongly_connected && h.no_sources && h.aperiodic_on_window;
    if (q.conclusion_applies)
        text << "all hypotheses hold on the checked window: C*(graph) is purely infinite, simple, unital and "
                "nuclear, and is classified by its K-groups\n";
    else
        text << "hypotheses not all met: the structural conclusion is not asserted";
    if (!q.conclusion_applies)
        text << (h.no_sources && h.no_sinks ? "; K-group formulas still apply (no sinks or sources)\n"
                                            : "; K-group formulas need no sinks or sources\n");
    q.text = text.str();
    return q;
}

bool mode_agreement(const KGraph& g) {
    KTheoryOptions dual_mode;
    dual_mode.check_hypotheses = false;
    KTheoryOptions direct_mode = dual_mode;
    direct_mode.mode = KMode::direct;
    auto a = k_groups(g, dual_mode);
    auto b = k_groups(g, direct_mode);
    return a.k0_rank == b.k0_rank && a.k1_rank == b.k1_rank && a.k0_torsion == b.k0_torsion &&
           a.k1_torsion == b.k1_torsion;
}

}  // namespace kg

#include "kgraph/dual.hpp"
#include "kgraph/io.hpp"
#include "kgraph/ktheory.hpp"
#include "kgraph/path.hpp"
#include "kgraph/structure.hpp"
#include "kgraph/words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kValidationFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

kg::Degree degree_arg(const std::string& text, int rank, const char* flag) {
    kg::Degree d;
    try {
        d = kg::Degree::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(flag) + ": expected comma-separated non-negative integers, got '" + text + "'");
    }
    if (static_cast<int>(d.rank()) != rank)
        throw UsageError(std::string(flag) + ": expected " + std::to_string(rank) + " coordinates, got '" + text + "'");
    return d;
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

std::string torsion_list(const std::vector<kg::Integer>& t) {
    std::string out;
    for (const auto& x : t)
        out += (out.empty() ? "" : ",") + x.str();
    return out.empty() ? "none" : out;
}

// Edge ids separated by spaces; dual edge ids contain '.' themselves.
std::string path_text(const kg::KGraph& g, const kg::Path& p) {
    if (p.is_vertex())
        return "[" + g.vertex_name(p.range) + "]";
    std::string out;
    for (auto e : p.edges)
        out += (out.empty() ? "[" : " ") + g.edge(e).id;
    return out + "]";
}

void print_matrices(std::ostream& out, const kg::KGraph& g) {
    for (int i = 1; i <= g.rank(); ++i)
        out << "M" << i << " = " << kg::coordinate_matrix(g, i).to_string() << "\n";
}

int cmd_validate(const std::string& file) {
    auto g = kg::load_kgraph(file);
    std::cout << "valid " << g.rank() << "-graph: " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges, " << g.squares().size() << " squares\n";
    return 0;
}

int cmd_info(const std::string& file) {
    auto g = kg::load_kgraph(file);
    auto r = kg::structural_report(g);
    std::cout << "rank = " << g.rank() << "\n";
    std::cout << "vertices = " << g.vertex_count() << "\n";
    std::cout << "edges = " << g.edge_count() << "\n";
    std::cout << "squares = " << g.squares().size() << "\n";
    std::cout << "finite = " << yes_no(r.finite) << "\n";
    std::cout << "row_finite = " << yes_no(r.row_finite) << "\n";
    std::cout << "no_sources = " << yes_no(r.no_sources) << "\n";
    std::cout << "no_sinks = " << yes_no(r.no_sinks) << "\n";
    std::cout << "strongly_connected = " << yes_no(r.strongly_connected) << "\n";
    std::cout << "vertex_order =";
    for (const auto& v : g.vertices())
        std::cout << " " << v;
    std::cout << "\n";
    print_matrices(std::cout, g);
    return 0;
}

int cmd_dual(const std::string& file, const std::string& p_text, const std::string& out_file) {
    auto g = kg::load_kgraph(file);
    auto d = kg::dual(g, degree_arg(p_text, g.rank(), "--p"));
    std::string text = kg::serialize_kgraph(d.graph);
    if (out_file.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!(out << text))
        throw std::runtime_error("cannot write " + out_file);
    return 0;
}

int cmd_matrices(const std::string& file, const std::string& p_text) {
    auto g = kg::load_kgraph(file);
    if (p_text.empty()) {
        print_matrices(std::cout, g);
        return 0;
    }
    auto d = kg::dual(g, degree_arg(p_text, g.rank(), "--dual"));
    print_matrices(std::cout, d.graph);
    return 0;
}

int cmd_rs_check(const std::string& file, unsigned bound, const std::string& margin_text) {
    auto g = kg::load_kgraph(file);
    if (g.rank() != 2)
        throw kg::KTheoryPreconditionError("rs-check needs a 2-graph");
    kg::RSOptions options{bound, degree_arg(margin_text, 2, "--h3-margin")};
    kg::KGraph target = g;
    if (!kg::has_binary_matrices(g)) {
        if (!kg::structural_report(g).no_sources)
            throw kg::KTheoryPreconditionError(
                "coordinate matrices are not {0,1} and the graph has sources, so its (1,1)-dual cannot be used");
        target = kg::dual(g, kg::Degree::ones(2)).graph;
        std::cout << "coordinate matrices are not {0,1}: checking the (1,1)-dual\n";
    }
    auto report = kg::check_rs(target, options);
    std::cout << "H0 = " << yes_no(report.h0) << "\n";
    std::cout << "H1a = " << yes_no(report.h1a) << "\n";
    std::cout << "H1b = " << yes_no(report.h1b) << "\n";
    std::cout << "H2 = " << yes_no(report.h2) << "\n";
    std::cout << "H3 = " << (report.h3_verdict == kg::H3Verdict::pass_on_window ? "pass-on-window" : "fail")
              << " (window " << report.h3_bound << ", margin " << report.h3_margin.to_string() << ")\n";
    for (const auto& m : report.h3_window) {
        auto it = report.witnesses.find(m);
        std::cout << "  m = " << kg::offset_string(m) << ": ";
        if (it == report.witnesses.end())
            std::cout << "no witness\n";
        else
            std::cout << "witness " << path_text(target, it->second.path) << " at "
                      << it->second.position.to_string() << "\n";
    }
    return 0;
}

int cmd_ktheory(const std::string& file, const std::string& mode_text, const std::string& p_text) {
    auto g = kg::load_kgraph(file);
    kg::KTheoryOptions options;
    try {
        options.mode = kg::parse_mode(mode_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--mode: ") + e.what());
    }
    if (!p_text.empty()) {
        if (options.mode == kg::KMode::direct)
            throw UsageError("--p only applies to --mode dual");
        options.p = degree_arg(p_text, g.rank(), "--p");
    }
    auto result = kg::k_groups(g, options);
    auto qualification = kg::qualifies_rs(g, options.rs);

    std::cout << result.k0_string() << "\n" << result.k1_string() << "\n\n";
    std::cout << qualification.text << "\n";
    std::cout << "mode = " << kg::mode_name(result.mode) << "\n";
    if (result.mode == kg::KMode::dual)
        std::cout << "p = " << result.p.to_string() << "\n";
    std::cout << "k0_rank = " << result.k0_rank << "\n";
    std::cout << "k0_torsion = " << torsion_list(result.k0_torsion) << "\n";
    std::cout << "k1_rank = " << result.k1_rank << "\n";
    std::cout << "k1_torsion = " << torsion_list(result.k1_torsion) << "\n";
    std::cout << "conclusion_applies = " << yes_no(qualification.conclusion_applies) << "\n";
    return 0;
}

int cmd_paths(const std::string& file, const std::string& from, const std::string& degree_text) {
    auto g = kg::load_kgraph(file);
    auto v = g.find_vertex(from);
    if (!v)
        throw UsageError("--from: no vertex '" + from + "'");
    auto paths = kg::paths_from(g, *v, degree_arg(degree_text, g.rank(), "--degree"));
    for (const auto& p : paths)
        std::cout << path_text(g, p) << " : " << g.vertex_name(p.range) << " <- " << g.vertex_name(p.source)
                  << "\n";
    std::cout << "count = " << paths.size() << "\n";
    return 0;
}

int cmd_compare(const std::string& file, const std::string& p_text, const std::string& q_text) {
    auto g = kg::load_kgraph(file);
    auto result = kg::compare_iterated_dual(g, degree_arg(p_text, g.rank(), "--p"), degree_arg(q_text, g.rank(), "--q"));
    std::cout << "equal = " << yes_no(result.equal) << "\n";
    if (!result.equal)
        std::cout << "--- iterated\n" << result.iterated << "--- direct\n" << result.direct;
    return result.equal ? 0 : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite k-graphs: validation, duals, Robertson-Steger checks and K-theory"};
    app.require_subcommand(1);
    std::string file, out_file, p_text, q_text, mode_text = "dual", margin_text = "2,2", from, degree_text;
    unsigned bound = 3;
    std::function<int()> run;

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "k-graph file")->required(); };

    auto* validate = app.add_subcommand("validate", "check a k-graph file");
    add_file(validate);
    validate->callback([&] { run = [&] { return cmd_validate(file); }; });

    auto* info = app.add_subcommand("info", "structural report and coordinate matrices");
    add_file(info);
    info->callback([&] { run = [&] { return cmd_info(file); }; });

    auto* dual = app.add_subcommand("dual", "write the dual graph pΛ");
    add_file(dual);
    dual->add_option("--p", p_text, "degree p, e.g. 1,1")->required();
    dual->add_option("-o,--output", out_file, "output file (default stdout)");
    dual->callback([&] { run = [&] { return cmd_dual(file, p_text, out_file); }; });

    auto* matrices = app.add_subcommand("matrices", "coordinate matrices");
    add_file(matrices);
    matrices->add_option("--dual", p_text, "use the dual graph pΛ");
    matrices->callback([&] { run = [&] { return cmd_matrices(file, p_text); }; });

    auto* rs = app.add_subcommand("rs-check", "Robertson-Steger hypotheses (H0)-(H3)");
    add_file(rs);
    rs->add_option("--h3-bound", bound, "check (H3) for |m|_inf <= B");
    rs->add_option("--h3-margin", margin_text, "extra word shape beyond m+ v m-");
    rs->callback([&] { run = [&] { return cmd_rs_check(file, bound, margin_text); }; });

    auto* ktheory = app.add_subcommand("ktheory", "K0 and K1 of a finite 2-graph");
    add_file(ktheory);
    ktheory->add_option("--mode", mode_text, "dual or direct");
    ktheory->add_option("--p", p_text, "dual degree (default 1,1)");
    ktheory->callback([&] { run = [&] { return cmd_ktheory(file, mode_text, p_text); }; });

    auto* paths = app.add_subcommand("paths", "list vΛ^n");
    add_file(paths);
    paths->add_option("--from", from, "range vertex v")->required();
    paths->add_option("--degree", degree_text, "degree n")->required();
    paths->callback([&] { run = [&] { return cmd_paths(file, from, degree_text); }; });

    auto* compare = app.add_subcommand("compare-duals", "compare q(pΛ) with (p+q)Λ");
    add_file(compare);
    compare->add_option("--p", p_text, "inner degree")->required();
    compare->add_option("--q", q_text, "outer degree")->required();
    compare->callback([&] { run = [&] { return cmd_compare(file, p_text, q_text); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const kg::ParseError& e) {
        for (const auto& d : e.diagnostics())
            std::cerr << file << ":" << (d.line > 0 ? std::to_string(d.line) + ": " : std::string(" ")) << d.message
                      << "\n";
        return kValidationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
}

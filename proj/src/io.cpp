#include "kgraph/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace kg {

namespace {

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (const auto& d : diagnostics) {
        if (d.line > 0)
            out += "line " + std::to_string(d.line) + ": ";
        out += d.message + "\n";
    }
    return out;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool parse_int(std::string_view token, int& value) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Skeleton parse_skeleton(std::string_view text) {
    Skeleton s;
    std::vector<Diagnostic> errors;
    bool seen_header = false;
    bool seen_rank = false;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tok = tokenize(line);
        if (tok.empty())
            continue;

        auto arity = [&](std::size_t n, const char* usage) {
            if (tok.size() == n)
                return true;
            errors.push_back({line_no, "expected '" + std::string(usage) + "'"});
            return false;
        };

        if (!seen_header) {
            if (tok[0] != "kgraph") {
                errors.push_back({line_no, "expected header 'kgraph 1'"});
                throw ParseError(std::move(errors));
            }
            seen_header = true;
            if (tok.size() != 2 || tok[1] != "1")
                errors.push_back({line_no, "unsupported format version (expected 'kgraph 1')"});
            continue;
        }

        if (tok[0] == "k") {
            if (!arity(2, "k <rank>"))
                continue;
            if (seen_rank) {
                errors.push_back({line_no, "duplicate rank line"});
                continue;
            }
            seen_rank = true;
            if (!parse_int(tok[1], s.rank) || s.rank < 1)
                errors.push_back({line_no, "rank must be a positive integer"});
        } else if (tok[0] == "vertex") {
            if (arity(2, "vertex <id>"))
                s.vertices.push_back({std::string(tok[1]), line_no});
        } else if (tok[0] == "edge") {
            if (!arity(5, "edge <id> <color> <source> <range>"))
                continue;
            EdgeDecl e{std::string(tok[1]), 0, std::string(tok[3]), std::string(tok[4]), line_no};
            if (!parse_int(tok[2], e.color)) {
                errors.push_back({line_no, "edge color '" + std::string(tok[2]) + "' is not an integer"});
                continue;
            }
            s.edges.push_back(std::move(e));
        } else if (tok[0] == "square") {
            if (arity(5, "square <a> <b> <c> <d>"))
                s.squares.push_back(
                    {std::string(tok[1]), std::string(tok[2]), std::string(tok[3]), std::string(tok[4]), line_no});
        } else {
            errors.push_back({line_no, "unknown keyword '" + std::string(tok[0]) + "'"});
        }
    }

    if (!seen_header)
        errors.push_back({0, "missing header 'kgraph 1'"});
    else if (!seen_rank)
        errors.push_back({0, "missing rank line 'k <rank>'"});
    if (!errors.empty())
        throw ParseError(std::move(errors));
    return s;
}

KGraph parse_kgraph(std::string_view text) {
    Skeleton s = parse_skeleton(text);
    auto report = validate(s);
    if (!report.ok())
        throw ParseError(std::move(report.issues));
    return KGraph::build(s);
}

KGraph load_kgraph(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_kgraph(buffer.str());
}

std::string serialize_kgraph(const KGraph& g) {
    std::string out = "kgraph 1\nk " + std::to_string(g.rank()) + "\n";
    for (const auto& v : g.vertices())
        out += "vertex " + v + "\n";
    for (const auto& e : g.edges())
        out += "edge " + e.id + " " + std::to_string(e.color) + " " + g.vertex_name(e.source) + " " +
               g.vertex_name(e.range) + "\n";
    for (const auto& sq : g.squares())
        out += "square " + g.edge(sq.a).id + " " + g.edge(sq.b).id + " " + g.edge(sq.c).id + " " +
               g.edge(sq.d).id + "\n";
    return out;
}

}  // namespace kg

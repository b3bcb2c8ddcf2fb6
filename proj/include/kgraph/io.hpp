#pragma once

#include "kgraph/kgraph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kg {

/// Parse or validation failure with line-numbered diagnostics.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Line-oriented format:
///
///     kgraph 1
///     k <rank>
///     vertex <id>
///     edge <id> <color> <source> <range>
///     square <a> <b> <c> <d>
///
/// '#' starts a comment. Only syntax is checked here.
Skeleton parse_skeleton(std::string_view text);

/// parse_skeleton followed by validation; all diagnostics are reported together.
KGraph parse_kgraph(std::string_view text);

KGraph load_kgraph(const std::filesystem::path& file);

/// Canonical text: ids sorted, squares sorted by their (a,b) pair.
std::string serialize_kgraph(const KGraph& g);

}  // namespace kg

#include "kgraph/degree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace kg {

namespace {

void require_same_rank(const Degree& a, const Degree& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("degree rank mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

Degree Degree::unit(std::size_t rank, int color) {
    if (color < 1 || static_cast<std::size_t>(color) > rank)
        throw std::out_of_range("color " + std::to_string(color) + " out of range 1.." + std::to_string(rank));
    Degree d(rank);
    d[color - 1] = 1;
    return d;
}

Degree Degree::ones(std::size_t rank) {
    return Degree(std::vector<value_type>(rank, 1));
}

Degree Degree::parse(std::string_view text) {
    std::vector<value_type> coords;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        value_type value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw std::invalid_argument("malformed degree '" + std::string(text) + "'");
        coords.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Degree(std::move(coords));
}

std::uint64_t Degree::total() const {
    return std::accumulate(coords_.begin(), coords_.end(), std::uint64_t{0});
}

bool Degree::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
}

Degree& Degree::operator+=(const Degree& other) {
    require_same_rank(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

Degree& Degree::operator-=(const Degree& other) {
    require_same_rank(*this, other);
    if (!leq(other, *this))
        throw std::domain_error("degree subtraction " + to_string() + " - " + other.to_string() + " leaves N^k");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

std::string Degree::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(coords_[i]);
    }
    return out + ")";
}

bool leq(const Degree& a, const Degree& b) {
    require_same_rank(a, b);
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Degree join(const Degree& a, const Degree& b) {
    require_same_rank(a, b);
    Degree out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

Degree meet(const Degree& a, const Degree& b) {
    require_same_rank(a, b);
    Degree out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        out[i] = std::min(a[i], b[i]);
    return out;
}

}  // namespace kg

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace kg {

/// Element of N^k. Colours are 1-based in the public API, coordinates are 0-based.
class Degree {
public:
    using value_type = std::uint32_t;

    Degree() = default;
    explicit Degree(std::size_t rank) : coords_(rank, 0) {}
    Degree(std::initializer_list<value_type> coords) : coords_(coords) {}
    explicit Degree(std::vector<value_type> coords) : coords_(std::move(coords)) {}

    /// e_color
    static Degree unit(std::size_t rank, int color);
    /// (1,...,1)
    static Degree ones(std::size_t rank);

    /// Parses "n1,n2,...". Throws std::invalid_argument.
    static Degree parse(std::string_view text);

    std::size_t rank() const { return coords_.size(); }
    value_type operator[](std::size_t i) const { return coords_[i]; }
    value_type& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<value_type>& coords() const { return coords_; }

    std::uint64_t total() const;
    bool is_zero() const;

    Degree& operator+=(const Degree& other);
    /// Requires other <= *this coordinate-wise.
    Degree& operator-=(const Degree& other);

    friend Degree operator+(Degree a, const Degree& b) { return a += b; }
    friend Degree operator-(Degree a, const Degree& b) { return a -= b; }
    friend bool operator==(const Degree&, const Degree&) = default;
    /// Lexicographic; only for use as a map key, not the lattice order.
    friend auto operator<=>(const Degree&, const Degree&) = default;

    /// "(n1,n2,...)"
    std::string to_string() const;

private:
    std::vector<value_type> coords_;
};

/// Coordinate-wise partial order.
bool leq(const Degree& a, const Degree& b);
Degree join(const Degree& a, const Degree& b);
Degree meet(const Degree& a, const Degree& b);

}  // namespace kg

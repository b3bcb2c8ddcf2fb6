#pragma once

#include "kgraph/int_matrix.hpp"

#include <string>
#include <vector>

namespace kg {

/// A = U * S * V with U, V unimodular and S diagonal-rectangular. `diag` holds the
/// min(rows, cols) diagonal entries of S: non-negative, each dividing the next, zeros last.
struct SNFResult {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    std::vector<Integer> diag;
};

/// Deterministic: pivots are the smallest nonzero absolute value, ties by lowest row then column.
SNFResult smith_normal_form(const IntMatrix& a);

/// Z^rows / (column span of A) = Z^free_rank (+) Z/t_1 (+) ... with t_i > 1 dividing t_{i+1}.
struct CokernelResult {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    friend bool operator==(const CokernelResult&, const CokernelResult&) = default;
    /// "Z^2 (+) Z/2", or "0" for the trivial group.
    std::string to_string() const;
};

CokernelResult cokernel(const IntMatrix& a);

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, D_k the gcd of
/// all k x k minors (minors by cofactor expansion). Independent of smith_normal_form.
/// Throws std::length_error when min(rows, cols) > 6.
std::vector<Integer> snf_oracle_minor_gcd(const IntMatrix& a);

/// Fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);
std::size_t rational_rank(const IntMatrix& a);

}  // namespace kg

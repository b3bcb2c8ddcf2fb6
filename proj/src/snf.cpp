#include "kgraph/snf.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

namespace kg {

namespace {

using boost::multiprecision::abs;

// Row/column operations on S that keep A = U S V.
class Reducer {
public:
    explicit Reducer(const IntMatrix& a)
        : S(a), U(IntMatrix::identity(a.rows())), V(IntMatrix::identity(a.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < S.cols(); ++c)
            std::swap(S(i, c), S(j, c));
        for (std::size_t r = 0; r < U.rows(); ++r)
            std::swap(U(r, i), U(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < S.rows(); ++r)
            std::swap(S(r, i), S(r, j));
        for (std::size_t c = 0; c < V.cols(); ++c)
            std::swap(V(i, c), V(j, c));
    }

    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t c = 0; c < S.cols(); ++c)
            S(i, c) += q * S(j, c);
        for (std::size_t r = 0; r < U.rows(); ++r)
            U(r, j) -= q * U(r, i);
    }

    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t r = 0; r < S.rows(); ++r)
            S(r, i) += q * S(r, j);
        for (std::size_t c = 0; c < V.cols(); ++c)
            V(j, c) -= q * V(i, c);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < S.cols(); ++c)
            S(i, c) = -S(i, c);
        for (std::size_t r = 0; r < U.rows(); ++r)
            U(r, i) = -U(r, i);
    }

    std::optional<std::pair<std::size_t, std::size_t>> smallest_from(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t r = t; r < S.rows(); ++r)
            for (std::size_t c = t; c < S.cols(); ++c) {
                if (S(r, c) == 0)
                    continue;
                Integer v = abs(S(r, c));
                if (!best || v < best_abs) {
                    best = {r, c};
                    best_abs = v;
                }
            }
        return best;
    }

    IntMatrix S, U, V;
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
    Reducer red(a);
    IntMatrix& S = red.S;
    const std::size_t diag_len = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < diag_len; ++t) {
        bool finished = false;
        while (true) {
            auto pivot = red.smallest_from(t);
            if (!pivot) {
                finished = true;
                break;
            }
            red.swap_rows(t, pivot->first);
            red.swap_cols(t, pivot->second);

            bool clean = true;
            for (std::size_t r = t + 1; r < S.rows(); ++r) {
                if (S(r, t) == 0)
                    continue;
                Integer q = S(r, t) / S(t, t);
                red.add_row(r, t, -q);
                if (S(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < S.cols(); ++c) {
                if (S(t, c) == 0)
                    continue;
                Integer q = S(t, c) / S(t, t);
                red.add_col(c, t, -q);
                if (S(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            std::optional<std::size_t> offending;
            for (std::size_t r = t + 1; r < S.rows() && !offending; ++r)
                for (std::size_t c = t + 1; c < S.cols(); ++c)
                    if (S(r, c) % S(t, t) != 0) {
                        offending = r;
                        break;
                    }
            if (!offending)
                break;
            red.add_row(t, *offending, 1);
        }
        if (finished)
            break;
        if (S(t, t) < 0)
            red.negate_row(t);
    }

    SNFResult out{std::move(red.U), std::move(red.S), std::move(red.V), {}};
    for (std::size_t t = 0; t < diag_len; ++t)
        out.diag.push_back(out.S(t, t));
    return out;
}

std::string CokernelResult::to_string() const {
    std::string out;
    if (free_rank > 0)
        out = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) {
        if (!out.empty())
            out += " (+) ";
        out += "Z/" + t.str();
    }
    return out.empty() ? "0" : out;
}

CokernelResult cokernel(const IntMatrix& a) {
    auto snf = smith_normal_form(a);
    CokernelResult out;
    std::size_t nonzero = 0;
    for (const auto& d : snf.diag) {
        if (d == 0)
            continue;
        ++nonzero;
        if (d > 1)
            out.torsion.push_back(d);
    }
    out.free_rank = a.rows() - nonzero;
    return out;
}

namespace {

Integer cofactor_determinant(const IntMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
    if (rows.empty())
        return 1;
    std::size_t r = rows.front();
    std::vector<std::size_t> rest_rows(rows.begin() + 1, rows.end());
    Integer total = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Integer& entry = m(r, cols[k]);
        if (entry == 0)
            continue;
        std::vector<std::size_t> rest_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k)
                rest_cols.push_back(cols[j]);
        Integer minor = cofactor_determinant(m, rest_rows, rest_cols);
        total += (k % 2 == 0 ? entry : Integer(-entry)) * minor;
    }
    return total;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    while (true) {
        visit(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

std::vector<Integer> snf_oracle_minor_gcd(const IntMatrix& a) {
    const std::size_t n = std::min(a.rows(), a.cols());
    if (n > 6)
        throw std::length_error("minor-gcd oracle limited to min(rows, cols) <= 6");
    std::vector<Integer> factors;
    Integer previous = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer g = 0;
        for_each_subset(a.rows(), k, [&](std::vector<std::size_t>& rows) {
            for_each_subset(a.cols(), k, [&](std::vector<std::size_t>& cols) {
                g = gcd(g, cofactor_determinant(a, rows, cols));
            });
        });
        if (g == 0) {
            factors.resize(n, 0);
            return factors;
        }
        factors.push_back(g / previous);
        previous = g;
    }
    return factors;
}

namespace {

// Bareiss elimination; returns the number of pivots and the signed last pivot.
std::pair<std::size_t, Integer> bareiss(IntMatrix m) {
    std::size_t rank = 0;
    Integer previous = 1;
    int sign = 1;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(rank, j));
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(r, j) = (m(rank, c) * m(r, j) - m(r, c) * m(rank, j)) / previous;
            m(r, c) = 0;
        }
        previous = m(rank, c);
        ++rank;
    }
    return {rank, sign * previous};
}

}  // namespace

Integer determinant(const IntMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows() == 0)
        return 1;
    auto [rank, last] = bareiss(a);
    return rank == a.rows() ? last : Integer(0);
}

std::size_t rational_rank(const IntMatrix& a) {
    return bareiss(a).first;
}

}  // namespace kg

#include "kgraph/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace kg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long long v : row)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_binary() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0 || x == 1; });
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_)
        throw std::invalid_argument("hconcat: row counts differ");
    IntMatrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c)
            out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c)
            out(r, a.cols_ + c) = b(r, c);
    }
    return out;
}

IntMatrix IntMatrix::permute_columns(const std::vector<std::size_t>& perm) const {
    if (perm.size() != cols_)
        throw std::invalid_argument("permute_columns: permutation size mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, perm.at(c));
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: inner dimensions differ");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a(r, k);
            if (x == 0)
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                out(r, c) += x * b(k, c);
        }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: shapes differ");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference: shapes differ");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= b.data_[i];
    return out;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            out += ',';
        out += '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                out += ',';
            out += (*this)(r, c).str();
        }
        out += ']';
    }
    return out + "]";
}

}  // namespace kg

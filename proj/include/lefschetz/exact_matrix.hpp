#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lefschetz {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        }
        return t;
    }

    ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        ExactMatrix out(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
        }
        return out;
    }

    /// Matrix-vector product.
    std::vector<Integer> apply(std::span<const Integer> x) const {
        if (x.size() != cols_) throw std::invalid_argument("vector length does not match column count");
        std::vector<Integer> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
        }
        return y;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

namespace detail {

/**
 * Fraction-free (Bareiss) forward elimination in place. Pivots are the first
 * nonzero entry of each column scanning down the unprocessed rows. Returns
 * the rank and whether an odd number of row swaps happened; on a square
 * full-rank matrix the last pivot is the determinant up to that sign.
 */
inline std::pair<std::size_t, bool> bareiss_eliminate(ExactMatrix& m) {
    std::size_t rank = 0;
    bool odd_swaps = false;
    Integer previous = 1;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
            odd_swaps = !odd_swaps;
        }
        const Integer p = m(rank, col);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const Integer factor = m(r, col);
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                Integer v = p * m(r, c) - factor * m(rank, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m(r, c) = std::move(v);
            }
            m(r, col) = 0;
        }
        previous = p;
        ++rank;
    }
    return {rank, odd_swaps};
}

}  // namespace detail

/// Exact rank over the rationals.
inline std::size_t rank(const ExactMatrix& m) {
    ExactMatrix work = m;
    return detail::bareiss_eliminate(work).first;
}

inline Integer determinant(const ExactMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    ExactMatrix work = m;
    const auto [r, odd_swaps] = detail::bareiss_eliminate(work);
    if (r < n) return 0;
    Integer det = work(n - 1, n - 1);
    if (odd_swaps) det = -det;
    return det;
}

/// Binomial coefficient with C(n, k) = 0 whenever k < 0 or k > n.
inline Integer binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial coefficient needs n >= 0");
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

/// d! / prod(parts!) when the parts are a composition of d, else 0.
inline Integer multinomial(long d, std::span<const int> parts) {
    if (d < 0) throw std::domain_error("multinomial coefficient needs d >= 0");
    long sum = 0;
    for (int p : parts) {
        if (p < 0) return 0;
        sum += p;
    }
    if (sum != d) return 0;
    Integer out = 1;
    long remaining = d;
    for (int p : parts) {
        out *= binomial(remaining, p);
        remaining -= p;
    }
    return out;
}

inline Integer multinomial(long d, std::initializer_list<int> parts) {
    return multinomial(d, std::span<const int>(parts.begin(), parts.size()));
}

inline std::string to_string(const ExactMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) out += ", ";
            out += m(r, c).get_str();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace lefschetz

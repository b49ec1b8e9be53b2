#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lefschetz/exact_matrix.hpp"
#include "lefschetz/lgv.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/monomial_ideal.hpp"

namespace lefschetz {

// Maximal-rank certificate for x (x+y)^d : [I/J]_i -> [I/J]_{i+d} with
// J = (x^a, y^b). The transposed map matrix of S/J is a sliding window of
// C(d, .) values; deleting rows outside I, then summing columns right to
// left with Pascal's rule, turns it into a binomial matrix whose leading
// square block has the ascending-sequence shape where a nonzero diagonal
// forces a nonzero determinant.

/**
 * Transposed multiplication matrix with its labels. Row n holds
 * C(d, offsets[n] + j) in column j, and offsets strictly decrease down the
 * rows.
 */
struct LabeledBlock {
    ExactMatrix matrix;
    std::vector<Monomial> row_labels;  // degree i, descending lex
    std::vector<Monomial> col_labels;  // degree i + d, descending lex
    std::vector<int> offsets;
    int d = 0;
    int trimmed_front = 0;  // columns x^(i+d-k) y^k with k < trimmed_front lie in x^a
    int trimmed_back = 0;   // likewise at the y^b end
};

/// Transposed matrix of x (x+y)^d : [S/(x^a, y^b)]_i -> [S/(x^a, y^b)]_{i+d}.
inline LabeledBlock cl_matrix(int a, int b, int i, int d) {
    if (a < 1 || b < 1) throw std::invalid_argument("cl_matrix needs positive a and b");
    if (i < 0 || d < 1 || i + d > a + b - 2) {
        throw std::invalid_argument("cl_matrix needs i >= 0, d >= 1 and i + d <= a + b - 2");
    }
    LabeledBlock block;
    block.d = d;
    block.trimmed_front = std::max(i + d - a + 1, 0);
    block.trimmed_back = std::max(i + d - b + 1, 0);
    const int first_col = block.trimmed_front;
    const int last_col = i + d - block.trimmed_back;

    std::vector<int> row_y;
    for (int j = 0; j <= i; ++j) {
        if (i - j < a && j < b) row_y.push_back(j);
    }
    block.matrix = ExactMatrix(row_y.size(), static_cast<std::size_t>(last_col - first_col + 1));
    for (int k = first_col; k <= last_col; ++k) block.col_labels.push_back(Monomial{i + d - k, k});
    for (std::size_t n = 0; n < row_y.size(); ++n) {
        const int j = row_y[n];
        block.row_labels.push_back(Monomial{i - j, j});
        block.offsets.push_back(first_col - j);
        for (int k = first_col; k <= last_col; ++k) {
            block.matrix(n, static_cast<std::size_t>(k - first_col)) = binomial(d, k - j);
        }
    }
    return block;
}

/// Keeps the rows whose label lies in `ideal`, preserving order.
inline LabeledBlock restrict_rows(const LabeledBlock& block, const MonomialIdeal& ideal) {
    if (ideal.num_vars() != 2) throw std::invalid_argument("restrict_rows needs a two-variable ideal");
    std::vector<std::size_t> keep;
    for (std::size_t n = 0; n < block.row_labels.size(); ++n) {
        if (ideal.contains(block.row_labels[n])) keep.push_back(n);
    }
    std::vector<std::size_t> all_cols(block.matrix.cols());
    for (std::size_t c = 0; c < all_cols.size(); ++c) all_cols[c] = c;

    LabeledBlock out;
    out.matrix = block.matrix.submatrix(keep, all_cols);
    out.col_labels = block.col_labels;
    out.d = block.d;
    out.trimmed_front = block.trimmed_front;
    out.trimmed_back = block.trimmed_back;
    for (auto n : keep) {
        out.row_labels.push_back(block.row_labels[n]);
        out.offsets.push_back(block.offsets[n]);
    }
    return out;
}

/**
 * Column additions in the order: column 2 into 1; then 3 into 2 and 2 into
 * 1; and so on until the last column has been swept leftwards. On a sliding
 * window of C(d, k + j) this yields C(d + c - 1 - j, k + c - 1).
 */
inline ExactMatrix pascal_column_transform(const ExactMatrix& m) {
    ExactMatrix out = m;
    for (std::size_t last = 1; last < out.cols(); ++last) {
        for (std::size_t j = last; j >= 1; --j) {
            for (std::size_t r = 0; r < out.rows(); ++r) out(r, j - 1) += out(r, j);
        }
    }
    return out;
}

/// Entry (n, j) = C(d + c - 1 - j, offsets[n] + c - 1) with c the column count.
inline ExactMatrix pascal_closed_form(const LabeledBlock& block) {
    const auto c = static_cast<long>(block.matrix.cols());
    ExactMatrix out(block.matrix.rows(), block.matrix.cols());
    for (std::size_t n = 0; n < out.rows(); ++n) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(n, j) = binomial(block.d + c - 1 - static_cast<long>(j), block.offsets[n] + c - 1);
        }
    }
    return out;
}

/**
 * The proof's row facts: each row has a nonzero entry, so offset + c - 1 >= 0
 * and offset <= d. Returns false on any counterinstance.
 */
inline bool row_offsets_valid(const LabeledBlock& block) {
    const int c = static_cast<int>(block.matrix.cols());
    return std::all_of(block.offsets.begin(), block.offsets.end(),
                       [&](int k) { return k + c - 1 >= 0 && k <= block.d; });
}

/// Nonzero main diagonal on the leading (upper-left) maximal square block.
inline bool lgv_rank_certificate(const ExactMatrix& transformed) {
    const auto s = std::min(transformed.rows(), transformed.cols());
    for (std::size_t n = 0; n < s; ++n) {
        if (transformed(n, n) == 0) return false;
    }
    return true;
}

struct RankCertificate {
    bool certified = false;
    /// Side of the leading square block whose determinant is certified nonzero.
    std::size_t size = 0;
    LgvVerdict lgv;
};

/**
 * Full certificate for a row-restricted block: checks that the transformed
 * matrix has the closed binomial form, then applies the positivity
 * criterion to its leading square block read in reverse, where rows and
 * columns become ascending sequences.
 */
inline RankCertificate lgv_rank_certificate(const LabeledBlock& restricted, const ExactMatrix& transformed) {
    RankCertificate cert;
    cert.size = std::min(transformed.rows(), transformed.cols());
    if (cert.size == 0 || transformed != pascal_closed_form(restricted)) return cert;
    const int c = static_cast<int>(transformed.cols());
    const int s = static_cast<int>(cert.size);
    std::vector<int> upper;
    std::vector<int> lower;
    for (int n = s - 1; n >= 0; --n) {
        upper.push_back(restricted.d + c - 1 - n);
        lower.push_back(restricted.offsets[static_cast<std::size_t>(n)] + c - 1);
    }
    cert.lgv = lgv_positivity(AscendingSequence(upper), AscendingSequence(lower));
    cert.certified = cert.lgv.positivity == Positivity::Positive;
    return cert;
}

}  // namespace lefschetz

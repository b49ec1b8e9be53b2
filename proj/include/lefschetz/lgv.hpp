#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lefschetz/exact_matrix.hpp"

namespace lefschetz {

/// Strictly increasing list of integers.
class AscendingSequence {
public:
    AscendingSequence() = default;
    explicit AscendingSequence(std::vector<int> values) : values_(std::move(values)) {
        for (std::size_t i = 1; i < values_.size(); ++i) {
            if (values_[i - 1] >= values_[i]) throw std::invalid_argument("sequence is not strictly increasing");
        }
    }
    AscendingSequence(std::initializer_list<int> values) : AscendingSequence(std::vector<int>(values)) {}

    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_.at(i); }
    const std::vector<int>& values() const { return values_; }

private:
    std::vector<int> values_;
};

namespace detail {
inline void require_matching(const AscendingSequence& a, const AscendingSequence& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sequences differ in length");
    if (a.size() == 0) throw std::invalid_argument("sequences must be nonempty");
    for (int v : a.values()) {
        if (v < 0) throw std::invalid_argument("upper sequence must be nonnegative");
    }
}
}  // namespace detail

/// (C(a_i, b_j))_{i,j}.
inline ExactMatrix binomial_matrix(const AscendingSequence& a, const AscendingSequence& b) {
    detail::require_matching(a, b);
    ExactMatrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = binomial(a[i], b[j]);
    }
    return m;
}

enum class Positivity { Zero, Positive };

inline const char* to_string(Positivity p) { return p == Positivity::Positive ? "Positive" : "Zero"; }

struct LgvVerdict {
    Positivity positivity = Positivity::Zero;
    Integer determinant;
};

/**
 * For ascending a and b, det C(a_i, b_j) is nonnegative and positive exactly
 * when every diagonal entry C(a_i, b_i) is nonzero. The diagonal test gives
 * the verdict; the determinant is computed alongside and must agree.
 */
inline LgvVerdict lgv_positivity(const AscendingSequence& a, const AscendingSequence& b) {
    const auto m = binomial_matrix(a, b);
    bool diagonal = true;
    for (std::size_t i = 0; i < a.size(); ++i) diagonal = diagonal && 0 <= b[i] && b[i] <= a[i];
    LgvVerdict verdict{diagonal ? Positivity::Positive : Positivity::Zero, determinant(m)};
    const bool agrees = diagonal ? verdict.determinant > 0 : verdict.determinant == 0;
    if (!agrees) throw std::logic_error("binomial determinant disagrees with the diagonal test");
    return verdict;
}

namespace detail {

using LatticePoint = std::pair<int, int>;

// Monotone East/North paths from (-b, b) to (0, a): b East steps, a - b North steps.
inline void enumerate_paths(LatticePoint at, LatticePoint goal, std::vector<LatticePoint>& path,
                            std::vector<std::vector<LatticePoint>>& out) {
    path.push_back(at);
    if (at == goal) {
        out.push_back(path);
    } else {
        if (at.first < goal.first) enumerate_paths({at.first + 1, at.second}, goal, path, out);
        if (at.second < goal.second) enumerate_paths({at.first, at.second + 1}, goal, path, out);
    }
    path.pop_back();
}

inline Integer count_disjoint_families(const std::vector<std::vector<std::vector<LatticePoint>>>& paths,
                                       std::size_t j, std::set<LatticePoint>& used) {
    if (j == paths.size()) return 1;
    Integer total = 0;
    for (const auto& p : paths[j]) {
        bool clash = false;
        for (const auto& pt : p) clash = clash || used.contains(pt);
        if (clash) continue;
        used.insert(p.begin(), p.end());
        total += count_disjoint_families(paths, j + 1, used);
        for (const auto& pt : p) used.erase(pt);
    }
    return total;
}

}  // namespace detail

/// Largest sum of the upper sequence accepted by the exhaustive path count.
inline constexpr int kPathEnumerationCap = 24;

/**
 * Number of vertex-disjoint families (P_1, ..., P_m), P_j a monotone
 * East/North lattice path from (-b_j, b_j) to (0, a_j). Exhaustive.
 */
inline Integer count_nonintersecting(const AscendingSequence& a, const AscendingSequence& b) {
    detail::require_matching(a, b);
    int sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] < 0) throw std::invalid_argument("path starts need nonnegative b");
        sum += a[i];
    }
    if (sum > kPathEnumerationCap) throw std::invalid_argument("path enumeration size cap exceeded");

    std::vector<std::vector<std::vector<detail::LatticePoint>>> paths(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (b[j] > a[j]) return 0;
        std::vector<detail::LatticePoint> scratch;
        detail::enumerate_paths({-b[j], b[j]}, {0, a[j]}, scratch, paths[j]);
    }
    std::set<detail::LatticePoint> used;
    return detail::count_disjoint_families(paths, 0, used);
}

}  // namespace lefschetz

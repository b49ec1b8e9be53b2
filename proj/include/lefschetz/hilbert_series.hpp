#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefschetz {

/**
 * Hilbert series h_p t^p + ... + h_q t^q of a finite graded module.
 *
 * Stored as the start degree p and the coefficients h_p..h_q with no zero at
 * either end; the zero module has no coefficients.
 */
class HilbertSeries {
public:
    HilbertSeries() = default;

    /// Coefficients of t^start, t^(start+1), ...; zeros at either end are trimmed.
    HilbertSeries(int start, std::vector<std::int64_t> coeffs) {
        for (auto c : coeffs) {
            if (c < 0) throw std::invalid_argument("Hilbert series coefficients must be nonnegative");
        }
        auto first = std::find_if(coeffs.begin(), coeffs.end(), [](auto c) { return c != 0; });
        if (first == coeffs.end()) return;
        auto last = std::find_if(coeffs.rbegin(), coeffs.rend(), [](auto c) { return c != 0; }).base();
        start_ = start + static_cast<int>(first - coeffs.begin());
        coeffs_.assign(first, last);
        if (start_ < 0) throw std::invalid_argument("Hilbert series must start in a nonnegative degree");
    }

    bool empty() const { return coeffs_.empty(); }
    /// p, the lowest degree with a nonzero coefficient.
    int start() const { return start_; }
    /// q, the highest degree with a nonzero coefficient (start() - 1 when empty).
    int end() const { return start_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    std::int64_t operator[](int degree) const {
        if (degree < start_ || degree > end()) return 0;
        return coeffs_[static_cast<std::size_t>(degree - start_)];
    }

    std::int64_t total() const {
        std::int64_t sum = 0;
        for (auto c : coeffs_) sum += c;
        return sum;
    }

    HilbertSeries shifted(int by) const {
        if (empty()) return {};
        return HilbertSeries(start_ + by, coeffs_);
    }

    /// Product with 1 + t + ... + t^(c-1).
    HilbertSeries times_truncated_geometric(int c) const {
        if (c < 1) throw std::invalid_argument("truncation length must be positive");
        if (empty()) return {};
        std::vector<std::int64_t> out(coeffs_.size() + static_cast<std::size_t>(c) - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            for (int k = 0; k < c; ++k) out[i + static_cast<std::size_t>(k)] += coeffs_[i];
        }
        return HilbertSeries(start_, std::move(out));
    }

    friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        const int lo = std::min(a.start(), b.start());
        const int hi = std::max(a.end(), b.end());
        std::vector<std::int64_t> out;
        for (int d = lo; d <= hi; ++d) out.push_back(a[d] + b[d]);
        return HilbertSeries(lo, std::move(out));
    }

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

private:
    int start_ = 0;
    std::vector<std::int64_t> coeffs_;
};

/// Renders as e.g. "2t^2+4t^3+t^6"; the zero series renders as "0".
inline std::string to_string(const HilbertSeries& series) {
    if (series.empty()) return "0";
    std::string out;
    for (int d = series.start(); d <= series.end(); ++d) {
        const auto c = series[d];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (c != 1 || d == 0) out += std::to_string(c);
        if (d >= 1) out += 't';
        if (d >= 2) out += '^' + std::to_string(d);
    }
    return out;
}

}  // namespace lefschetz

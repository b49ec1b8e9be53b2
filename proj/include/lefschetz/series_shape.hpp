#pragma once

#include <cstdlib>
#include <optional>

#include "lefschetz/hilbert_series.hpp"

namespace lefschetz {

/// The reflecting degree r = (p + q) / 2 of a symmetric series, kept as 2r.
struct ReflectingDegree {
    int doubled = 0;

    double value() const { return doubled / 2.0; }
    friend bool operator==(const ReflectingDegree&, const ReflectingDegree&) = default;
};

/// Reflecting degree when the series is palindromic; nothing for the zero series.
inline std::optional<ReflectingDegree> is_symmetric(const HilbertSeries& h) {
    if (h.empty()) return std::nullopt;
    const int p = h.start();
    const int q = h.end();
    for (int i = 0; p + i <= q - i; ++i) {
        if (h[p + i] != h[q - i]) return std::nullopt;
    }
    return ReflectingDegree{p + q};
}

/// r and r' coincide when they are equal or differ by one half.
inline bool degrees_coincide(ReflectingDegree a, ReflectingDegree b) { return std::abs(a.doubled - b.doubled) <= 1; }

inline bool is_almost_centered(const HilbertSeries& h) {
    if (h.empty()) return true;
    const int p = h.start();
    const int q = h.end();
    bool low_first = true;
    bool high_first = true;
    for (int i = 1; i <= (q - p) / 2; ++i) {
        low_first = low_first && h[p + i - 1] <= h[q - i] && h[q - i] <= h[p + i];
        high_first = high_first && h[q - i + 1] <= h[p + i] && h[p + i] <= h[q - i];
    }
    return low_first || high_first;
}

/// Weakly increasing then weakly decreasing over the whole support.
inline bool is_unimodal(const HilbertSeries& h) {
    if (h.empty()) return true;
    int d = h.start();
    while (d < h.end() && h[d] <= h[d + 1]) ++d;
    while (d < h.end() && h[d] >= h[d + 1]) ++d;
    return d == h.end();
}

}  // namespace lefschetz

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/exact_matrix.hpp"
#include "lefschetz/hilbert_series.hpp"
#include "lefschetz/quotient_module.hpp"
#include "lefschetz/series_shape.hpp"

namespace lefschetz {

/// A linear form c_0 x + c_1 y + ... with integer coefficients, not all zero.
class LinearForm {
public:
    explicit LinearForm(std::vector<long> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty() || coeffs_.size() > kMaxVariables) {
            throw std::invalid_argument("linear form needs between 1 and 4 coefficients");
        }
        if (std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; })) {
            throw std::invalid_argument("linear form must be nonzero");
        }
    }
    LinearForm(std::initializer_list<long> coefficients) : LinearForm(std::vector<long>(coefficients)) {}

    /// x + y + ... , the canonical candidate for monomial modules.
    static LinearForm all_ones(std::size_t num_vars) { return LinearForm(std::vector<long>(num_vars, 1)); }

    std::size_t num_vars() const { return coeffs_.size(); }
    long operator[](std::size_t v) const { return coeffs_.at(v); }
    const std::vector<long>& coefficients() const { return coeffs_; }

    LinearForm scaled(long factor) const {
        auto out = coeffs_;
        for (auto& c : out) c *= factor;
        return LinearForm(std::move(out));
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    std::vector<long> coeffs_;
};

inline std::string to_string(const LinearForm& form) {
    std::string out;
    for (std::size_t v = 0; v < form.num_vars(); ++v) {
        const long c = form[v];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        if (std::labs(c) != 1) out += std::to_string(std::labs(c));
        out += variable_name(v);
    }
    return out;
}

namespace detail {

inline void require_same_ring(const QuotientModule& module, const LinearForm& form) {
    if (module.num_vars() != form.num_vars()) {
        throw std::invalid_argument("linear form and module live in rings of different sizes");
    }
}

/// Matrix of x ell^d from span(domain) to span(codomain); both bases descending lex.
inline ExactMatrix multiplication_matrix(std::span<const Monomial> domain, std::span<const Monomial> codomain,
                                         const LinearForm& form, int d) {
    ExactMatrix m(codomain.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        for (std::size_t r = 0; r < codomain.size(); ++r) {
            if (!domain[c].divides(codomain[r])) continue;
            const Monomial e = codomain[r] / domain[c];
            Integer entry = multinomial(d, e.exponents());
            for (std::size_t v = 0; v < e.num_vars() && entry != 0; ++v) {
                Integer power;
                mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(std::labs(form[v])),
                              static_cast<unsigned long>(e[v]));
                if (form[v] < 0 && e[v] % 2 == 1) power = -power;
                entry *= power;
            }
            m(r, c) = std::move(entry);
        }
    }
    return m;
}

/// Degree bases of a module cached for repeated map construction.
class DegreeBases {
public:
    explicit DegreeBases(const QuotientModule& module) {
        const int top = module.degree_bound();
        for (int d = 0; d <= top; ++d) bases_.push_back(degree_basis(module, d));
    }
    std::span<const Monomial> operator()(int d) const {
        if (d < 0 || d >= static_cast<int>(bases_.size())) return {};
        return bases_[static_cast<std::size_t>(d)];
    }

private:
    std::vector<std::vector<Monomial>> bases_;
};

}  // namespace detail

/**
 * Matrix of x ell^d : M_i -> M_{i+d}. Rows follow degree_basis(M, i+d) and
 * columns degree_basis(M, i); the entry for w = u * x^e is the multinomial
 * coefficient of x^e in ell^d times the matching product of coefficients.
 */
inline ExactMatrix mult_matrix(const QuotientModule& module, const LinearForm& form, int d, int i) {
    if (d < 1) throw std::invalid_argument("multiplication power must be at least 1");
    module.require_artinian();
    detail::require_same_ring(module, form);
    const auto domain = degree_basis(module, i);
    const auto codomain = degree_basis(module, i + d);
    return detail::multiplication_matrix(domain, codomain, form, d);
}

inline bool map_has_maximal_rank(const QuotientModule& module, const LinearForm& form, int d, int i) {
    const auto m = mult_matrix(module, form, d, i);
    if (m.rows() == 0 || m.cols() == 0) return true;
    return rank(m) == std::min(m.rows(), m.cols());
}

enum class Property { Weak, Strong };

inline const char* to_string(Property p) { return p == Property::Weak ? "WLP" : "SLP"; }

/// A map x ell^d : M_i -> M_{i+d} whose rank falls short of min(h_i, h_{i+d}).
struct MapFailure {
    int degree = 0;
    int power = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    friend bool operator==(const MapFailure&, const MapFailure&) = default;
};

struct LefschetzReport {
    Property property = Property::Weak;
    bool holds = true;
    std::vector<MapFailure> failures;
    LinearForm form{1};
};

/// A graded module placed in the direct sum with its grading shifted up by `shift`.
struct GradedSummand {
    QuotientModule module;
    int shift = 0;
};

inline HilbertSeries direct_sum_hilbert(std::span<const GradedSummand> summands) {
    HilbertSeries total;
    for (const auto& s : summands) total = total + hilbert_series(s.module).shifted(s.shift);
    return total;
}

/**
 * Decides WLP/SLP of a direct sum of monomial modules for one linear form.
 * Each map on the sum is block diagonal, so its rank is the sum of the
 * summands' ranks and is compared against min(h_i, h_{i+d}) of the total.
 * Failures are ordered by (power, degree).
 */
inline LefschetzReport check_direct_sum(std::span<const GradedSummand> summands, const LinearForm& form,
                                        Property property) {
    std::vector<detail::DegreeBases> bases;
    for (const auto& s : summands) {
        s.module.require_artinian();
        detail::require_same_ring(s.module, form);
        bases.emplace_back(s.module);
    }
    const auto total = direct_sum_hilbert(summands);
    LefschetzReport report{property, true, {}, form};
    if (total.empty()) return report;

    const int p = total.start();
    const int q = total.end();
    const int max_power = property == Property::Weak ? std::min(1, q - p) : q - p;
    for (int d = 1; d <= max_power; ++d) {
        for (int i = p; i + d <= q; ++i) {
            const auto expected = static_cast<std::size_t>(std::min(total[i], total[i + d]));
            if (expected == 0) continue;
            std::size_t r = 0;
            for (std::size_t k = 0; k < summands.size(); ++k) {
                const int local = i - summands[k].shift;
                const auto domain = bases[k](local);
                const auto codomain = bases[k](local + d);
                if (domain.empty() || codomain.empty()) continue;
                r += rank(detail::multiplication_matrix(domain, codomain, form, d));
            }
            if (r != expected) report.failures.push_back({i, d, r, expected});
        }
    }
    report.holds = report.failures.empty();
    return report;
}

inline LefschetzReport check_wlp(const QuotientModule& module, const LinearForm& form) {
    const GradedSummand single{module, 0};
    return check_direct_sum({&single, 1}, form, Property::Weak);
}

inline LefschetzReport check_slp(const QuotientModule& module, const LinearForm& form) {
    const GradedSummand single{module, 0};
    return check_direct_sum({&single, 1}, form, Property::Strong);
}

inline LefschetzReport check_slp(const QuotientModule& module) {
    return check_slp(module, LinearForm::all_ones(module.num_vars()));
}

inline LefschetzReport check_wlp(const QuotientModule& module) {
    return check_wlp(module, LinearForm::all_ones(module.num_vars()));
}

struct DirectSumVerdict {
    std::vector<ReflectingDegree> degrees;
    /// Every pair of reflecting degrees coincides: the predicted SLP verdict.
    bool coincide = true;
    /// SLP of the block-diagonal sum computed directly.
    bool block_holds = true;
};

/**
 * SLP of a direct sum of modules with symmetric Hilbert series that each
 * have the SLP for `form`: predicted by pairwise coincidence of reflecting
 * degrees and cross-checked on the block-diagonal maps.
 */
inline DirectSumVerdict direct_sum_slp(std::span<const GradedSummand> summands, const LinearForm& form) {
    DirectSumVerdict verdict;
    for (const auto& s : summands) {
        const auto degree = is_symmetric(hilbert_series(s.module).shifted(s.shift));
        if (!degree) throw std::invalid_argument("direct sum summand has a non-symmetric Hilbert series");
        if (!check_slp(s.module, form).holds) {
            throw std::invalid_argument("direct sum summand does not have the SLP for this form");
        }
        verdict.degrees.push_back(*degree);
    }
    for (std::size_t a = 0; a < verdict.degrees.size(); ++a) {
        for (std::size_t b = a + 1; b < verdict.degrees.size(); ++b) {
            verdict.coincide = verdict.coincide && degrees_coincide(verdict.degrees[a], verdict.degrees[b]);
        }
    }
    verdict.block_holds = check_direct_sum(summands, form, Property::Strong).holds;
    return verdict;
}

}  // namespace lefschetz

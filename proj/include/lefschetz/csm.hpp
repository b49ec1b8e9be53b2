#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lefschetz/hilbert_series.hpp"
#include "lefschetz/lefschetz_check.hpp"
#include "lefschetz/monomial_ideal.hpp"
#include "lefschetz/quotient_module.hpp"
#include "lefschetz/series_shape.hpp"

namespace lefschetz {

// Central simple modules of A = S/I with respect to a variable x_v. In S the
// chain (0 : x_v^j) + (x_v) of A lifts to U_j = (I : x_v^j) + (x_v), so each
// nonzero successive quotient is the monomial module U_f / U_{f-1}.

struct CentralSimpleModule {
    int f = 0;
    QuotientModule module;
    HilbertSeries hilbert;
    /// module tensor k[t]/(t^f), graded with the module in its own degrees.
    QuotientModule tilde;
};

struct CSMReport {
    std::size_t variable = 0;
    /// Nilpotency index of x_v in S/I.
    int r = 0;
    /// Ordered by strictly decreasing f.
    std::vector<CentralSimpleModule> entries;
};

/// U_j = (I : x_v^j) + (x_v).
inline MonomialIdeal csm_chain_ideal(const MonomialIdeal& ideal, std::size_t v, int j) {
    const auto n = ideal.num_vars();
    return ideal_sum(colon_variable_power(ideal, v, j), MonomialIdeal::minimalize(n, {Monomial::variable_power(n, v, 1)}));
}

inline CSMReport csm_decompose(const MonomialIdeal& ideal, std::size_t v) {
    if (!ideal.is_artinian()) throw std::domain_error("central simple modules need an Artinian ideal");
    if (v >= ideal.num_vars()) throw std::out_of_range("csm variable index");
    CSMReport report{v, *ideal.pure_power_exponent(v), {}};

    std::vector<MonomialIdeal> chain;
    for (int j = 0; j <= report.r; ++j) chain.push_back(csm_chain_ideal(ideal, v, j));
    for (int f = report.r; f >= 1; --f) {
        const auto& upper = chain[static_cast<std::size_t>(f)];
        const auto& lower = chain[static_cast<std::size_t>(f - 1)];
        if (upper == lower) continue;
        QuotientModule module(upper, lower);
        auto hilbert = hilbert_series(module);
        auto tilde = tensor_truncation(module, f);
        report.entries.push_back({f, std::move(module), std::move(hilbert), std::move(tilde)});
    }
    return report;
}

struct CsmCriterionResult {
    CSMReport decomposition;
    /// Every tilde module has the SLP for the all-ones form.
    bool each_tilde_slp = false;
    bool all_symmetric = false;
    /// The direct sum of the tilde modules has the SLP.
    bool sum_slp = false;

    bool holds() const { return each_tilde_slp && sum_slp; }
};

/**
 * Sufficient condition for SLP of S/I: the direct sum of the tilde modules
 * has the SLP. When every tilde series is symmetric the sum is decided by
 * coincidence of reflecting degrees; otherwise by the block-diagonal maps.
 * A negative verdict says nothing about S/I.
 */
inline CsmCriterionResult csm_slp_criterion(const MonomialIdeal& ideal, std::size_t v) {
    CsmCriterionResult result{csm_decompose(ideal, v)};
    const auto& entries = result.decomposition.entries;
    const auto form = LinearForm::all_ones(ideal.num_vars() + 1);

    std::vector<GradedSummand> summands;
    result.each_tilde_slp = true;
    result.all_symmetric = true;
    for (const auto& e : entries) {
        summands.push_back({e.tilde, 0});
        result.each_tilde_slp = result.each_tilde_slp && check_slp(e.tilde, form).holds;
        result.all_symmetric = result.all_symmetric && is_symmetric(e.hilbert).has_value();
    }
    if (!result.each_tilde_slp) return result;
    if (result.all_symmetric) {
        result.sum_slp = direct_sum_slp(summands, form).coincide;
    } else {
        result.sum_slp = check_direct_sum(summands, form, Property::Strong).holds;
    }
    return result;
}

}  // namespace lefschetz

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lefschetz/hilbert_series.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/monomial_ideal.hpp"

namespace lefschetz {

/**
 * The graded module (I + J) / J for monomial ideals I (numerator) and J
 * (denominator) in the same ring. When J is contained in I this is just I/J.
 *
 * Its degree-d part has the monomial basis {m : deg m = d, m in I, m not in J}.
 */
class QuotientModule {
public:
    QuotientModule(MonomialIdeal numerator, MonomialIdeal denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (num_.num_vars() != den_.num_vars()) {
            throw std::invalid_argument("numerator and denominator live in rings of different sizes");
        }
    }

    /// The algebra S / J.
    static QuotientModule algebra(MonomialIdeal denominator) {
        const auto n = denominator.num_vars();
        return QuotientModule(MonomialIdeal::unit(n), std::move(denominator));
    }

    std::size_t num_vars() const { return num_.num_vars(); }
    const MonomialIdeal& numerator() const { return num_; }
    const MonomialIdeal& denominator() const { return den_; }
    bool is_artinian() const { return den_.is_artinian(); }

    bool in_basis(const Monomial& m) const { return num_.contains(m) && !den_.contains(m); }

    /// Degree past which every monomial lies in an Artinian denominator.
    int degree_bound() const {
        require_artinian();
        int bound = 0;
        for (std::size_t v = 0; v < num_vars(); ++v) bound += *den_.pure_power_exponent(v) - 1;
        return bound;
    }

    void require_artinian() const {
        if (!is_artinian()) throw std::domain_error("denominator ideal is not Artinian");
    }

    friend bool operator==(const QuotientModule&, const QuotientModule&) = default;

private:
    MonomialIdeal num_;
    MonomialIdeal den_;
};

/// Basis of the degree-d component, descending lex.
inline std::vector<Monomial> degree_basis(const QuotientModule& module, int d) {
    auto monomials = monomials_of_degree(module.num_vars(), d);
    std::erase_if(monomials, [&](const Monomial& m) { return !module.in_basis(m); });
    return monomials;
}

inline HilbertSeries hilbert_series(const QuotientModule& module) {
    const int top = module.degree_bound();
    std::vector<std::int64_t> coeffs;
    for (int d = 0; d <= top; ++d) coeffs.push_back(static_cast<std::int64_t>(degree_basis(module, d).size()));
    return HilbertSeries(0, std::move(coeffs));
}

inline bool is_zero_module(const QuotientModule& module) { return hilbert_series(module).empty(); }

/// Top degree with a nonzero component.
inline int socle_degree(const QuotientModule& module) {
    const auto series = hilbert_series(module);
    if (series.empty()) throw std::domain_error("the zero module has no socle degree");
    return series.end();
}

/**
 * M tensor k[t]/(t^c): one new variable t appended to the ring, the
 * numerator extended unchanged and t^c added to the denominator.
 */
inline QuotientModule tensor_truncation(const QuotientModule& module, int c) {
    if (c < 1) throw std::invalid_argument("tensor truncation length must be positive");
    const auto n = module.num_vars() + 1;
    if (n > kMaxVariables) throw std::invalid_argument("no room for another variable in the ring");
    auto den = ideal_sum(extend_ring(module.denominator(), n),
                         MonomialIdeal::minimalize(n, {Monomial::variable_power(n, n - 1, c)}));
    return QuotientModule(extend_ring(module.numerator(), n), std::move(den));
}

/**
 * Closed-form dim [(x^alpha, y^beta) / (x^a, y^b)]_i obtained by counting
 * monomials with inclusion-exclusion.
 */
inline std::int64_t hilbert_cl_closed_form(int alpha, int beta, int a, int b, int i) {
    if (alpha < 0 || alpha > a || beta < 0 || beta > b || i < 0) {
        throw std::invalid_argument("closed form needs 0 <= alpha <= a, 0 <= beta <= b, i >= 0");
    }
    auto pos = [](int v) { return std::int64_t{std::max(v, 0)}; };
    return pos(i - alpha + 1) + pos(i - beta + 1) - pos(i - beta - alpha + 1) - pos(i - a + 1) - pos(i - b + 1) +
           pos(i - a - b + 1);
}

}  // namespace lefschetz

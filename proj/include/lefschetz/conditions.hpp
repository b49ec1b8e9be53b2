#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "lefschetz/monomial_ideal.hpp"
#include "lefschetz/quotient_module.hpp"

namespace lefschetz {

/// Which hypothesis predicts SLP of (x^alpha, y^beta) / (x^a, y^b, z^c) for every c.
enum class TensorCase { None, SymmetricCase, SmallCase };

inline const char* to_string(TensorCase c) {
    switch (c) {
        case TensorCase::SymmetricCase: return "SymmetricCase";
        case TensorCase::SmallCase: return "SmallCase";
        case TensorCase::None: break;
    }
    return "None";
}

/// SmallCase is reported first when both hypotheses hold.
inline TensorCase thm_tensor_condition(int alpha, int beta, int a, int b) {
    if (alpha < 0 || alpha > a || beta < 0 || beta > b) {
        throw std::invalid_argument("tensor condition needs 0 <= alpha <= a and 0 <= beta <= b");
    }
    const int lo = std::min(alpha, beta);
    const int hi = std::max(alpha, beta);
    if (lo < hi && hi <= 2) return TensorCase::SmallCase;
    if (lo < hi && hi == std::min({alpha + beta, a, b})) return TensorCase::SymmetricCase;
    return TensorCase::None;
}

/// (x^alpha, y^beta) / (x^a, y^b, z^c) in k[x,y,z].
inline QuotientModule tensor_family_module(int alpha, int beta, int a, int b, int c) {
    const auto num = MonomialIdeal::minimalize(3, {Monomial{alpha, 0, 0}, Monomial{0, beta, 0}});
    const auto den = MonomialIdeal::minimalize(3, {Monomial{a, 0, 0}, Monomial{0, b, 0}, Monomial{0, 0, c}});
    return QuotientModule(num, den);
}

struct Type2Params {
    int a, b, c, alpha, beta, gamma;
};

/// (x^a, y^b, z^c, x^alpha z^gamma, y^beta z^gamma).
inline MonomialIdeal type2_ideal(const Type2Params& p) {
    return MonomialIdeal::minimalize(3, {Monomial{p.a, 0, 0}, Monomial{0, p.b, 0}, Monomial{0, 0, p.c},
                                         Monomial{p.alpha, 0, p.gamma}, Monomial{0, p.beta, p.gamma}});
}

struct Type2Verdict {
    /// Subset of {1, 2, 3}; nonempty predicts SLP of S/I.
    std::set<int> conditions;
    /// Doubled reflecting degrees 2r of the tilde modules: (1,x), (2,x), (1,z), (2,z).
    std::array<int, 4> doubled_degrees{};
};

inline Type2Verdict thm_type2_conditions(const Type2Params& p) {
    const auto [a, b, c, alpha, beta, gamma] = p;
    if (!(0 < alpha && alpha < a && 0 < beta && beta < b && 0 < gamma && gamma < c)) {
        throw std::invalid_argument("type-two parameters need 0 < alpha < a, 0 < beta < b, 0 < gamma < c");
    }
    const int lo = std::min(alpha, beta);
    const int hi = std::max(alpha, beta);
    const int spread = a + b - c;

    Type2Verdict verdict;
    verdict.doubled_degrees = {a + b + gamma - 3, gamma + alpha + beta + c - 3, alpha + beta + c - 3,
                               lo + a + b + gamma - 3};
    if (alpha + beta - 1 <= spread && spread <= alpha + beta + 1) verdict.conditions.insert(1);
    if (lo != hi && hi == std::min({alpha + beta, a, b}) && hi - gamma - 1 <= spread && spread <= hi - gamma + 1) {
        verdict.conditions.insert(2);
    }
    if (lo < hi && hi <= 2 && a + b + gamma <= c + 2) verdict.conditions.insert(3);
    return verdict;
}

}  // namespace lefschetz

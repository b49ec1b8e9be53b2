#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/monomial.hpp"

namespace lefschetz {

/**
 * A monomial ideal stored by its minimal generators.
 *
 * Generators are kept as a divisibility antichain sorted in descending lex
 * order, so two ideals are equal iff their generator lists are equal. The
 * zero ideal has no generators; the unit ideal is generated by 1.
 */
class MonomialIdeal {
public:
    /// The zero ideal of a ring with `num_vars` variables.
    explicit MonomialIdeal(std::size_t num_vars) : num_vars_(Monomial::one(num_vars).num_vars()) {}

    static MonomialIdeal unit(std::size_t num_vars) {
        MonomialIdeal ideal(num_vars);
        ideal.gens_.push_back(Monomial::one(num_vars));
        return ideal;
    }

    /// Minimal generating set of the ideal generated by `gens`.
    static MonomialIdeal minimalize(std::size_t num_vars, std::span<const Monomial> gens) {
        MonomialIdeal ideal(num_vars);
        std::vector<Monomial> sorted(gens.begin(), gens.end());
        for (const auto& g : sorted) {
            if (g.num_vars() != num_vars) {
                throw std::invalid_argument("ideal generators live in rings of different sizes");
            }
        }
        // A divisor has degree at most that of its multiple, so scanning by
        // degree lets each candidate be tested only against kept generators.
        std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a > b;
        });
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (const auto& g : sorted) {
            const bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                               [&](const Monomial& kept) { return kept.divides(g); });
            if (!redundant) ideal.gens_.push_back(g);
        }
        std::sort(ideal.gens_.begin(), ideal.gens_.end(), std::greater<>{});
        return ideal;
    }

    static MonomialIdeal minimalize(std::size_t num_vars, std::initializer_list<Monomial> gens) {
        return minimalize(num_vars, std::span<const Monomial>(gens.begin(), gens.size()));
    }

    /// Infers the ring size from the generators; they must agree and be nonempty.
    static MonomialIdeal minimalize(std::span<const Monomial> gens) {
        if (gens.empty()) {
            throw std::invalid_argument("cannot infer the ring of an empty generator list");
        }
        return minimalize(gens.front().num_vars(), gens);
    }

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

    bool contains(const Monomial& m) const {
        if (m.num_vars() != num_vars_) {
            throw std::invalid_argument("monomial and ideal live in rings of different sizes");
        }
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }

    /// Smallest e with x_v^e in the ideal, if any.
    std::optional<int> pure_power_exponent(std::size_t v) const {
        std::optional<int> best;
        for (const auto& g : gens_) {
            if (g.degree() == g[v] && (!best || g[v] < *best)) best = g[v];
        }
        return best;
    }

    /// True when the ideal contains a pure power of every variable.
    bool is_artinian() const {
        for (std::size_t v = 0; v < num_vars_; ++v) {
            if (!pure_power_exponent(v)) return false;
        }
        return true;
    }

    bool contains_ideal(const MonomialIdeal& other) const {
        return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t num_vars_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars()) {
        throw std::invalid_argument("ideals live in rings of different sizes");
    }
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::minimalize(a.num_vars(), gens);
}

/// The same generators viewed in a larger ring.
inline MonomialIdeal extend_ring(const MonomialIdeal& ideal, std::size_t num_vars) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.extended(num_vars));
    return MonomialIdeal::minimalize(num_vars, gens);
}

/// The colon ideal (I : x_v^j).
inline MonomialIdeal colon_variable_power(const MonomialIdeal& ideal, std::size_t v, int j) {
    if (j < 0) throw std::invalid_argument("colon exponent must be nonnegative");
    if (v >= ideal.num_vars()) throw std::out_of_range("colon variable index");
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        gens.push_back(g.with_exponent(v, g[v] - std::min(j, g[v])));
    }
    return MonomialIdeal::minimalize(ideal.num_vars(), gens);
}

inline std::string to_string(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (const auto& g : ideal.generators()) {
        if (!out.empty()) out += ", ";
        out += to_string(g);
    }
    return out;
}

/**
 * The lex-segment ideal with the same Hilbert function as `ideal`, in two
 * variables (where it coincides with the generic initial ideal).
 *
 * Built degreewise: in each degree take the lex-largest dim I_d monomials.
 * Past the degree of the lcm of all generators the codimension is constant,
 * and from there on the lex segment is generated by the previous degree.
 */
inline MonomialIdeal lex_ideal(const MonomialIdeal& ideal) {
    if (ideal.num_vars() != 2) throw std::invalid_argument("lex_ideal is only defined in two variables");
    if (ideal.is_zero()) return ideal;
    Monomial lcm = Monomial::one(2);
    for (const auto& g : ideal.generators()) lcm = lcm.lcm(g);
    const int top = lcm.degree() + 1;

    std::vector<Monomial> gens;
    for (int d = 0; d <= top; ++d) {
        const auto monomials = monomials_of_degree(2, d);
        const auto in_ideal = std::count_if(monomials.begin(), monomials.end(),
                                            [&](const Monomial& m) { return ideal.contains(m); });
        gens.insert(gens.end(), monomials.begin(), monomials.begin() + in_ideal);
    }
    return MonomialIdeal::minimalize(2, gens);
}

}  // namespace lefschetz

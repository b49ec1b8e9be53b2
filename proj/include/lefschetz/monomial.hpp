#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefschetz {

/// Largest supported ambient ring: x, y, z plus one tensor variable t.
inline constexpr std::size_t kMaxVariables = 4;

inline constexpr char variable_name(std::size_t v) {
    constexpr char names[] = {'x', 'y', 'z', 't'};
    return v < kMaxVariables ? names[v] : '?';
}

/**
 * A monomial x^e0 y^e1 z^e2 t^e3 in a ring with a fixed number of variables.
 *
 * Ordering (operator<=>) is lexicographic on the exponent vector with x the
 * most significant variable, so x^2 > xy > y^2. Monomials from rings of
 * different sizes compare by ring size first.
 */
class Monomial {
public:
    Monomial() = default;

    /// The monomial 1 in a ring with `num_vars` variables.
    static Monomial one(std::size_t num_vars) {
        Monomial m;
        m.num_vars_ = check_size(num_vars);
        return m;
    }

    Monomial(std::initializer_list<int> exponents)
        : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

    explicit Monomial(std::span<const int> exponents) : num_vars_(check_size(exponents.size())) {
        for (std::size_t v = 0; v < exponents.size(); ++v) {
            if (exponents[v] < 0) {
                throw std::invalid_argument("monomial exponents must be nonnegative");
            }
            exps_[v] = exponents[v];
            degree_ += exponents[v];
        }
    }

    std::size_t num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    int operator[](std::size_t v) const { return exps_.at(v); }
    std::span<const int> exponents() const { return {exps_.data(), num_vars_}; }

    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const {
        same_ring(other);
        for (std::size_t v = 0; v < num_vars_; ++v) {
            if (exps_[v] > other.exps_[v]) return false;
        }
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        same_ring(other);
        Monomial out = *this;
        for (std::size_t v = 0; v < num_vars_; ++v) out.exps_[v] += other.exps_[v];
        out.degree_ += other.degree_;
        return out;
    }

    /// this / divisor; the divisor must divide this monomial.
    Monomial operator/(const Monomial& divisor) const {
        if (!divisor.divides(*this)) {
            throw std::invalid_argument("monomial quotient: divisor does not divide");
        }
        Monomial out = *this;
        for (std::size_t v = 0; v < num_vars_; ++v) out.exps_[v] -= divisor.exps_[v];
        out.degree_ -= divisor.degree_;
        return out;
    }

    Monomial lcm(const Monomial& other) const {
        same_ring(other);
        Monomial out = one(num_vars_);
        for (std::size_t v = 0; v < num_vars_; ++v) {
            out.exps_[v] = std::max(exps_[v], other.exps_[v]);
            out.degree_ += out.exps_[v];
        }
        return out;
    }

    Monomial with_exponent(std::size_t v, int e) const {
        if (v >= num_vars_) throw std::out_of_range("monomial variable index");
        if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
        Monomial out = *this;
        out.degree_ += e - exps_[v];
        out.exps_[v] = e;
        return out;
    }

    /// Same monomial viewed in a ring with more variables (new exponents 0).
    Monomial extended(std::size_t num_vars) const {
        if (num_vars < num_vars_) throw std::invalid_argument("cannot shrink a monomial's ring");
        Monomial out = *this;
        out.num_vars_ = check_size(num_vars);
        return out;
    }

    static Monomial variable_power(std::size_t num_vars, std::size_t v, int e) {
        return one(num_vars).with_exponent(v, e);
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.num_vars_ <=> b.num_vars_; c != 0) return c;
        return a.exps_ <=> b.exps_;
    }

private:
    static std::uint8_t check_size(std::size_t n) {
        if (n < 1 || n > kMaxVariables) {
            throw std::invalid_argument("ambient ring must have between 1 and 4 variables");
        }
        return static_cast<std::uint8_t>(n);
    }

    void same_ring(const Monomial& other) const {
        if (other.num_vars_ != num_vars_) {
            throw std::invalid_argument("monomials live in rings of different sizes");
        }
    }

    std::array<int, kMaxVariables> exps_{};
    std::uint8_t num_vars_ = 1;
    int degree_ = 0;
};

/// Renders as e.g. "x^2*y*z^3"; the monomial 1 renders as "1".
inline std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t v = 0; v < m.num_vars(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_name(v);
        if (m[v] > 1) out += '^' + std::to_string(m[v]);
    }
    return out;
}

namespace detail {
inline void fill_degree(std::size_t num_vars, std::size_t v, int remaining, std::array<int, kMaxVariables>& exps,
                        std::vector<Monomial>& out) {
    if (v + 1 == num_vars) {
        exps[v] = remaining;
        out.emplace_back(std::span<const int>(exps.data(), num_vars));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[v] = e;
        fill_degree(num_vars, v + 1, remaining - e, exps, out);
    }
}
}  // namespace detail

/// All monomials of degree d, in descending lex order (x^d first).
inline std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::array<int, kMaxVariables> exps{};
    detail::fill_degree(num_vars, 0, d, exps, out);
    return out;
}

}  // namespace lefschetz

#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/monomial.hpp"
#include "lefschetz/monomial_ideal.hpp"

namespace lefschetz {

// Grammar:
//   ideal    := "0" | monomial ("," monomial)*
//   monomial := "1" | factor (("*" | whitespace) factor)*
//   factor   := var ("^" digits)?      var in {x, y, z, t}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

inline std::optional<std::size_t> variable_index(char c) {
    switch (c) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        case 't': return 3;
        default: return std::nullopt;
    }
}

class IdealParser {
public:
    explicit IdealParser(std::string_view text) : text_(text) {}

    /// Exponent vectors of the listed monomials; empty for the zero ideal.
    std::vector<std::array<int, kMaxVariables>> parse_ideal() {
        std::vector<std::array<int, kMaxVariables>> out;
        skip_space();
        if (peek() == '0') {
            ++pos_;
            finish();
            return out;
        }
        out.push_back(parse_monomial());
        while (skip_space(), peek() == ',') {
            ++pos_;
            out.push_back(parse_monomial());
        }
        finish();
        return out;
    }

    /// One more than the largest variable index seen.
    std::size_t variables_used() const { return used_; }

private:
    std::array<int, kMaxVariables> parse_monomial() {
        std::array<int, kMaxVariables> exps{};
        skip_space();
        if (peek() == '1') {
            ++pos_;
            return exps;
        }
        parse_factor(exps);
        for (;;) {
            const std::size_t before = pos_;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                parse_factor(exps);
            } else if (pos_ > before && variable_index(peek())) {
                parse_factor(exps);
            } else if (pos_ == before && variable_index(peek())) {
                fail("expected '*' or whitespace between factors");
            } else {
                return exps;
            }
        }
    }

    void parse_factor(std::array<int, kMaxVariables>& exps) {
        const char c = peek();
        const auto v = variable_index(c);
        if (!v) {
            if (std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unknown variable '") + c + "'");
            fail("expected a variable");
        }
        ++pos_;
        used_ = std::max(used_, *v + 1);
        int e = 1;
        if (peek() == '^') {
            ++pos_;
            if (peek() == '-') fail("negative exponent");
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
            e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + (text_[pos_++] - '0');
                if (e > 1000000) fail("exponent too large");
            }
        }
        exps[*v] += e;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t used_ = 0;
};

}  // namespace detail

/// Number of variables an expression mentions (x=1, y=2, z=3, t=4); at least 1.
inline std::size_t infer_num_vars(std::string_view text) {
    detail::IdealParser parser(text);
    parser.parse_ideal();
    return std::max<std::size_t>(parser.variables_used(), 1);
}

/// Parses an ideal over a ring with `num_vars` variables and minimalizes it.
inline MonomialIdeal parse_ideal(std::string_view text, std::size_t num_vars) {
    detail::IdealParser parser(text);
    const auto exponents = parser.parse_ideal();
    if (parser.variables_used() > num_vars) {
        throw ParseError("expression uses more than " + std::to_string(num_vars) + " variables", 0);
    }
    std::vector<Monomial> gens;
    for (const auto& e : exponents) gens.emplace_back(std::span<const int>(e.data(), num_vars));
    return MonomialIdeal::minimalize(num_vars, gens);
}

inline MonomialIdeal parse_ideal(std::string_view text) { return parse_ideal(text, infer_num_vars(text)); }

inline Monomial parse_monomial(std::string_view text, std::size_t num_vars) {
    const auto ideal = parse_ideal(text, num_vars);
    if (ideal.generators().size() != 1) throw ParseError("expected a single monomial", 0);
    return ideal.generators().front();
}

}  // namespace lefschetz

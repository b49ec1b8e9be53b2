#include <gtest/gtest.h>

#include <random>

#include "lefschetz/lefschetz.hpp"

using namespace lefschetz;

namespace {

MonomialIdeal ideal(std::string_view text, std::size_t n = 2) { return parse_ideal(text, n); }

}  // namespace

TEST(Monomial, DegreeAndExponents) {
    const Monomial m{2, 0, 3};
    EXPECT_EQ(m.num_vars(), 3u);
    EXPECT_EQ(m.degree(), 5);
    EXPECT_EQ(m[2], 3);
    EXPECT_TRUE(Monomial::one(2).is_one());
    EXPECT_EQ(to_string(m), "x^2*z^3");
    EXPECT_EQ(to_string(Monomial::one(3)), "1");
}

TEST(Monomial, RejectsBadInput) {
    EXPECT_THROW((Monomial{-1, 2}), std::invalid_argument);
    EXPECT_THROW((Monomial{1, 1, 1, 1, 1}), std::invalid_argument);
    EXPECT_THROW((Monomial{1, 2} * Monomial{1, 2, 3}), std::invalid_argument);
}

TEST(Monomial, Arithmetic) {
    const Monomial a{2, 1};
    const Monomial b{1, 3};
    EXPECT_EQ(a * b, (Monomial{3, 4}));
    EXPECT_EQ(a.lcm(b), (Monomial{2, 3}));
    EXPECT_TRUE((Monomial{1, 1}).divides(a));
    EXPECT_FALSE(a.divides(b));
    EXPECT_EQ((Monomial{3, 4}) / b, a);
    EXPECT_EQ(a.extended(3), (Monomial{2, 1, 0}));
}

TEST(Monomial, DegreeListIsDescendingLex) {
    const auto ms = monomials_of_degree(2, 3);
    ASSERT_EQ(ms.size(), 4u);
    EXPECT_EQ(ms.front(), (Monomial{3, 0}));
    EXPECT_EQ(ms.back(), (Monomial{0, 3}));
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 5; ++d) {
            const auto list = monomials_of_degree(n, d);
            EXPECT_TRUE(std::is_sorted(list.rbegin(), list.rend()));
            const auto expected = binomial(d + static_cast<long>(n) - 1, static_cast<long>(n) - 1);
            EXPECT_EQ(Integer(static_cast<unsigned long>(list.size())), expected);
        }
    }
}

TEST(MonomialIdeal, Minimalize) {
    EXPECT_EQ(MonomialIdeal::minimalize(2, {Monomial{2, 0}, Monomial{3, 0}, Monomial{0, 1}}), ideal("x^2, y"));
    EXPECT_TRUE(MonomialIdeal::minimalize(2, {}).is_zero());
    const auto lex = ideal("x^3, x^2*y^2, x*y^4, y^6");
    EXPECT_EQ(lex.generators().size(), 4u);
    EXPECT_EQ(MonomialIdeal::minimalize(2, lex.generators()), lex);
    EXPECT_THROW(MonomialIdeal::minimalize(2, {Monomial{1, 0}, Monomial{1, 0, 0}}), std::invalid_argument);
}

TEST(MonomialIdeal, GeneratorsFormAnAntichain) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> e(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Monomial> gens;
        for (int k = 0; k < 6; ++k) gens.push_back(Monomial{e(rng), e(rng), e(rng)});
        const auto ideal = MonomialIdeal::minimalize(3, gens);
        for (const auto& g : gens) EXPECT_TRUE(ideal.contains(g));
        for (const auto& a : ideal.generators()) {
            for (const auto& b : ideal.generators()) {
                if (!(a == b)) EXPECT_FALSE(a.divides(b));
            }
        }
    }
}

TEST(MonomialIdeal, Contains) {
    const auto i = ideal("x^3, y^4");
    EXPECT_FALSE(i.contains(Monomial{2, 3}));
    EXPECT_TRUE(i.contains(Monomial{5, 0}));
    EXPECT_TRUE(ideal("x^5, x^4*y, x^3*y^3, x^2*y^5, x*y^7, y^9").contains(Monomial{4, 1}));
    EXPECT_FALSE(MonomialIdeal(2).contains(Monomial::one(2)));
    EXPECT_TRUE(MonomialIdeal::unit(2).contains(Monomial::one(2)));
}

TEST(MonomialIdeal, ContainsIsMonotone) {
    const auto i = ideal("x^3, x*y^2, y^5");
    for (const auto& m : monomials_of_degree(2, 4)) {
        if (!i.contains(m)) continue;
        for (std::size_t v = 0; v < 2; ++v) EXPECT_TRUE(i.contains(m * Monomial::variable_power(2, v, 1)));
    }
}

TEST(MonomialIdeal, ArtinianAndPurePowers) {
    EXPECT_TRUE(ideal("x^3, y^4").is_artinian());
    EXPECT_FALSE(ideal("x^3, x*y").is_artinian());
    EXPECT_EQ(ideal("x^3, y^4").pure_power_exponent(1), 4);
    EXPECT_FALSE(ideal("x*y").pure_power_exponent(0).has_value());
}

TEST(MonomialIdeal, Colon) {
    const auto i = ideal("x^3, y^3, z^3, x*z, y*z", 3);
    EXPECT_EQ(colon_variable_power(i, 2, 1), ideal("x, y, z^2", 3));
    EXPECT_EQ(colon_variable_power(i, 2, 0), i);
    EXPECT_TRUE(colon_variable_power(ideal("x^4", 1), 0, 4).is_unit());
}

TEST(MonomialIdeal, ColonMatchesMembershipOracle) {
    const auto i = ideal("x^4, x^2*y, y^3");
    for (int j = 0; j <= 5; ++j) {
        const auto colon = colon_variable_power(i, 0, j);
        for (int d = 0; d <= 6; ++d) {
            for (const auto& m : monomials_of_degree(2, d)) {
                EXPECT_EQ(colon.contains(m), i.contains(m * Monomial{j, 0}));
            }
        }
    }
}

TEST(MonomialIdeal, Lex) {
    EXPECT_EQ(lex_ideal(ideal("x^3, y^4")), ideal("x^3, x^2*y^2, x*y^4, y^6"));
    EXPECT_EQ(lex_ideal(ideal("x^5, y^5")), ideal("x^5, x^4*y, x^3*y^3, x^2*y^5, x*y^7, y^9"));
    EXPECT_EQ(lex_ideal(ideal("x^2, x*y")), ideal("x^2, x*y"));
    EXPECT_THROW(lex_ideal(ideal("x, y", 3)), std::invalid_argument);
}

TEST(MonomialIdeal, LexPreservesHilbertFunctionAndIsIdempotent) {
    for (const auto& i : staircase_ideals(4, 4)) {
        const auto lex = lex_ideal(i);
        int top = 0;
        for (const auto& g : lex.generators()) top = std::max(top, g.degree());
        for (int d = 0; d <= top + 2; ++d) {
            const auto ms = monomials_of_degree(2, d);
            const auto count = [&](const MonomialIdeal& j) {
                return std::count_if(ms.begin(), ms.end(), [&](const Monomial& m) { return j.contains(m); });
            };
            EXPECT_EQ(count(i), count(lex)) << to_string(i) << " degree " << d;
        }
        EXPECT_EQ(lex_ideal(lex), lex);
    }
}

TEST(Parse, Examples) {
    EXPECT_EQ(parse_ideal("x^3, y^4"), MonomialIdeal::minimalize(2, {Monomial{3, 0}, Monomial{0, 4}}));
    EXPECT_EQ(parse_ideal("x^3, x^2*y^2, x y^4, y^6"), ideal("x^3, x^2*y^2, x*y^4, y^6"));
    EXPECT_TRUE(parse_ideal("0", 2).is_zero());
    EXPECT_TRUE(parse_ideal("1", 2).is_unit());
    EXPECT_EQ(infer_num_vars("x*t"), 4u);
    EXPECT_EQ(parse_monomial("x^2 y", 2), (Monomial{2, 1}));
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_ideal("x^^2"), ParseError);
    EXPECT_THROW(parse_ideal("w^2"), ParseError);
    EXPECT_THROW(parse_ideal("x^-1"), ParseError);
    EXPECT_THROW(parse_ideal("x,"), ParseError);
    EXPECT_THROW(parse_ideal("xy"), ParseError);
    EXPECT_THROW(parse_ideal("x*z", 2), ParseError);
    try {
        parse_ideal("x^2, y^?");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 7u);
    }
}

TEST(Parse, RoundTrip) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Monomial> gens;
        for (int k = 0; k < 4; ++k) gens.push_back(Monomial{e(rng), e(rng), e(rng), e(rng)});
        const auto ideal = MonomialIdeal::minimalize(4, gens);
        const auto text = to_string(ideal);
        EXPECT_EQ(parse_ideal(text, 4), ideal) << text;
        EXPECT_EQ(parse_ideal(to_string(parse_ideal(text, 4)), 4), ideal);
    }
}

#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace ssval;
using namespace ssval::testing;

TEST(ExtRational, InfinityRules) {
    const auto inf = ext_rational::infinity();
    const ext_rational x(make_rational(3, 7));
    EXPECT_TRUE((inf + x).is_infinite());
    EXPECT_EQ(min(inf, x), x);
    EXPECT_EQ(min(x, inf), x);
    EXPECT_GT(inf, ext_rational(1000000));
    EXPECT_EQ(to_string(inf), "inf");
    EXPECT_EQ(parse_ext_rational("inf"), inf);
    EXPECT_EQ(parse_ext_rational("-6/4"), ext_rational(make_rational(-3, 2)));
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
    EXPECT_EQ(to_string(parse_rational("7")), "7/1");
    EXPECT_THROW(parse_rational("1/0"), error);
    EXPECT_THROW(parse_rational("abc"), error);
}

TEST(FieldDescriptor, IrreducibilityCriterion) {
    EXPECT_NO_THROW(field_descriptor::radical(11, 3));
    EXPECT_NO_THROW(field_descriptor::radical(3, 5));
    EXPECT_THROW(field_descriptor::radical(8, 3), error);   // 2^3
    EXPECT_THROW(field_descriptor::radical(9, 2), error);   // 3^2
    EXPECT_THROW(field_descriptor::radical(-4, 4), error);  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
    EXPECT_THROW(field_descriptor::radical(16, 4), error);
    EXPECT_NO_THROW(field_descriptor::radical(2, 4));
    EXPECT_THROW(field_descriptor::radical(2, 1), error);
}

TEST(FieldValuation, Examples) {
    auto d11 = field_descriptor::radical(11, 3);
    EXPECT_EQ(field_valuation(elem(d11, {0, 1}), 11), ext_rational(make_rational(1, 3)));
    auto d3 = field_descriptor::radical(3, 5);
    EXPECT_EQ(field_valuation(elem(d3, {0, 4, 1}), 3), ext_rational(make_rational(1, 5)));
    EXPECT_TRUE(field_valuation(q(Q(), 0), 5).is_infinite());
    EXPECT_EQ(field_valuation(q(Q(), 250), 5), ext_rational(3));
    EXPECT_EQ(field_valuation(q(Q(), 2, 25), 5), ext_rational(-2));
}

TEST(FieldValuation, UnsupportedFields) {
    auto d = field_descriptor::radical(2, 2);
    EXPECT_THROW(field_valuation(elem(d, {1, 1}), 3), error);  // 3 does not divide r
    auto d9 = field_descriptor::radical(18, 2);                // v_3(18) = 2, gcd(2, 2) != 1
    try {
        field_valuation(elem(d9, {1, 1}), 3);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::unsupported_field);
    }
}

TEST(FieldInvert, Examples) {
    auto d11 = field_descriptor::radical(11, 3);
    const auto inv = field_invert(elem(d11, {0, 0, 1}));
    EXPECT_EQ(inv, field_element(d11, {0, make_rational(1, 11), 0}));
    EXPECT_EQ(field_invert(q(Q(), 2)), q(Q(), 1, 2));
    auto d2 = field_descriptor::radical(2, 2);
    EXPECT_EQ(field_invert(elem(d2, {1, 1})), elem(d2, {-1, 1}));
    try {
        field_invert(field_element::zero(d2));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::division_by_zero);
    }
}

namespace {

field_element random_element(std::mt19937& rng, const field_descriptor& d) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    std::vector<rational> cs;
    for (int i = 0; i < d.degree(); ++i) cs.push_back(make_rational(num(rng), den(rng)));
    return field_element(d, cs);
}

struct field_case {
    long r;
    int e;
    prime_t p;
};

} // namespace

class FieldProperties : public ::testing::TestWithParam<field_case> {};

TEST_P(FieldProperties, ValuationMatchesNormOracle) {
    const auto c = GetParam();
    auto d = field_descriptor::radical(c.r, c.e);
    std::mt19937 rng(1234);
    for (int t = 0; t < 60; ++t) {
        const auto a = random_element(rng, d);
        EXPECT_EQ(field_valuation(a, c.p), valuation_via_norm(a, c.p)) << a.to_string();
    }
}

TEST_P(FieldProperties, ValuationIsMultiplicativeAndUltrametric) {
    const auto c = GetParam();
    auto d = field_descriptor::radical(c.r, c.e);
    std::mt19937 rng(99);
    for (int t = 0; t < 60; ++t) {
        const auto a = random_element(rng, d), b = random_element(rng, d);
        const auto va = field_valuation(a, c.p), vb = field_valuation(b, c.p);
        if (!a.is_zero() && !b.is_zero()) {
            EXPECT_EQ(field_valuation(a * b, c.p), va + vb);
        }
        const auto vs = field_valuation(a + b, c.p);
        EXPECT_GE(vs, min(va, vb));
        if (!(va == vb)) {
            EXPECT_EQ(vs, min(va, vb));
        }
    }
}

TEST_P(FieldProperties, InverseIsTwoSided) {
    const auto c = GetParam();
    auto d = field_descriptor::radical(c.r, c.e);
    std::mt19937 rng(7);
    const auto one = field_element::from_rational(d, 1);
    for (int t = 0; t < 40; ++t) {
        const auto a = random_element(rng, d);
        if (a.is_zero()) continue;
        const auto inv = field_invert(a);
        EXPECT_EQ(a * inv, one);
        EXPECT_EQ(inv * a, one);
    }
}

INSTANTIATE_TEST_SUITE_P(Radicals, FieldProperties,
                         ::testing::Values(field_case{11, 3, 11}, field_case{3, 5, 3}, field_case{2, 3, 2},
                                           field_case{12, 5, 3}, field_case{-5, 2, 5}, field_case{7, 4, 7}));

TEST(FieldValuation, IntegersMatchPadic) {
    for (long m : {1L, 2L, 24L, 81L, 250L, -1024L, 3125L})
        for (prime_t p : {2UL, 3UL, 5UL}) EXPECT_EQ(field_valuation(q(Q(), m), p), ext_rational(vp(integer(m), p)));
}

#include <map>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace ssval;
using namespace ssval::testing;

namespace {

using multiset = std::map<rational, std::int64_t, std::greater<>>;

/// Root valuations (with multiplicity) of a polynomial whose coefficient
/// valuations are given at a few indices, by gift wrapping from the left.
std::vector<std::pair<rational, long>> model_roots(const std::vector<std::pair<long, rational>>& pts) {
    std::vector<std::pair<rational, long>> out;
    std::size_t i = 0;
    while (i + 1 < pts.size()) {
        std::size_t best = i + 1;
        rational best_slope = (pts[best].second - pts[i].second) / rational(pts[best].first - pts[i].first);
        for (std::size_t j = i + 2; j < pts.size(); ++j) {
            const rational s = (pts[j].second - pts[i].second) / rational(pts[j].first - pts[i].first);
            if (s <= best_slope) {
                best_slope = s;
                best = j;
            }
        }
        out.emplace_back(-best_slope, pts[best].first - pts[i].first);
        i = best;
    }
    return out;
}

/// Valuations of exact-order p^n elements, propagating fibers of a model
/// [p]T with v(T-coefficient) = 1, v(T^p-coefficient) = mu, v(T^(p^2)) = 0.
multiset model_spectrum(prime_t p, long n, const ext_rational& mu) {
    const long pl = static_cast<long>(p);
    auto fiber_points = [&](const rational* beta) {
        std::vector<std::pair<long, rational>> pts;
        const long off = beta ? 0 : 1;  // beta = 0: divide [p]T by T
        if (beta) pts.emplace_back(0, *beta);
        pts.emplace_back(1 - off, 1);
        if (mu.is_finite()) pts.emplace_back(pl - off, mu.value());
        pts.emplace_back(pl * pl - off, 0);
        return pts;
    };
    multiset level;
    for (const auto& [v, k] : model_roots(fiber_points(nullptr))) level[v] += k;
    for (long j = 2; j <= n; ++j) {
        multiset next;
        for (const auto& [beta, count] : level)
            for (const auto& [v, k] : model_roots(fiber_points(&beta))) next[v] += count * k;
        level = next;
    }
    return level;
}

multiset as_multiset(const valuation_spectrum& s) {
    multiset out;
    for (const auto& e : s.entries) out[e.valuation] += e.count;
    return out;
}

const std::vector<prime_t> sweep_primes{2, 3, 5, 7, 11, 13};

std::vector<ext_rational> sweep_mus() {
    return {ext_rational(make_rational(1, 12)), ext_rational(make_rational(1, 5)), ext_rational(make_rational(1, 3)),
            ext_rational(make_rational(1, 2)),  ext_rational(make_rational(3, 4)), ext_rational(1),
            ext_rational::infinity()};
}

} // namespace

TEST(CanonicalRegime, Examples) {
    const auto a = canonical_regime_for(11, ext_rational(make_rational(1, 3)));
    EXPECT_TRUE(a.has_canonical());
    EXPECT_EQ(a.s, 0);
    const auto b = canonical_regime_for(3, ext_rational(make_rational(1, 5)));
    EXPECT_TRUE(b.has_canonical());
    EXPECT_EQ(b.s, 1);
    EXPECT_FALSE(canonical_regime_for(3, ext_rational::infinity()).has_canonical());
    // Boundaries are non-strict: mu = p/(p+1) has no canonical subgroup, mu = 1/(p(p+1)) has s = 1.
    EXPECT_FALSE(canonical_regime_for(3, ext_rational(make_rational(3, 4))).has_canonical());
    EXPECT_EQ(canonical_regime_for(3, ext_rational(make_rational(1, 12))).s, 1);
    EXPECT_EQ(canonical_regime_for(3, ext_rational(make_rational(1, 13))).s, 2);
    try {
        canonical_regime_for(3, ext_rational(0));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::invalid_mu);
    }
}

TEST(TorsionSpectrum, Examples) {
    const auto a = torsion_spectrum(11, 1, ext_rational(make_rational(1, 3)));
    ASSERT_EQ(a.entries.size(), 2U);
    EXPECT_EQ(a.entries[0], (spectrum_entry{make_rational(1, 15), 10, true, entry_tag::top}));
    EXPECT_EQ(a.entries[1], (spectrum_entry{make_rational(1, 330), 110, false, entry_tag::off_canonical}));

    const auto b = torsion_spectrum(3, 2, ext_rational(make_rational(1, 5)));
    ASSERT_EQ(b.entries.size(), 3U);
    EXPECT_EQ(b.entries[0], (spectrum_entry{make_rational(1, 15), 6, true, entry_tag::top}));
    EXPECT_EQ(b.entries[1], (spectrum_entry{make_rational(1, 30), 12, true, entry_tag::layer, 2}));
    EXPECT_EQ(b.entries[2], (spectrum_entry{make_rational(1, 270), 54, false, entry_tag::off_canonical}));

    const auto c = torsion_spectrum(3, 3, ext_rational(make_rational(1, 5)));
    const multiset want{{make_rational(1, 135), 54}, {make_rational(1, 270), 108}, {make_rational(1, 2430), 486}};
    EXPECT_EQ(as_multiset(c), want);
    EXPECT_EQ(c.total_count(), 648);
    EXPECT_EQ(c.weighted_sum(), 1);

    const auto d = torsion_spectrum(3, 1, ext_rational::infinity());
    ASSERT_EQ(d.entries.size(), 1U);
    EXPECT_EQ(d.entries[0], (spectrum_entry{make_rational(1, 8), 8, false, entry_tag::off_canonical}));
}

TEST(TorsionSpectrum, SumAndCountInvariantsOnSweep) {
    for (prime_t p : sweep_primes)
        for (long n = 1; n <= 4; ++n)
            for (const auto& mu : sweep_mus()) {
                const auto s = torsion_spectrum(p, n, mu);
                EXPECT_EQ(integer(s.total_count()), exact_order_count(p, n)) << p << " " << n << " " << to_string(mu);
                EXPECT_EQ(s.weighted_sum(), 1) << p << " " << n << " " << to_string(mu);
                for (const auto& e : s.entries) EXPECT_GT(e.valuation, 0);
            }
}

TEST(TorsionSpectrum, MatchesFiberModelOnSweep) {
    for (prime_t p : sweep_primes)
        for (long n = 1; n <= 4; ++n)
            for (const auto& mu : sweep_mus())
                EXPECT_EQ(as_multiset(torsion_spectrum(p, n, mu)), model_spectrum(p, n, mu))
                    << p << " " << n << " " << to_string(mu);
    // Boundary values where neighbouring entries merge.
    for (prime_t p : {2UL, 3UL, 5UL})
        for (long s = 0; s <= 3; ++s) {
            const ext_rational mu(rational(integer(1), ipow(p, s) * (p + 1)));
            for (long n = 1; n <= 5; ++n)
                EXPECT_EQ(as_multiset(torsion_spectrum(p, n, mu)), model_spectrum(p, n, mu)) << p << " " << s;
        }
}

TEST(TorsionSpectrum, LayeringAndTopCounts) {
    for (prime_t p : sweep_primes)
        for (const auto& mu : sweep_mus()) {
            const auto regime = canonical_regime_for(p, mu);
            if (!regime.has_canonical()) continue;
            for (long n = 1; n <= 4; ++n) {
                const auto s = torsion_spectrum(p, n, mu);
                EXPECT_EQ(s.entries.front().tag, entry_tag::top);
                EXPECT_EQ(s.entries.back().tag, entry_tag::off_canonical);
                for (std::size_t i = 1; i < s.entries.size(); ++i)
                    EXPECT_GT(s.entries[i - 1].valuation, s.entries[i].valuation);
                if (n <= regime.s + 1) {
                    EXPECT_EQ(integer(s.entries.front().count), ipow(p, n - 1) * (p - 1)) << p << " " << n;
                }
            }
        }
}

TEST(XCoordinateSpectrum, Examples) {
    const auto xs = x_coordinate_spectrum(torsion_spectrum(3, 2, ext_rational(make_rational(1, 5))));
    const std::vector<x_coordinate_class> want{
        {make_rational(-2, 15), 3}, {make_rational(-1, 15), 6}, {make_rational(-1, 135), 27}};
    EXPECT_EQ(xs, want);
    const std::vector<x_coordinate_class> want121{{make_rational(-2, 15), 5}, {make_rational(-1, 165), 55}};
    EXPECT_EQ(x_coordinate_spectrum(torsion_spectrum(11, 1, ext_rational(make_rational(1, 3)))), want121);
    const std::vector<x_coordinate_class> nocan{{make_rational(-1, 4), 4}};
    EXPECT_EQ(x_coordinate_spectrum(torsion_spectrum(3, 1, ext_rational::infinity())), nocan);
}

TEST(XCoordinateSpectrum, SumsToMinusOneOrTwo) {
    for (prime_t p : sweep_primes)
        for (long n = 1; n <= 3; ++n)
            for (const auto& mu : sweep_mus()) {
                rational sum = 0;
                for (const auto& x : x_coordinate_spectrum(torsion_spectrum(p, n, mu))) sum += x.valuation * x.count;
                EXPECT_EQ(sum, (p == 2 && n == 1) ? -2 : -1) << p << " " << n << " " << to_string(mu);
            }
}

TEST(XCoordinateSpectrum, AgreesWithPrimitivePartPolygon) {
    for (const auto& c : supersingular_cases()) {
        if (c.p > 5) continue;
        const auto m = mu(c.curve, c.p);
        for (long n = 1; n <= 2; ++n) {
            std::map<rational, long, std::greater<>> roots;
            for (const auto& r : newton_polygon_of(primitive_part(c.curve, c.p, n), c.p).root_valuations())
                roots[r.valuation.value()] += r.count;
            std::map<rational, long, std::greater<>> want;
            for (const auto& x : x_coordinate_spectrum(torsion_spectrum(c.p, n, m))) want[x.valuation] += x.count;
            EXPECT_EQ(roots, want) << c.name << " n=" << n;
        }
    }
}

TEST(RamificationBounds, Examples) {
    const auto r1 = ramification_bounds(3, 1, canonical_regime_for(3, ext_rational::infinity()),
                                        torsion_spectrum(3, 1, ext_rational::infinity()));
    EXPECT_EQ(r1.e_P_lower, 8);
    EXPECT_FALSE(r1.e_P_strict);
    EXPECT_EQ(r1.e_p_divisibility, std::optional<std::int64_t>(8));
    EXPECT_EQ(r1.lcm_denominators, 8);
    EXPECT_EQ(r1.e_p_lower, 3);

    const ext_rational third(make_rational(1, 3));
    const auto r2 = ramification_bounds(11, 1, canonical_regime_for(11, third), torsion_spectrum(11, 1, third));
    EXPECT_EQ(r2.lcm_denominators, 330);
    EXPECT_TRUE(r2.e_P_strict);
    EXPECT_FALSE(r2.e_p_divisibility.has_value());

    const ext_rational fifth(make_rational(1, 5));
    const auto r3 = ramification_bounds(3, 2, canonical_regime_for(3, fifth), torsion_spectrum(3, 2, fifth));
    EXPECT_EQ(r3.lcm_denominators, 270);
    EXPECT_EQ(r3.e_P_lower, 72);
    EXPECT_EQ(r3.e_p_lower, 7);
    EXPECT_THROW(ramification_bounds(3, 1, canonical_regime_for(3, fifth), torsion_spectrum(3, 2, fifth)), error);
}

TEST(MinimalTorsionFieldDegree, Examples) {
    EXPECT_EQ(minimal_torsion_field_degree({{3, 1}}), 8);
    EXPECT_EQ(minimal_torsion_field_degree({{5, 1}, {7, 1}}), 1152);
    EXPECT_EQ(minimal_torsion_field_degree({{2, 2}}), 12);
}

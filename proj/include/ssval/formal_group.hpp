#pragma once

// The formal group of a Weierstrass curve: the expansion w(z), the formal
// logarithm, the multiplication-by-m series, and Newton-polygon analysis of
// the fibers of [p]. This is an independent route to the torsion valuations
// in spectrum.hpp and shares no code with it.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "ssval/curve.hpp"
#include "ssval/newton.hpp"

namespace ssval {

/// Truncated power series; coefficients of degree >= precision() are unknown.
struct formal_series {
    field_descriptor field;
    std::vector<field_element> coeffs;

    long precision() const noexcept { return static_cast<long>(coeffs.size()); }

    const field_element& coeff(long k) const {
        if (k < 0 || k >= precision())
            throw error(errc::precision_too_low, "coefficient of T^" + std::to_string(k) +
                                                     " is beyond precision " + std::to_string(precision()));
        return coeffs[k];
    }
};

namespace series {

inline std::vector<field_element> zeros(const field_descriptor& d, long n) {
    return std::vector<field_element>(static_cast<std::size_t>(n), field_element::zero(d));
}

/// a * b mod T^n.
inline std::vector<field_element> mul(const field_descriptor& d, const std::vector<field_element>& a,
                                      const std::vector<field_element>& b, long n) {
    auto out = zeros(d, n);
    const long na = std::min<long>(static_cast<long>(a.size()), n);
    for (long i = 0; i < na; ++i) {
        if (a[i].is_zero()) continue;
        const long nb = std::min<long>(static_cast<long>(b.size()), n - i);
        for (long j = 0; j < nb; ++j)
            if (!b[j].is_zero()) out[i + j].add_product(a[i], b[j]);
    }
    return out;
}

/// 1 / a mod T^n; a(0) must be nonzero.
inline std::vector<field_element> inverse(const field_descriptor& d, const std::vector<field_element>& a, long n) {
    if (a.empty() || a[0].is_zero()) throw error(errc::division_by_zero, "series with zero constant term");
    auto out = zeros(d, n);
    const auto a0_inv = field_invert(a[0]);
    out[0] = a0_inv;
    for (long k = 1; k < n; ++k) {
        auto acc = field_element::zero(d);
        for (long i = 1; i <= k && i < static_cast<long>(a.size()); ++i) acc.add_product(a[i], out[k - i]);
        out[k] = -(acc * a0_inv);
    }
    return out;
}

/// f(g(T)) mod T^n; g(0) must vanish.
inline std::vector<field_element> compose(const field_descriptor& d, const std::vector<field_element>& f,
                                          const std::vector<field_element>& g, long n) {
    if (!g.empty() && !g[0].is_zero()) throw error(errc::invalid_input, "inner series must have zero constant term");
    auto out = zeros(d, n);
    const long top = std::min<long>(static_cast<long>(f.size()), n) - 1;
    for (long k = top; k >= 0; --k) {
        out = mul(d, out, g, n);
        out[0] += f[k];
    }
    return out;
}

/// Compositional inverse of f = f1 T + f2 T^2 + ... (f1 != 0) mod T^n, by
/// Lagrange inversion: [T^k] g = (1/k) [T^(k-1)] (T / f)^k.
inline std::vector<field_element> reversion(const field_descriptor& d, const std::vector<field_element>& f, long n) {
    if (f.size() < 2 || !f[0].is_zero() || f[1].is_zero())
        throw error(errc::invalid_input, "reversion needs f(0) = 0 and f'(0) != 0");
    std::vector<field_element> h(f.begin() + 1, f.end());
    const auto q = inverse(d, h, n - 1);
    auto out = zeros(d, n);
    auto power = q;
    for (long k = 1; k < n; ++k) {
        if (k > 1) power = mul(d, power, q, n - 1);
        out[k] = power[k - 1] * rational(1, k);
    }
    return out;
}

} // namespace series

struct formal_expansion_result {
    formal_series w;
    formal_series log;
};

/// w(z) with x = z/w, y = -1/w, and the formal logarithm (integral of the
/// invariant differential), both to the given precision.
inline formal_expansion_result formal_expansion(const curve_model& curve, long precision) {
    if (precision < 4) throw error(errc::precision_too_low, "formal expansion needs precision >= 4");
    const auto& d = curve.field();
    const long n = precision + 4;

    // Fixed point of w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3;
    // each pass fixes at least one more coefficient.
    auto w = series::zeros(d, n);
    for (long iter = 0; iter < n; ++iter) {
        const auto w2 = series::mul(d, w, w, n);
        const auto w3 = series::mul(d, w2, w, n);
        auto next = series::zeros(d, n);
        next[3] += field_element::from_rational(d, 1);
        for (long k = 0; k + 1 < n; ++k) {
            next[k + 1].add_product(curve.a1(), w[k]);
            next[k + 1].add_product(curve.a4(), w2[k]);
        }
        for (long k = 0; k + 2 < n; ++k) next[k + 2].add_product(curve.a2(), w[k]);
        for (long k = 0; k < n; ++k) {
            next[k].add_product(curve.a3(), w2[k]);
            next[k].add_product(curve.a6(), w3[k]);
        }
        const bool settled = std::equal(next.begin(), next.end(), w.begin(),
                                        [](const auto& a, const auto& b) { return a == b; });
        w = std::move(next);
        if (settled) break;
    }

    // w = z^3 u, x = z^-2 v, y = -z^-3 v with v = 1/u. Then
    // omega = dx / (2y + a1 x + a3) = (-2v + z v') / (-2v + a1 z v + a3 z^3) dz.
    const long m = n - 3;
    std::vector<field_element> u(w.begin() + 3, w.end());
    const auto v = series::inverse(d, u, m);
    auto num = series::zeros(d, m);
    auto den = series::zeros(d, m);
    for (long k = 0; k < m; ++k) {
        num[k] = v[k] * rational(k - 2);
        den[k] = v[k] * rational(-2);
        if (k >= 1) den[k].add_product(curve.a1(), v[k - 1]);
        if (k == 3) den[k] += curve.a3();
    }
    const auto omega = series::mul(d, num, series::inverse(d, den, m), m);

    auto log = series::zeros(d, m + 1);
    for (long k = 1; k <= m; ++k) log[k] = omega[k - 1] * rational(1, k);

    w.resize(precision);
    log.resize(precision);
    return {{d, std::move(w)}, {d, std::move(log)}};
}

/// [m]T = exp(m log T), exp being the compositional inverse of log.
inline formal_series multiplication_series(const curve_model& curve, long m, long precision) {
    if (precision < 2) throw error(errc::precision_too_low, "multiplication series needs precision >= 2");
    const auto& d = curve.field();
    const auto lg = formal_expansion(curve, std::max<long>(precision, 4)).log;
    auto scaled = lg.coeffs;
    for (auto& c : scaled) c *= rational(m);
    const auto exp = series::reversion(d, lg.coeffs, lg.precision());
    auto out = series::compose(d, exp, scaled, lg.precision());
    out.resize(precision);
    return {d, std::move(out)};
}

/// First index k >= 1 whose coefficient is a unit: the number of roots of
/// [p]T - beta in the maximal ideal.
inline long weierstrass_degree(const formal_series& mul_p, prime_t p) {
    for (long k = 1; k < mul_p.precision(); ++k)
        if (field_valuation(mul_p.coeffs[k], p) == ext_rational(0)) return k;
    throw error(errc::precision_too_low, "no unit coefficient within precision " + std::to_string(mul_p.precision()));
}

/// Every coefficient past the Weierstrass degree lies on or above the hull's
/// right endpoint (height 0), so truncating there loses no roots.
inline bool truncation_certified(const formal_series& mul_p, prime_t p) {
    const long wd = weierstrass_degree(mul_p, p);
    for (long k = wd + 1; k < mul_p.precision(); ++k)
        if (field_valuation(mul_p.coeffs[k], p) < ext_rational(0)) return false;
    return true;
}

inline std::vector<root_class> merge_roots(std::vector<root_class> roots) {
    std::map<ext_rational, long, std::greater<>> acc;
    for (const auto& r : roots) acc[r.valuation] += r.count;
    std::vector<root_class> out;
    for (const auto& [v, c] : acc) out.push_back({v, c});
    return out;
}

/// Valuations of the roots of [p]T - beta given only v(beta). An infinite
/// beta_valuation means beta = 0: the root 0 is reported with valuation inf.
inline std::vector<root_class> fiber_valuations(const formal_series& mul_p, const ext_rational& beta_valuation,
                                               prime_t p) {
    require_prime(p);
    if (mul_p.precision() < static_cast<long>(p * p + 1))
        throw error(errc::precision_too_low, "[p]T needs precision >= p^2 + 1");
    if (beta_valuation.is_finite() && beta_valuation <= ext_rational(0))
        throw error(errc::invalid_input, "fiber base point must lie in the maximal ideal");
    const long wd = weierstrass_degree(mul_p, p);

    std::vector<std::pair<long, ext_rational>> pts;
    std::vector<root_class> roots;
    if (beta_valuation.is_infinite()) {
        // [p]T / T on slots 0 .. wd - 1, plus the root T = 0.
        for (long k = 1; k <= wd; ++k) pts.emplace_back(k - 1, field_valuation(mul_p.coeffs[k], p));
        roots.push_back({ext_rational::infinity(), 1});
    } else {
        pts.emplace_back(0, beta_valuation);
        for (long k = 1; k <= wd; ++k) pts.emplace_back(k, field_valuation(mul_p.coeffs[k], p));
    }
    for (const auto& r : lower_hull(pts).root_valuations()) roots.push_back(r);
    return merge_roots(std::move(roots));
}

/// Valuations of the elements of exact order p^n, by iterating fibers from 0.
inline std::vector<root_class> fiber_oracle_spectrum(const formal_series& mul_p, prime_t p, long n) {
    if (n < 1) throw error(errc::invalid_input, "level n must be positive");
    std::vector<root_class> level;
    for (const auto& r : fiber_valuations(mul_p, ext_rational::infinity(), p))
        if (r.valuation.is_finite()) level.push_back(r);
    for (long k = 2; k <= n; ++k) {
        std::vector<root_class> next;
        for (const auto& base : level)
            for (const auto& r : fiber_valuations(mul_p, base.valuation, p))
                next.push_back({r.valuation, r.count * base.count});
        level = merge_roots(std::move(next));
    }
    return level;
}

} // namespace ssval

#pragma once

// Curves used across the test suite, built in code so that tests do not
// depend on the JSON reader, plus small exact helpers shared by oracles.

#include <string>
#include <vector>

#include "ssval/ssval.hpp"

namespace ssval::testing {

inline field_descriptor Q() { return field_descriptor::rational_field(); }

inline field_element q(const field_descriptor& d, long num, long den = 1) {
    return field_element::from_rational(d, make_rational(num, den));
}

/// Element of Q(r^(1/e)) from integer coordinates, constant term first.
inline field_element elem(const field_descriptor& d, std::vector<long> cs) {
    std::vector<rational> out;
    for (long c : cs) out.emplace_back(c);
    out.resize(d.degree());
    return field_element(d, std::move(out));
}

/// y^2 + 11^(1/3) xy = x^3 + 11^(2/3) x^2 + 3 11^(1/3) x + 2.
inline curve_model curve_121c2() {
    auto d = field_descriptor::radical(11, 3);
    return curve_model(d, {elem(d, {0, 1}), elem(d, {0, 0, 1}), q(d, 0), elem(d, {0, 3}), q(d, 2)});
}

/// y^2 + 3^(1/5) xy + y = x^3 + 3^(1/5) x^2 + 2x.
inline curve_model curve_9tors() {
    auto d = field_descriptor::radical(3, 5);
    return curve_model(d, {elem(d, {0, 1}), elem(d, {0, 1}), q(d, 1), q(d, 2), q(d, 0)});
}

/// y^2 + 2^(1/3) xy + y = x^3.
inline curve_model curve_cuberoot2() {
    auto d = field_descriptor::radical(2, 3);
    return curve_model(d, {elem(d, {0, 1}), q(d, 0), q(d, 1), q(d, 0), q(d, 0)});
}

/// y^2 = x^3 + 5^(1/3) x + 1.
inline curve_model curve_cuberoot5() {
    auto d = field_descriptor::radical(5, 3);
    return curve_model(d, {q(d, 0), q(d, 0), q(d, 0), elem(d, {0, 1}), q(d, 1)});
}

/// y^2 = x^3 + x + 7^(1/3).
inline curve_model curve_cuberoot7() {
    auto d = field_descriptor::radical(7, 3);
    return curve_model(d, {q(d, 0), q(d, 0), q(d, 0), q(d, 1), elem(d, {0, 1})});
}

inline curve_model curve_x3p1() { return curve_model::over_q(0, 0, 0, 0, 1); }
inline curve_model curve_x3mx() { return curve_model::over_q(0, 0, 0, -1, 0); }
inline curve_model curve_x3px() { return curve_model::over_q(0, 0, 0, 1, 0); }
inline curve_model curve_y2py() { return curve_model::over_q(0, 0, 1, 0, 0); }
inline curve_model curve_37a() { return curve_model::over_q(0, 0, 1, -1, 0); }
/// y^2 = x^3 - A x - B with A = 1, B = -1; good at 3.
inline curve_model curve_cassels() { return curve_model::over_q(0, 0, 0, -1, 1); }

struct supersingular_case {
    std::string name;
    curve_model curve;
    prime_t p;
};

/// Every fixture curve with good supersingular reduction at the listed prime.
inline std::vector<supersingular_case> supersingular_cases() {
    return {{"121c2", curve_121c2(), 11},     {"9tors", curve_9tors(), 3},     {"cuberoot2", curve_cuberoot2(), 2},
            {"cuberoot5", curve_cuberoot5(), 5}, {"cuberoot7", curve_cuberoot7(), 7}, {"x3p1", curve_x3p1(), 5},
            {"x3mx", curve_x3mx(), 3},           {"x3px", curve_x3px(), 7},       {"y2py", curve_y2py(), 2},
            {"cassels", curve_cassels(), 3}};
}

/// Exact determinant over Q by Gaussian elimination.
inline rational determinant(std::vector<std::vector<rational>> m) {
    const std::size_t n = m.size();
    rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Norm of a in Q(r^(1/e)) as the determinant of multiplication by a,
/// written out from the relation x^e = r without using field arithmetic.
inline rational norm(const field_element& a) {
    const auto& d = a.descriptor();
    const int e = d.degree();
    const rational r(d.is_rational() ? 1 : d.radicand());
    std::vector<std::vector<rational>> m(e, std::vector<rational>(e, rational(0)));
    for (int j = 0; j < e; ++j)     // image of the basis vector x^j
        for (int i = 0; i < e; ++i) {
            const int k = i + j;
            if (k < e)
                m[k][j] += a.coords()[i];
            else
                m[k - e][j] += a.coords()[i] * r;
        }
    return determinant(m);
}

/// In a totally ramified extension of degree e, v_p(N(a)) = e v(a).
inline ext_rational valuation_via_norm(const field_element& a, prime_t p) {
    const rational n = norm(a);
    if (n == 0) return ext_rational::infinity();
    rational v(vp(n, p), a.descriptor().degree());
    v.canonicalize();
    return ext_rational(v);
}

} // namespace ssval::testing

#pragma once

// Degree gates: a lower bound on the degree of any point of X_1(N) lying over
// the curve's j-invariant, compared with the gonality bound 11 N^2 / 840.
// A bound at least the gonality bound rules out a sporadic point; anything
// else is inconclusive. No gate ever certifies a sporadic point.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssval/spectrum.hpp"

namespace ssval {

enum class j_class { generic, j0, j1728 };

inline std::string j_class_name(j_class j) {
    switch (j) {
    case j_class::generic: return "generic";
    case j_class::j0: return "j0";
    case j_class::j1728: return "j1728";
    }
    return "?";
}

inline j_class parse_j_class(const std::string& s) {
    if (s == "generic") return j_class::generic;
    if (s == "j0") return j_class::j0;
    if (s == "j1728") return j_class::j1728;
    throw error(errc::invalid_input, "unknown j-class '" + s + "' (expected generic|j0|j1728)");
}

/// |Aut(E)| over an algebraically closed field of characteristic 0.
inline long automorphism_order(j_class j) {
    switch (j) {
    case j_class::generic: return 2;
    case j_class::j0: return 6;
    case j_class::j1728: return 4;
    }
    return 2;
}

enum class decision { not_sporadic, inconclusive };

inline std::string decision_name(decision d) { return d == decision::not_sporadic ? "NotSporadic" : "Inconclusive"; }

struct sporadic_verdict {
    decision outcome = decision::inconclusive;
    rational degree_lower_bound;
    rational gonality_bound;
    /// generic | j0 | j1728 | CM-constant | composite | custom | hypothesis-unmet
    std::string rationale;
    /// N <= 12: X_1(N) has gonality 1 and no sporadic points at all.
    bool level_without_sporadic_points = false;

    friend bool operator==(const sporadic_verdict&, const sporadic_verdict&) = default;
};

/// 11 N^2 / 840, valid for every N.
inline rational gonality_formula(const integer& level) {
    rational g(integer(11 * level * level), integer(840));
    g.canonicalize();
    return g;
}

/// The gonality bound for N > 12; nullopt marks N <= 12 (no sporadic points exist).
inline std::optional<rational> gonality_upper_bound(const integer& level) {
    if (level < 1) throw error(errc::invalid_input, "level must be positive");
    if (level <= 12) return std::nullopt;
    return gonality_formula(level);
}

namespace detail {

inline sporadic_verdict decide(const integer& level, rational bound, std::string rationale) {
    sporadic_verdict v;
    bound.canonicalize();
    v.degree_lower_bound = bound;
    v.gonality_bound = gonality_formula(level);
    v.outcome = v.degree_lower_bound >= v.gonality_bound ? decision::not_sporadic : decision::inconclusive;
    v.rationale = std::move(rationale);
    v.level_without_sporadic_points = level <= 12;
    return v;
}

inline rational rational_power(prime_t p, long exp) {
    if (exp >= 0) return rational(ipow(p, exp));
    return rational(integer(1), ipow(p, -exp));
}

} // namespace detail

/// Prime-power level p^n for a curve supersingular at a prime above p.
inline sporadic_verdict primepower_gate(j_class jc, prime_t p, long n, bool has_canonical) {
    require_prime(p);
    if (n < 1) throw error(errc::invalid_input, "level n must be positive");
    const integer level = ipow(p, n);
    const rational full(exact_order_count(p, n));

    // Least CM degrees on X_1(2^n) for Z[i] and on X_1(3^n) for Z[(1+sqrt(-3))/2].
    if (jc == j_class::j1728 && p == 2) return detail::decide(level, detail::rational_power(2, 2 * n - 4), "CM-constant");
    if (jc == j_class::j0 && p == 3) return detail::decide(level, detail::rational_power(3, 2 * n - 3), "CM-constant");

    if (has_canonical) {
        auto v = detail::decide(level, 0, "hypothesis-unmet");
        v.outcome = decision::inconclusive;
        return v;
    }
    switch (jc) {
    case j_class::generic:
        // Degree 24 to resolve additive reduction, then the Weber quotient by Aut = {+-1}.
        return detail::decide(level, full / 48, "generic");
    case j_class::j0:
        // For p = 2 the twist is resolved through y^2 + y = x^3, still degree 6.
        return detail::decide(level, full / 36, "j0");
    case j_class::j1728:
        if (p == 3) return detail::decide(level, full / 16, "j1728"); // via y^2 = x^3 - x
        return detail::decide(level, full / 36, "j1728");
    }
    throw error(errc::invalid_input, "unknown j-class");
}

/// Trial-division factorization, primes ascending.
inline std::vector<std::pair<prime_t, long>> factorize(std::uint64_t n) {
    if (n < 1) throw error(errc::invalid_input, "cannot factor zero");
    std::vector<std::pair<prime_t, long>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        long e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(static_cast<prime_t>(d), e);
    }
    if (n > 1) out.emplace_back(static_cast<prime_t>(n), 1);
    return out;
}

/// Composite level N (6 does not divide N) for a curve over Q supersingular
/// at every prime dividing N. Compares prod(p^2n - p^2n-2) / 36 exactly
/// against the gonality bound.
inline sporadic_verdict composite_gate(std::uint64_t level, bool supersingular_assertion) {
    if (level <= 12) throw error(errc::precondition_violated, "composite gate needs N > 12");
    if (level % 6 == 0) throw error(errc::precondition_violated, "6 divides N = " + std::to_string(level));
    const integer big(static_cast<unsigned long>(level));
    if (!supersingular_assertion) {
        auto v = detail::decide(big, 0, "hypothesis-unmet");
        v.outcome = decision::inconclusive;
        return v;
    }
    const integer degree = minimal_torsion_field_degree(factorize(level));
    return detail::decide(big, rational(degree) / 36, "composite");
}

/// Caller-budgeted gate: the denominator of the largest valuation in the
/// p^n spectrum (the ramification one torsion point forces), divided by the
/// degree spent on twists/reduction and by |Aut|.
inline sporadic_verdict custom_gate(prime_t p, long n, const ext_rational& mu, long reduction_factor, long aut_order) {
    if (reduction_factor < 1 || aut_order < 1)
        throw error(errc::invalid_input, "reduction factor and automorphism order must be positive");
    const auto spec = torsion_spectrum(p, n, mu);
    const integer top_den = spec.merged().front().first.get_den();
    return detail::decide(ipow(p, n), rational(top_den) / rational(reduction_factor * aut_order), "custom");
}

} // namespace ssval

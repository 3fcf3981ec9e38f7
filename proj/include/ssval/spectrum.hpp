#pragma once

// Closed-form valuations of the elements of exact order p^n in the formal
// group of a supersingular curve, as a function of (p, n, mu), and the
// ramification bounds they force.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssval/rational.hpp"

namespace ssval {

struct canonical_regime {
    enum class kind_t { no_canonical, canonical };

    kind_t kind = kind_t::no_canonical;
    /// Smallest s >= 0 with mu >= 1 / (p^s (p + 1)); meaningful only when canonical.
    long s = 0;

    bool has_canonical() const noexcept { return kind == kind_t::canonical; }

    friend bool operator==(const canonical_regime&, const canonical_regime&) = default;
};

inline void require_positive_mu(const ext_rational& mu) {
    if (mu.is_finite() && mu.value() <= 0)
        throw error(errc::invalid_mu, "mu must be positive, got " + to_string(mu));
}

/// No canonical subgroup iff mu >= p/(p+1) (mu = inf included).
inline canonical_regime canonical_regime_for(prime_t p, const ext_rational& mu) {
    require_prime(p);
    require_positive_mu(mu);
    const rational threshold(static_cast<long>(p), static_cast<long>(p + 1));
    if (mu >= ext_rational(threshold)) return {};
    canonical_regime r{canonical_regime::kind_t::canonical, 0};
    const rational& m = mu.value();
    integer ps = 1;
    while (m < rational(1) / rational(ps * (p + 1))) {
        ps *= p;
        ++r.s;
    }
    return r;
}

enum class entry_tag { top, layer, off_canonical };

inline std::string tag_name(entry_tag t) {
    switch (t) {
    case entry_tag::top: return "top";
    case entry_tag::layer: return "layer";
    case entry_tag::off_canonical: return "off_canonical";
    }
    return "?";
}

struct spectrum_entry {
    rational valuation;
    std::int64_t count;
    bool above_canonical;
    entry_tag tag;
    /// The j of a layer entry; 0 otherwise.
    long layer = 0;

    friend bool operator==(const spectrum_entry&, const spectrum_entry&) = default;
};

struct valuation_spectrum {
    prime_t p = 0;
    long n = 0;
    std::vector<spectrum_entry> entries;

    std::int64_t total_count() const {
        std::int64_t t = 0;
        for (const auto& e : entries) t += e.count;
        return t;
    }

    rational weighted_sum() const {
        rational t = 0;
        for (const auto& e : entries) t += e.valuation * rational(integer(e.count));
        return t;
    }

    /// (valuation, count) with all equal valuations merged, largest first.
    std::vector<std::pair<rational, std::int64_t>> merged() const {
        std::vector<std::pair<rational, std::int64_t>> out;
        for (const auto& e : entries) {
            auto it = std::find_if(out.begin(), out.end(), [&](const auto& x) { return x.first == e.valuation; });
            if (it == out.end())
                out.emplace_back(e.valuation, e.count);
            else
                it->second += e.count;
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        return out;
    }

    friend bool operator==(const valuation_spectrum&, const valuation_spectrum&) = default;
};

namespace detail {

inline std::int64_t count_of(const integer& z) { return to_int64(z); }

inline rational frac(const rational& num, const integer& den) {
    rational q = num / rational(den);
    q.canonicalize();
    return q;
}

} // namespace detail

/// #E[=p^n] = p^(2n) - p^(2n-2).
inline integer exact_order_count(prime_t p, long n) { return ipow(p, 2 * n) - ipow(p, 2 * n - 2); }

inline valuation_spectrum torsion_spectrum(prime_t p, long n, const ext_rational& mu) {
    if (n < 1) throw error(errc::invalid_input, "level n must be positive");
    const auto regime = canonical_regime_for(p, mu);
    valuation_spectrum out{p, n, {}};
    const integer total = exact_order_count(p, n);
    if (!regime.has_canonical()) {
        out.entries.push_back({detail::frac(1, total), detail::count_of(total), false, entry_tag::off_canonical});
        return out;
    }
    const rational& m = mu.value();
    const integer pm1 = p - 1;
    const integer p2mp = integer(p) * integer(p) - integer(p);
    auto pw = [p](long k) { return ipow(p, static_cast<unsigned long>(k)); };

    std::vector<spectrum_entry> raw;
    const long s = regime.s;
    long last_layer;
    if (n <= s + 1) {
        raw.push_back({detail::frac(1 - rational(pw(n - 1)) * m, pw(n - 1) * pm1),
                       detail::count_of(pw(n - 1) * pm1), true, entry_tag::top});
        last_layer = n;
    } else {
        const integer scale = pw(2 * (n - s - 1)) * pw(s) * pm1;
        raw.push_back({detail::frac(1 - rational(pw(s)) * m, scale), detail::count_of(scale), true, entry_tag::top});
        last_layer = s + 1;
    }
    for (long j = last_layer; j >= 2; --j) {
        const integer den = pw(2 * (n - j)) * p2mp;
        raw.push_back({detail::frac(m, den), detail::count_of(den * pw(j - 2) * pm1), true, entry_tag::layer, j});
    }
    const integer off = pw(2 * (n - 1)) * p2mp;
    raw.push_back({detail::frac(m, off), detail::count_of(off), false, entry_tag::off_canonical});

    // Boundary values of mu can make neighbouring valuations coincide.
    for (auto& e : raw) {
        auto it = std::find_if(out.entries.begin(), out.entries.end(), [&](const spectrum_entry& x) {
            return x.valuation == e.valuation && x.above_canonical == e.above_canonical;
        });
        if (it == out.entries.end())
            out.entries.push_back(e);
        else
            it->count += e.count;
    }
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const spectrum_entry& a, const spectrum_entry& b) { return a.valuation > b.valuation; });
    return out;
}

struct x_coordinate_class {
    rational valuation;
    std::int64_t count;

    friend bool operator==(const x_coordinate_class&, const x_coordinate_class&) = default;
};

/// Valuations of distinct x-coordinates: v(x) = -2 v(T); +-P share an
/// x-coordinate except when p^n = 2.
inline std::vector<x_coordinate_class> x_coordinate_spectrum(const valuation_spectrum& spec) {
    const bool halve = !(spec.p == 2 && spec.n == 1);
    std::vector<x_coordinate_class> out;
    for (const auto& [v, c] : spec.merged()) {
        if (halve && c % 2 != 0) throw error(errc::invalid_input, "odd count cannot pair into x-coordinates");
        out.push_back({rational(-2 * v), halve ? c / 2 : c});
    }
    return out;
}

struct ramification_report {
    std::int64_t e_P_lower = 0;
    bool e_P_strict = false;
    std::int64_t e_p_lower = 0;
    std::optional<std::int64_t> e_p_divisibility;
    integer lcm_denominators = 1;

    friend bool operator==(const ramification_report&, const ramification_report&) = default;
};

inline ramification_report ramification_bounds(prime_t p, long n, const canonical_regime& regime,
                                               const valuation_spectrum& spec) {
    if (spec.p != p || spec.n != n) throw error(errc::invalid_input, "spectrum does not match (p, n)");
    ramification_report r;
    const integer full = exact_order_count(p, n);
    r.e_P_lower = to_int64(full);
    r.e_P_strict = regime.has_canonical();
    r.e_p_lower = to_int64(ipow(p, n) - ipow(p, n - 1)) + 1;
    if (!regime.has_canonical()) r.e_p_divisibility = to_int64(full);
    for (const auto& e : spec.entries) r.lcm_denominators = lcm(r.lcm_denominators, integer(e.valuation.get_den()));
    return r;
}

/// Degree over Q of a minimal N-torsion point field for a curve supersingular
/// (without canonical subgroup) at every prime of N = prod p_i^n_i.
inline integer minimal_torsion_field_degree(const std::vector<std::pair<prime_t, long>>& factorization) {
    integer d = 1;
    for (const auto& [p, n] : factorization) {
        require_prime(p);
        if (n < 1) throw error(errc::invalid_input, "exponent must be positive");
        d *= exact_order_count(p, n);
    }
    return d;
}

} // namespace ssval

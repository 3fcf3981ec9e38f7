#pragma once

// Exact rationals (GMP) and rationals extended by +infinity, which is where
// every valuation in the library lives.

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ssval/error.hpp"

namespace ssval {

using rational = mpq_class;
using integer = mpz_class;
using prime_t = unsigned long;

inline bool is_prime(prime_t n) {
    if (n < 2) return false;
    for (prime_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(prime_t p) {
    if (!is_prime(p)) throw error(errc::invalid_input, std::to_string(p) + " is not prime");
}

/// p-adic valuation of a nonzero integer.
inline long vp(const integer& n, prime_t p) {
    if (n == 0) throw error(errc::invalid_input, "valuation of zero integer is infinite");
    integer rest;
    integer pz(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

/// p-adic valuation of a nonzero rational.
inline long vp(const rational& q, prime_t p) {
    return vp(integer(q.get_num()), p) - vp(integer(q.get_den()), p);
}

inline rational make_rational(long num, long den = 1) {
    rational q(num, den);
    q.canonicalize();
    return q;
}

/// Lowest-terms "num/den", always with an explicit denominator.
inline std::string to_string(const rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "n", "n/d" (any sign placement GMP accepts); rejects d = 0.
inline rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    if (s.empty() || s.find_first_not_of("+-0123456789/ ") != std::string::npos ||
        (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos))
        throw error(errc::invalid_input, "malformed rational '" + s + "'");
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    rational q;
    try {
        if (slash == std::string::npos) {
            q = rational(integer(s));
        } else {
            integer num(s.substr(0, slash));
            integer den(s.substr(slash + 1));
            if (den == 0) throw error(errc::invalid_input, "zero denominator in '" + s + "'");
            q = rational(num, den);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw error(errc::invalid_input, "malformed rational '" + s + "'");
    }
    return q;
}

/// A rational or +infinity.
class ext_rational {
public:
    ext_rational() : infinite_(true) {}
    ext_rational(const rational& q) : infinite_(false), value_(q) {}
    ext_rational(long n) : infinite_(false), value_(n) {}

    static ext_rational infinity() { return ext_rational(); }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }

    const rational& value() const {
        if (infinite_) throw error(errc::invalid_input, "infinite valuation has no rational value");
        return value_;
    }

    friend ext_rational operator+(const ext_rational& a, const ext_rational& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ext_rational(rational(a.value_ + b.value_));
    }

    friend bool operator==(const ext_rational& a, const ext_rational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const ext_rational& a, const ext_rational& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const ext_rational& v) {
        return os << (v.infinite_ ? std::string("inf") : to_string(v.value_));
    }

private:
    bool infinite_;
    rational value_;
};

inline ext_rational min(const ext_rational& a, const ext_rational& b) { return b < a ? b : a; }

inline std::string to_string(const ext_rational& v) {
    return v.is_infinite() ? std::string("inf") : to_string(v.value());
}

inline ext_rational parse_ext_rational(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo") return ext_rational::infinity();
    return ext_rational(parse_rational(text));
}

inline ext_rational vp_ext(const rational& q, prime_t p) {
    if (q == 0) return ext_rational::infinity();
    return ext_rational(rational(vp(q, p)));
}

inline integer ipow(prime_t base, unsigned long exp) {
    integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline std::int64_t to_int64(const integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        throw error(errc::invalid_input, "integer " + z.get_str() + " exceeds 64-bit range");
    return z.get_si();
}

inline integer lcm(const integer& a, const integer& b) {
    integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace ssval

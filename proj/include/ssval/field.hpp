#pragma once

// Arithmetic in Q and in pure radical fields Q(r^(1/e)), together with the
// p-adic valuation in the case where it extends uniquely from Q.

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ssval/rational.hpp"

namespace ssval {

class field_descriptor {
public:
    enum class kind_t { rational, radical };

    field_descriptor() = default;

    static field_descriptor rational_field() { return {}; }

    /// Q(r^(1/e)); rejects e < 2 and reducible x^e - r.
    static field_descriptor radical(long r, int e) {
        if (e < 2) throw error(errc::invalid_input, "radical degree must be at least 2");
        if (r == 0) throw error(errc::invalid_input, "radicand must be nonzero");
        if (!radical_irreducible(r, e))
            throw error(errc::invalid_input, "x^" + std::to_string(e) + " - " + std::to_string(r) +
                                                 " is reducible over Q");
        field_descriptor d;
        d.kind_ = kind_t::radical;
        d.radicand_ = r;
        d.degree_ = e;
        return d;
    }

    kind_t kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == kind_t::rational; }
    long radicand() const noexcept { return radicand_; }
    /// Number of coordinates: e for a radical field, 1 for Q.
    int degree() const noexcept { return degree_; }

    friend bool operator==(const field_descriptor&, const field_descriptor&) = default;

    std::string describe() const {
        if (is_rational()) return "Q";
        return "Q(" + std::to_string(radicand_) + "^(1/" + std::to_string(degree_) + "))";
    }

private:
    static bool is_perfect_power(const integer& n, unsigned long d) {
        if (n < 0) {
            if (d % 2 == 0) return false;
            return is_perfect_power(integer(-n), d);
        }
        integer root;
        return mpz_root(root.get_mpz_t(), n.get_mpz_t(), d) != 0;
    }

    // x^e - r is irreducible iff r is not a d-th power for any prime d | e,
    // and -4r is not a fourth power when 4 | e.
    static bool radical_irreducible(long r, int e) {
        integer rz(r);
        int rest = e;
        for (int d = 2; d <= rest; ++d) {
            if (rest % d != 0) continue;
            while (rest % d == 0) rest /= d;
            if (is_perfect_power(rz, static_cast<unsigned long>(d))) return false;
        }
        if (e % 4 == 0 && is_perfect_power(integer(-4 * rz), 4)) return false;
        return true;
    }

    kind_t kind_ = kind_t::rational;
    long radicand_ = 1;
    int degree_ = 1;
};

/// Element of Q or Q(r^(1/e)); coords[i] is the coefficient of r^(i/e).
class field_element {
public:
    field_element() : coords_(1) {}

    field_element(const field_descriptor& desc, std::vector<rational> coords)
        : desc_(desc), coords_(std::move(coords)) {
        if (coords_.size() != static_cast<std::size_t>(desc_.degree()))
            throw error(errc::invalid_input, "field element needs " + std::to_string(desc_.degree()) +
                                                 " coordinates, got " + std::to_string(coords_.size()));
    }

    static field_element zero(const field_descriptor& desc) {
        return field_element(desc, std::vector<rational>(desc.degree()));
    }

    static field_element from_rational(const field_descriptor& desc, const rational& q) {
        auto out = zero(desc);
        out.coords_[0] = q;
        return out;
    }

    /// r^(k/e) for 0 <= k < e.
    static field_element generator_power(const field_descriptor& desc, int k) {
        if (k < 0 || k >= desc.degree())
            throw error(errc::invalid_input, "generator exponent out of range");
        auto out = zero(desc);
        out.coords_[k] = 1;
        return out;
    }

    const field_descriptor& descriptor() const noexcept { return desc_; }
    const std::vector<rational>& coords() const noexcept { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }

    field_element operator-() const {
        field_element out = *this;
        for (auto& c : out.coords_) c = -c;
        return out;
    }

    field_element& operator+=(const field_element& o) {
        align(o);
        std::vector<rational> tmp;
        const auto& oc = widened(o, tmp);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += oc[i];
        return *this;
    }

    field_element& operator-=(const field_element& o) {
        align(o);
        std::vector<rational> tmp;
        const auto& oc = widened(o, tmp);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= oc[i];
        return *this;
    }

    field_element& operator*=(const rational& q) {
        for (auto& c : coords_) c *= q;
        return *this;
    }

    /// this += a * b, without materializing the product.
    void add_product(const field_element& a, const field_element& b) {
        align(a);
        align(b);
        std::vector<rational> atmp, btmp;
        const auto& ac = widened(a, atmp);
        const auto& bc = widened(b, btmp);
        const std::size_t e = coords_.size();
        rational t;
        for (std::size_t i = 0; i < e; ++i) {
            if (ac[i] == 0) continue;
            for (std::size_t j = 0; j < e; ++j) {
                if (bc[j] == 0) continue;
                t = ac[i] * bc[j];
                if (i + j < e) {
                    coords_[i + j] += t;
                } else {
                    t *= desc_.radicand();
                    coords_[i + j - e] += t;
                }
            }
        }
    }

    friend field_element operator+(field_element a, const field_element& b) { return a += b; }
    friend field_element operator-(field_element a, const field_element& b) { return a -= b; }
    friend field_element operator*(field_element a, const rational& q) { return a *= q; }

    friend field_element operator*(const field_element& a, const field_element& b) {
        const auto& desc = a.desc_.is_rational() ? b.desc_ : a.desc_;
        auto out = zero(desc);
        out.add_product(a, b);
        return out;
    }

    friend bool operator==(const field_element& a, const field_element& b) {
        if (a.desc_ == b.desc_) return a.coords_ == b.coords_;
        if (a.desc_.is_rational() && b.is_rational()) return a.coords_[0] == b.coords_[0];
        if (b.desc_.is_rational() && a.is_rational()) return a.coords_[0] == b.coords_[0];
        return false;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            std::string term = ssval::to_string(coords_[i]);
            if (i > 0)
                term += "*" + std::to_string(desc_.radicand()) + "^(" + std::to_string(i) + "/" +
                        std::to_string(desc_.degree()) + ")";
            out += out.empty() ? term : " + " + term;
        }
        return out.empty() ? "0/1" : out;
    }

private:
    // Adopt a radical descriptor when this is a plain rational being combined
    // with a radical element; any other mismatch is an error.
    void align(const field_element& o) {
        if (desc_ == o.desc_ || o.desc_.is_rational()) return;
        if (desc_.is_rational()) {
            rational c0 = coords_[0];
            desc_ = o.desc_;
            coords_.assign(desc_.degree(), rational(0));
            coords_[0] = c0;
            return;
        }
        throw error(errc::invalid_input,
                    "field mismatch: " + desc_.describe() + " vs " + o.desc_.describe());
    }

    const std::vector<rational>& widened(const field_element& o, std::vector<rational>& tmp) const {
        if (o.desc_ == desc_) return o.coords_;
        tmp.assign(coords_.size(), rational(0));
        tmp[0] = o.coords_[0];
        return tmp;
    }

    field_descriptor desc_;
    std::vector<rational> coords_;
};

namespace detail {

// Dense polynomials over Q, lowest degree first, no trailing zeros.
using qpoly = std::vector<rational>;

inline void trim(qpoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline qpoly qsub(const qpoly& a, const qpoly& b) {
    qpoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

inline qpoly qmul(const qpoly& a, const qpoly& b) {
    if (a.empty() || b.empty()) return {};
    qpoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

inline std::pair<qpoly, qpoly> qdivmod(qpoly a, const qpoly& b) {
    qpoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

} // namespace detail

/// Multiplicative inverse via the extended Euclidean algorithm against x^e - r.
inline field_element field_invert(const field_element& elem) {
    if (elem.is_zero()) throw error(errc::division_by_zero, "inverse of zero");
    const auto& desc = elem.descriptor();
    if (desc.is_rational()) return field_element::from_rational(desc, 1 / elem.coords()[0]);

    detail::qpoly modulus(desc.degree() + 1);
    modulus[0] = -desc.radicand();
    modulus.back() = 1;
    detail::qpoly a = elem.coords();
    detail::trim(a);

    // Invariant: s_i * a == r_i (mod modulus).
    detail::qpoly r0 = modulus, r1 = a;
    detail::qpoly s0, s1{rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = detail::qdivmod(r0, r1);
        auto s = detail::qsub(s0, detail::qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw error(errc::division_by_zero, "element is a zero divisor");
    rational scale = 1 / r1[0];
    auto [unused, s] = detail::qdivmod(s1, modulus);
    std::vector<rational> coords(desc.degree());
    for (std::size_t i = 0; i < s.size(); ++i) coords[i] = s[i] * scale;
    return field_element(desc, std::move(coords));
}

inline field_element operator/(const field_element& a, const field_element& b) {
    return a * field_invert(b);
}

/// v_p(r) for a radical field whose valuation extends uniquely; 0 for Q.
inline long radicand_valuation(const field_descriptor& desc, prime_t p) {
    if (desc.is_rational()) return 0;
    long k = vp(integer(desc.radicand()), p);
    if (k < 1 || std::gcd(k, static_cast<long>(desc.degree())) != 1)
        throw error(errc::unsupported_field,
                    desc.describe() + " has no unique, totally ramified prime above " +
                        std::to_string(p));
    return k;
}

/// Valuation normalized by v(p) = 1; infinity for zero.
inline ext_rational field_valuation(const field_element& elem, prime_t p) {
    require_prime(p);
    const auto& desc = elem.descriptor();
    long k = radicand_valuation(desc, p);
    ext_rational best = ext_rational::infinity();
    const auto& c = elem.coords();
    // The candidates have pairwise distinct fractional parts i*k/e, so the
    // minimum is attained exactly once and is the valuation.
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        rational cand = rational(vp(c[i], p)) + rational(static_cast<long>(i) * k, desc.degree());
        cand.canonicalize();
        best = min(best, ext_rational(cand));
    }
    return best;
}

/// Image in the residue field F_p of an element with nonnegative valuation.
inline unsigned long residue(const field_element& elem, prime_t p) {
    auto v = field_valuation(elem, p);
    if (v < ext_rational(0))
        throw error(errc::non_integral_model, "element " + elem.to_string() + " is not integral at " +
                                                  std::to_string(p));
    // Radical terms of an integral element have strictly positive valuation.
    const rational& c0 = elem.coords()[0];
    integer pz(p);
    integer num = c0.get_num() % pz;
    integer den = c0.get_den() % pz;
    integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    integer r = (num * inv) % pz;
    if (r < 0) r += pz;
    return r.get_ui();
}

} // namespace ssval

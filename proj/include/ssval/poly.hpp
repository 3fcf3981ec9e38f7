#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ssval/field.hpp"

namespace ssval {

/// Dense univariate polynomial over a field_element coefficient field.
/// Coefficients are indexed by degree; the top coefficient is never zero.
class poly {
public:
    explicit poly(const field_descriptor& desc = {}) : desc_(desc) {}

    poly(const field_descriptor& desc, std::vector<field_element> coeffs)
        : desc_(desc), coeffs_(std::move(coeffs)) {
        for (auto& c : coeffs_) c = lift(c);
        trim();
    }

    static poly constant(const field_element& c) { return poly(c.descriptor(), {c}); }

    static poly constant(const field_descriptor& desc, const rational& q) {
        return poly(desc, {field_element::from_rational(desc, q)});
    }

    static poly monomial(const field_element& c, std::size_t degree) {
        std::vector<field_element> cs(degree + 1, field_element::zero(c.descriptor()));
        cs[degree] = c;
        return poly(c.descriptor(), std::move(cs));
    }

    static poly from_rationals(const field_descriptor& desc, const std::vector<rational>& cs) {
        std::vector<field_element> out;
        out.reserve(cs.size());
        for (const auto& q : cs) out.push_back(field_element::from_rational(desc, q));
        return poly(desc, std::move(out));
    }

    const field_descriptor& descriptor() const noexcept { return desc_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<field_element>& coeffs() const noexcept { return coeffs_; }

    field_element coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : field_element::zero(desc_);
    }

    const field_element& leading() const {
        if (coeffs_.empty()) throw error(errc::invalid_input, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    poly operator-() const {
        poly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    poly& operator+=(const poly& o) {
        adopt(o);
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_element::zero(desc_));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    poly& operator-=(const poly& o) {
        adopt(o);
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_element::zero(desc_));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    poly& operator*=(const field_element& c) {
        for (auto& x : coeffs_) x = x * c;
        trim();
        return *this;
    }

    friend poly operator+(poly a, const poly& b) { return a += b; }
    friend poly operator-(poly a, const poly& b) { return a -= b; }
    friend poly operator*(poly a, const field_element& c) { return a *= c; }

    friend poly operator*(const poly& a, const poly& b) {
        const auto& desc = a.desc_.is_rational() ? b.desc_ : a.desc_;
        if (a.is_zero() || b.is_zero()) return poly(desc);
        std::vector<field_element> out(a.coeffs_.size() + b.coeffs_.size() - 1, field_element::zero(desc));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
        }
        return poly(desc, std::move(out));
    }

    friend bool operator==(const poly& a, const poly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        return true;
    }

    poly pow(unsigned k) const {
        poly result = constant(desc_, 1);
        poly base = *this;
        while (k > 0) {
            if (k & 1u) result = result * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return result;
    }

    /// x^deg * f(1/x): coefficients in reverse order.
    poly reversed() const {
        std::vector<field_element> cs(coeffs_.rbegin(), coeffs_.rend());
        return poly(desc_, std::move(cs));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const auto& c = coeffs_[i];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")";
            if (i > 0) out += "*x^" + std::to_string(i);
        }
        return out;
    }

private:
    field_element lift(const field_element& c) const {
        if (c.descriptor() == desc_) return c;
        if (c.descriptor().is_rational()) return field_element::from_rational(desc_, c.coords()[0]);
        throw error(errc::invalid_input, "coefficient field " + c.descriptor().describe() +
                                             " does not match polynomial field " + desc_.describe());
    }

    void adopt(const poly& o) {
        if (desc_ == o.desc_ || o.desc_.is_rational()) return;
        if (!desc_.is_rational())
            throw error(errc::invalid_input, "field mismatch: " + desc_.describe() + " vs " + o.desc_.describe());
        desc_ = o.desc_;
        for (auto& c : coeffs_) c = lift(c);
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    field_descriptor desc_;
    std::vector<field_element> coeffs_;
};

/// Quotient and remainder of Euclidean division.
inline std::pair<poly, poly> poly_divmod(const poly& f, const poly& g) {
    if (g.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    const auto& desc = f.descriptor().is_rational() ? g.descriptor() : f.descriptor();
    poly rem = f;
    if (rem.degree() < g.degree()) return {poly(desc), rem};
    const auto lead_inv = field_invert(g.leading());
    const std::size_t gd = static_cast<std::size_t>(g.degree());
    std::vector<field_element> rc = rem.coeffs();
    std::vector<field_element> q(rc.size() - gd, field_element::zero(desc));
    for (std::size_t top = rc.size(); top-- > gd;) {
        if (rc[top].is_zero()) continue;
        auto c = rc[top] * lead_inv;
        const std::size_t shift = top - gd;
        for (std::size_t i = 0; i <= gd; ++i) {
            const auto& gi = g.coeffs()[i];
            if (gi.is_zero()) continue;
            rc[shift + i].add_product(-c, gi);
        }
        q[shift] = std::move(c);
    }
    rc.resize(gd);
    return {poly(desc, std::move(q)), poly(desc, std::move(rc))};
}

/// Exact quotient f / g; throws inexact_division when g does not divide f.
inline poly poly_exact_div(const poly& f, const poly& g) {
    auto [q, r] = poly_divmod(f, g);
    if (!r.is_zero())
        throw error(errc::inexact_division, "nonzero remainder of degree " + std::to_string(r.degree()));
    return q;
}

/// True iff x^deg f(1/x) is Eisenstein at p (rational coefficients only).
inline bool reciprocal_eisenstein(const poly& f, prime_t p) {
    require_prime(p);
    if (!f.descriptor().is_rational())
        throw error(errc::unsupported_field, "reciprocal Eisenstein test needs rational coefficients");
    if (f.is_zero() || f.coeffs().front().is_zero())
        throw error(errc::invalid_input, "reciprocal Eisenstein test needs f(0) != 0");
    const auto rev = f.reversed();
    const auto& c = rev.coeffs();
    const long n = rev.degree();
    if (n < 1) return false;
    if (vp_ext(c[n].coords()[0], p) != ext_rational(0)) return false;
    for (long i = 0; i < n; ++i)
        if (vp_ext(c[i].coords()[0], p) < ext_rational(1)) return false;
    return vp_ext(c[0].coords()[0], p) == ext_rational(1);
}

} // namespace ssval

#pragma once

#include <array>
#include <string>

#include "ssval/poly.hpp"

namespace ssval {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
class curve_model {
public:
    curve_model(const field_descriptor& field, std::array<field_element, 5> a) : field_(field) {
        for (auto& c : a) {
            if (c.descriptor() == field_) continue;
            if (!c.descriptor().is_rational())
                throw error(errc::invalid_input, "a-invariant over " + c.descriptor().describe() +
                                                     " but curve field is " + field_.describe());
            c = field_element::from_rational(field_, c.coords()[0]);
        }
        a1_ = a[0];
        a2_ = a[1];
        a3_ = a[2];
        a4_ = a[3];
        a6_ = a[4];

        b2_ = a1_ * a1_ + a2_ * rational(4);
        b4_ = a4_ * rational(2) + a1_ * a3_;
        b6_ = a3_ * a3_ + a6_ * rational(4);
        b8_ = a1_ * a1_ * a6_ + a2_ * a6_ * rational(4) - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
        if (!(b8_ * rational(4) == b2_ * b6_ - b4_ * b4_))
            throw error(errc::invalid_input, "b-invariant identity 4 b8 = b2 b6 - b4^2 failed");
        disc_ = -(b2_ * b2_ * b8_) - b4_ * b4_ * b4_ * rational(8) - b6_ * b6_ * rational(27) +
                b2_ * b4_ * b6_ * rational(9);
        if (disc_.is_zero()) throw error(errc::singular_curve, "discriminant vanishes");
    }

    /// Convenience for curves over Q.
    static curve_model over_q(long a1, long a2, long a3, long a4, long a6) {
        auto q = field_descriptor::rational_field();
        auto e = [&](long v) { return field_element::from_rational(q, v); };
        return curve_model(q, {e(a1), e(a2), e(a3), e(a4), e(a6)});
    }

    const field_descriptor& field() const noexcept { return field_; }
    const field_element& a1() const noexcept { return a1_; }
    const field_element& a2() const noexcept { return a2_; }
    const field_element& a3() const noexcept { return a3_; }
    const field_element& a4() const noexcept { return a4_; }
    const field_element& a6() const noexcept { return a6_; }
    const field_element& b2() const noexcept { return b2_; }
    const field_element& b4() const noexcept { return b4_; }
    const field_element& b6() const noexcept { return b6_; }
    const field_element& b8() const noexcept { return b8_; }
    const field_element& discriminant() const noexcept { return disc_; }

    std::array<field_element, 5> a_invariants() const { return {a1_, a2_, a3_, a4_, a6_}; }

    bool is_short_form() const { return a1_.is_zero() && a2_.is_zero() && a3_.is_zero(); }

    /// Psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6, the y-free square of 2y + a1 x + a3.
    poly psi2_squared() const {
        return poly(field_, {b6_, b4_ * rational(2), b2_, field_element::from_rational(field_, 4)});
    }

private:
    field_descriptor field_;
    field_element a1_, a2_, a3_, a4_, a6_;
    field_element b2_, b4_, b6_, b8_;
    field_element disc_;
};

inline void require_integral(const curve_model& curve, prime_t p) {
    const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
    auto a = curve.a_invariants();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (field_valuation(a[i], p) < ext_rational(0))
            throw error(errc::non_integral_model,
                        std::string(names[i]) + " has negative valuation at " + std::to_string(p));
}

/// v(discriminant) == 0 for an integral model.
inline bool has_good_reduction(const curve_model& curve, prime_t p) {
    require_integral(curve, p);
    return field_valuation(curve.discriminant(), p) == ext_rational(0);
}

/// #E(F_p) of the reduction, counted by brute force (point at infinity included).
inline long reduced_point_count(const curve_model& curve, prime_t p) {
    if (!has_good_reduction(curve, p))
        throw error(errc::bad_reduction, "model has bad reduction at " + std::to_string(p));
    const long pl = static_cast<long>(p);
    const long a1 = static_cast<long>(residue(curve.a1(), p));
    const long a2 = static_cast<long>(residue(curve.a2(), p));
    const long a3 = static_cast<long>(residue(curve.a3(), p));
    const long a4 = static_cast<long>(residue(curve.a4(), p));
    const long a6 = static_cast<long>(residue(curve.a6(), p));
    long count = 1;
    for (long x = 0; x < pl; ++x) {
        const long rhs = ((x * x % pl * x + a2 * x % pl * x + a4 * x + a6) % pl + pl) % pl;
        for (long y = 0; y < pl; ++y) {
            const long lhs = (y * y + a1 * x % pl * y + a3 * y) % pl;
            if (lhs == rhs) ++count;
        }
    }
    return count;
}

/// Trace of Frobenius t = p + 1 - #E(F_p).
inline long frobenius_trace(const curve_model& curve, prime_t p) {
    return static_cast<long>(p) + 1 - reduced_point_count(curve, p);
}

/// Supersingular iff the Frobenius trace vanishes mod p.
inline bool is_supersingular_at(const curve_model& curve, prime_t p) {
    require_prime(p);
    return frobenius_trace(curve, p) % static_cast<long>(p) == 0;
}

/// Coefficient of x^(p-1) in (x^3 + a4 x + a6)^((p-1)/2) for a short model.
inline field_element deuring_coefficient(const curve_model& curve, prime_t p) {
    require_prime(p);
    if (p == 2) throw error(errc::invalid_input, "Deuring coefficient needs an odd prime");
    if (!curve.is_short_form()) throw error(errc::not_short_form, "a1, a2, a3 must vanish");
    const auto& d = curve.field();
    poly f(d, {curve.a6(), curve.a4(), field_element::zero(d), field_element::from_rational(d, 1)});
    return f.pow(static_cast<unsigned>((p - 1) / 2)).coeff(p - 1);
}

} // namespace ssval

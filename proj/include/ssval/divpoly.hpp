#pragma once

// Division polynomials in y-free form.
//
// For odd m the division polynomial Psi_m is a polynomial in x alone. For
// even m it is Psi_2 times a polynomial in x, where Psi_2 = 2y + a1 x + a3.
// Only the x-part f_m is stored; Psi_2^2 is replaced by the cubic
// F = 4x^3 + b2 x^2 + 2 b4 x + b6 wherever it appears. With that convention
//
//   f_{2k+1} = F^2 f_{k+2} f_k^3 - f_{k-1} f_{k+1}^3        (k even)
//   f_{2k+1} = f_{k+2} f_k^3 - F^2 f_{k-1} f_{k+1}^3        (k odd)
//   f_{2k}   = f_k (f_{k+2} f_{k-1}^2 - f_{k-2} f_{k+1}^2)
//
// and the even-index identity needs no division by Psi_2.

#include <map>
#include <mutex>

#include "ssval/curve.hpp"
#include "ssval/newton.hpp"

namespace ssval {

struct division_poly {
    long m;
    poly xpart;
    /// True iff m is even, i.e. Psi_m = Psi_2 * xpart.
    bool has_psi2_factor;
};

/// Memoized x-parts for one curve. Safe to share between threads.
class division_polynomials {
public:
    explicit division_polynomials(curve_model curve)
        : curve_(std::move(curve)), psi2_sq_(curve_.psi2_squared()), psi2_4_(psi2_sq_ * psi2_sq_) {}

    const curve_model& curve() const noexcept { return curve_; }
    const poly& psi2_squared() const noexcept { return psi2_sq_; }

    division_poly operator()(long m) {
        if (m < 1) throw error(errc::invalid_input, "division polynomial index must be positive");
        std::lock_guard lock(mutex_);
        return {m, xpart_locked(m), m % 2 == 0};
    }

    poly xpart(long m) {
        std::lock_guard lock(mutex_);
        return xpart_locked(m);
    }

private:
    const poly& xpart_locked(long m) {
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
        poly value = compute(m);
        return memo_.emplace(m, std::move(value)).first->second;
    }

    poly compute(long m) {
        const auto& d = curve_.field();
        const auto& b2 = curve_.b2();
        const auto& b4 = curve_.b4();
        const auto& b6 = curve_.b6();
        const auto& b8 = curve_.b8();
        auto q = [&](long v) { return field_element::from_rational(d, v); };
        switch (m) {
        case 0: return poly(d);
        case 1:
        case 2: return poly::constant(d, 1);
        case 3: return poly(d, {b8, b6 * rational(3), b4 * rational(3), b2, q(3)});
        case 4:
            return poly(d, {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, b8 * rational(10), b6 * rational(10),
                            b4 * rational(5), b2, q(2)});
        default: break;
        }
        const long k = m / 2;
        if (m % 2 == 1) {
            poly lhs = xpart_locked(k + 2) * xpart_locked(k).pow(3);
            poly rhs = xpart_locked(k - 1) * xpart_locked(k + 1).pow(3);
            if (k % 2 == 0)
                lhs = psi2_4_ * lhs;
            else
                rhs = psi2_4_ * rhs;
            return lhs - rhs;
        }
        poly inner = xpart_locked(k + 2) * xpart_locked(k - 1).pow(2) -
                     xpart_locked(k - 2) * xpart_locked(k + 1).pow(2);
        return xpart_locked(k) * inner;
    }

    curve_model curve_;
    poly psi2_sq_;
    poly psi2_4_;
    std::map<long, poly> memo_;
    std::mutex mutex_;
};

inline division_poly division_polynomial(const curve_model& curve, long m) {
    division_polynomials table(curve);
    return table(m);
}

/// Psi_{p^n} / Psi_{p^(n-1)} as a polynomial in x with leading coefficient p.
/// For p^n = 2 this is Psi_2^2 (leading coefficient 4).
inline poly primitive_part(division_polynomials& table, prime_t p, long n) {
    require_prime(p);
    if (n < 1) throw error(errc::invalid_input, "level n must be positive");
    if (p == 2 && n == 1) return table.psi2_squared();
    const long top = to_int64(ipow(p, n));
    const long below = top / static_cast<long>(p);
    // For p = 2, n >= 2 both indices are even and the Psi_2 factors cancel.
    return poly_exact_div(table.xpart(top), table.xpart(below));
}

inline poly primitive_part(const curve_model& curve, prime_t p, long n) {
    division_polynomials table(curve);
    return primitive_part(table, p, n);
}

/// primitive_part scaled to be monic; its roots are the same x-coordinates.
inline poly monic_primitive_part(division_polynomials& table, prime_t p, long n) {
    poly f = primitive_part(table, p, n);
    return f * field_invert(f.leading());
}

/// The polynomial whose constant term is constrained to be a unit: Psi_{p^n}
/// for odd p, and Psi_2 * Psi_{2^n} (as Psi_2^2 times the x-part) for p = 2.
inline poly torsion_polynomial(division_polynomials& table, prime_t p, long n) {
    const long m = to_int64(ipow(p, n));
    if (p == 2) return table.psi2_squared() * table.xpart(m);
    return table.xpart(m);
}

/// The canonical-subgroup invariant mu. Requires good supersingular reduction.
inline ext_rational mu(division_polynomials& table, prime_t p) {
    require_prime(p);
    const auto& curve = table.curve();
    if (!has_good_reduction(curve, p))
        throw error(errc::bad_reduction, "model has bad reduction at " + std::to_string(p));
    if (!is_supersingular_at(curve, p))
        throw error(errc::not_supersingular, "reduction at " + std::to_string(p) + " is ordinary");
    if (p == 2) {
        auto v = field_valuation(curve.b2(), p);
        if (v.is_infinite()) return v;
        rational half = v.value() / 2;
        half.canonicalize();
        return ext_rational(half);
    }
    const poly psi_p = table.xpart(static_cast<long>(p));
    return field_valuation(psi_p.coeff((p * p - p) / 2), p);
}

inline ext_rational mu(const curve_model& curve, prime_t p) {
    division_polynomials table(curve);
    return mu(table, p);
}

} // namespace ssval

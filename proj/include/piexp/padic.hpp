#pragma once

#include <string>

#include "piexp/errors.hpp"
#include "piexp/intutil.hpp"
#include "piexp/rational.hpp"

namespace piexp {

// Certified valuation of an element: exactly zero, exactly p^v-sized, or only
// known to be divisible by p^bound.
enum class VKind { Zero, Finite, AtLeast };

struct Valu {
    VKind kind;
    Rat v;  // Finite: the valuation; AtLeast: the lower bound; Zero: unused

    static Valu zero() { return {VKind::Zero, Rat(0)}; }
    static Valu finite(Rat x) { return {VKind::Finite, std::move(x)}; }
    static Valu at_least(Rat x) { return {VKind::AtLeast, std::move(x)}; }
};

// An element of Q_p in one of four states:
//   Zero    exactly 0
//   Exact   exactly p^v * u, with u a rational unit (num and den prime to p)
//   Approx  p^v * u known modulo p^{v+n}: u integer, 0 < u < p^n, p does not divide u
//   Near    only known to have valuation >= v (appears after total cancellation)
// Ring operations return the largest certifiable state; they never guess.
struct PadicScalar {
    enum class St { Zero, Exact, Approx, Near };

    long p = 0;
    St st = St::Zero;
    long v = 0;  // Exact/Approx: valuation; Near: the lower bound
    Rat u;       // Exact only
    Int um;      // Approx only
    long n = 0;  // Approx only: relative precision

    static PadicScalar zero(long p) {
        PadicScalar x;
        x.p = p;
        return x;
    }

    static PadicScalar exact(long p, const Rat& q) {
        if (q == 0) return zero(p);
        PadicScalar x;
        x.p = p;
        x.st = St::Exact;
        x.v = vp_rat(q, p, &x.u);
        return x;
    }

    static PadicScalar exact_unit(long p, long v, Rat unit) {
        PadicScalar x;
        x.p = p;
        x.st = St::Exact;
        x.v = v;
        x.u = std::move(unit);
        return x;
    }

    static PadicScalar near(long p, long bound) {
        PadicScalar x;
        x.p = p;
        x.st = St::Near;
        x.v = bound;
        return x;
    }

    // Normalizes: reduces m mod p^n, strips p-powers, collapses to Near when
    // nothing survives.
    static PadicScalar approx(long p, long v, Int m, long n) {
        if (n <= 0) return near(p, v + n);
        Int mod = pow_int(p, n);
        m %= mod;
        if (m < 0) m += mod;
        if (m == 0) return near(p, v + n);
        long k = vp_int(m, p, &m);
        if (k >= n) return near(p, v + n);
        PadicScalar x;
        x.p = p;
        x.st = St::Approx;
        x.v = v + k;
        x.n = n - k;
        x.um = std::move(m);
        return x;
    }

    bool is_zero() const { return st == St::Zero; }

    // Absolute precision: the value is known modulo p^abs(). Exact/Zero know
    // everything; callers must check the state first.
    long abs_prec() const { return st == St::Approx ? v + n : v; }

    Valu valuation() const {
        switch (st) {
            case St::Zero: return Valu::zero();
            case St::Near: return Valu::at_least(Rat(v));
            default: return Valu::finite(Rat(v));
        }
    }

    // Mantissa modulo p^k (Exact/Approx only; Approx requires k <= n).
    Int unit_residue(long k) const {
        if (st == St::Exact) return rat_residue(u, p, k);
        if (st == St::Approx) {
            if (k > n) throw InvariantError("residue request beyond known precision");
            return um % pow_int(p, k);
        }
        throw InvariantError("unit_residue of zero-like scalar");
    }

    // Exact rational value (Exact/Zero states only).
    Rat rational_value() const {
        if (st == St::Zero) return Rat(0);
        if (st != St::Exact) throw InvariantError("rational_value of inexact scalar");
        Rat pv = v >= 0 ? Rat(pow_int(p, v)) : make_rat(Int(1), pow_int(p, -v));
        return u * pv;
    }
};

namespace detail {

// Residue of p^{v_x}*unit/p^{vmin} modulo p^k for either payload type.
inline Int shifted_residue(const PadicScalar& x, long vmin, long k) {
    Int r;
    long shift = x.v - vmin;
    if (shift >= k) return Int(0);
    if (x.st == PadicScalar::St::Exact)
        r = rat_residue(x.u, x.p, k - shift);
    else
        r = x.um % pow_int(x.p, k - shift);
    return r * pow_int(x.p, shift);
}

}  // namespace detail

inline PadicScalar padic_neg(const PadicScalar& x) {
    PadicScalar r = x;
    switch (x.st) {
        case PadicScalar::St::Exact: r.u = -r.u; break;
        case PadicScalar::St::Approx: r.um = pow_int(x.p, x.n) - x.um; break;
        default: break;  // Zero and Near are symmetric
    }
    return r;
}

inline PadicScalar padic_add(const PadicScalar& x, const PadicScalar& y) {
    using St = PadicScalar::St;
    if (x.p != y.p) throw InvariantError("prime mismatch");
    const long p = x.p;
    if (x.st == St::Zero) return y;
    if (y.st == St::Zero) return x;

    if (x.st == St::Exact && y.st == St::Exact)
        return PadicScalar::exact(p, x.rational_value() + y.rational_value());

    if (x.st == St::Near && y.st == St::Near) return PadicScalar::near(p, std::min(x.v, y.v));
    if (x.st == St::Near || y.st == St::Near) {
        const PadicScalar& nz = x.st == St::Near ? x : y;
        const PadicScalar& val = x.st == St::Near ? y : x;
        long A = nz.v;
        if (val.st == St::Approx) A = std::min(A, val.abs_prec());
        if (val.v >= A) return PadicScalar::near(p, A);
        return PadicScalar::approx(p, val.v, detail::shifted_residue(val, val.v, A - val.v),
                                   A - val.v);
    }

    // Exact+Approx or Approx+Approx: work modulo the joint absolute precision.
    long A = std::min(x.st == St::Exact ? y.abs_prec() : x.abs_prec(), y.st == St::Exact ? x.abs_prec() : y.abs_prec());
    long vmin = std::min(x.v, y.v);
    if (vmin >= A) return PadicScalar::near(p, A);
    long k = A - vmin;
    Int m = detail::shifted_residue(x, vmin, k) + detail::shifted_residue(y, vmin, k);
    return PadicScalar::approx(p, vmin, std::move(m), k);
}

inline PadicScalar padic_sub(const PadicScalar& x, const PadicScalar& y) {
    return padic_add(x, padic_neg(y));
}

inline PadicScalar padic_mul(const PadicScalar& x, const PadicScalar& y) {
    using St = PadicScalar::St;
    if (x.p != y.p) throw InvariantError("prime mismatch");
    const long p = x.p;
    if (x.st == St::Zero || y.st == St::Zero) return PadicScalar::zero(p);
    if (x.st == St::Near || y.st == St::Near) {
        // v(xy) >= bound + v(other); Near*Near adds the two bounds.
        return PadicScalar::near(p, x.v + y.v);
    }
    if (x.st == St::Exact && y.st == St::Exact)
        return PadicScalar::exact_unit(p, x.v + y.v, x.u * y.u);
    long n = (x.st == St::Approx && y.st == St::Approx) ? std::min(x.n, y.n)
                                                        : (x.st == St::Approx ? x.n : y.n);
    Int m = x.unit_residue(n) * y.unit_residue(n);
    return PadicScalar::approx(p, x.v + y.v, std::move(m), n);
}

inline PadicScalar padic_inv(const PadicScalar& x) {
    using St = PadicScalar::St;
    switch (x.st) {
        case St::Zero: throw InvariantError("inversion of zero");
        case St::Near: throw PrecisionExhausted("inversion of element indistinguishable from zero");
        case St::Exact: return PadicScalar::exact_unit(x.p, -x.v, Rat(1) / x.u);
        default: return PadicScalar::approx(x.p, -x.v, invmod(x.um, pow_int(x.p, x.n)), x.n);
    }
}

// Exact division by a nonzero integer (a field operation; never loses state).
inline PadicScalar padic_div_int(const PadicScalar& x, const Int& d) {
    if (d == 0) throw InvariantError("division by zero integer");
    if (x.st == PadicScalar::St::Zero) return x;
    Int unit;
    long k = vp_int(d, x.p, &unit);
    PadicScalar r = x;
    r.v -= k;
    switch (x.st) {
        case PadicScalar::St::Exact: r.u /= unit; break;
        case PadicScalar::St::Approx: {
            Int mod = pow_int(x.p, x.n);
            Int iu = invmod(((unit % mod) + mod) % mod, mod);
            r.um = (x.um * iu) % mod;
            break;
        }
        default: break;  // Near: bound shifts by -k only
    }
    return r;
}

inline PadicScalar padic_mul_int(const PadicScalar& x, const Int& m) {
    if (m == 0) return PadicScalar::zero(x.p);
    return padic_mul(x, PadicScalar::exact(x.p, Rat(m)));
}

// Forgets everything above absolute precision A (used inside Newton loops to
// keep mantissas bounded; deliberately downgrades Exact to Approx).
inline PadicScalar padic_truncate_abs(const PadicScalar& x, long A) {
    using St = PadicScalar::St;
    switch (x.st) {
        case St::Zero: return x;
        case St::Near: return PadicScalar::near(x.p, std::min(x.v, A));
        case St::Exact: {
            if (x.v >= A) return PadicScalar::near(x.p, A);
            return PadicScalar::approx(x.p, x.v, rat_residue(x.u, x.p, A - x.v), A - x.v);
        }
        default: {
            if (x.v >= A) return PadicScalar::near(x.p, A);
            if (x.abs_prec() <= A) return x;
            return PadicScalar::approx(x.p, x.v, x.um, A - x.v);
        }
    }
}

std::string padic_str(const PadicScalar& x);

// Rational-input constructor: num/den at nominal relative precision N.
// Internally the result is exact (strictly more information than N digits);
// N is recorded by the caller's ring handle.
inline PadicScalar scalar_from_rational(const Int& num, const Int& den, long p, long /*N*/ = 0) {
    if (den == 0) throw InvariantError("denominator is zero");
    return PadicScalar::exact(p, make_rat(num, den));
}

// Ring handle used by the generic series/Witt templates.
struct QpRing {
    using Elem = PadicScalar;
    long p;
    long prec;  // relative precision for Approx-producing paths

    long prime() const { return p; }
    Elem zero() const { return PadicScalar::zero(p); }
    Elem one() const { return PadicScalar::exact(p, Rat(1)); }
    Elem from_int(long k) const { return PadicScalar::exact(p, Rat(k)); }
    Elem from_rat(const Rat& q) const { return PadicScalar::exact(p, q); }
    Elem add(const Elem& a, const Elem& b) const { return padic_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return padic_sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return padic_mul(a, b); }
    Elem neg(const Elem& a) const { return padic_neg(a); }
    Elem inv(const Elem& a) const { return padic_inv(a); }
    Elem mul_int(const Elem& a, const Int& m) const { return padic_mul_int(a, m); }
    Elem div_int(const Elem& a, const Int& d) const { return padic_div_int(a, d); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Valu valuation(const Elem& a) const { return a.valuation(); }
    std::string str(const Elem& a) const { return padic_str(a); }
    bool same(const QpRing& o) const { return p == o.p; }
};

}  // namespace piexp

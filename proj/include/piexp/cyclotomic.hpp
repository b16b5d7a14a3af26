#pragma once

#include <memory>
#include <string>
#include <vector>

#include "piexp/padic.hpp"

namespace piexp {

// The totally ramified tower Q_p(zeta), zeta a primitive p^{L+1}-th root of
// unity, presented on the power basis of pi = zeta - 1. The minimal polynomial
// of pi is Phi_{p^{L+1}}(1+X) = sum_{j=0}^{p-1} (1+X)^{j p^L}: monic of degree
// e = p^L (p-1), Eisenstein at p. Valuations are exact rationals with
// denominator dividing e because the basis exponents have distinct fractional
// valuations i/e.
struct CycloElement;

struct CycloTower {
    long p;
    long L;
    long e;  // p^L * (p-1)
    long N;  // working precision (p-digits) for Approx-producing paths
    std::vector<Int> minpoly;  // size e+1, monic, integer coefficients

    CycloTower(long p, long L, long N);
    CycloTower(const CycloTower&) = delete;
    CycloTower& operator=(const CycloTower&) = delete;

    // pi_k = (1+pi)^{p^{L-k}} - 1 for 0 <= k <= L, with v(pi_k) = 1/(p^k (p-1)).
    const CycloElement& pi_k(long k) const;
    // zeta_k = 1 + pi_k, the root of unity of order p^{k+1}.
    CycloElement zeta_k(long k) const;

    CycloElement zero() const;
    CycloElement one() const;
    CycloElement from_scalar(PadicScalar s) const;
    CycloElement from_rat(const Rat& q) const;

  private:
    std::vector<CycloElement> pis_;  // cached pi_0..pi_L (exact integer coordinates)
};

struct CycloElement {
    const CycloTower* tw = nullptr;
    std::vector<PadicScalar> c;  // coordinates on 1, pi, ..., pi^{e-1}

    bool same_tower(const CycloElement& o) const { return tw == o.tw; }
};

CycloElement cyclo_add(const CycloElement& x, const CycloElement& y);
CycloElement cyclo_sub(const CycloElement& x, const CycloElement& y);
CycloElement cyclo_neg(const CycloElement& x);
CycloElement cyclo_mul(const CycloElement& x, const CycloElement& y);
CycloElement cyclo_mul_scalar(const CycloElement& x, const PadicScalar& s);
CycloElement cyclo_mul_int(const CycloElement& x, const Int& m);
CycloElement cyclo_div_int(const CycloElement& x, const Int& d);
CycloElement cyclo_pow(const CycloElement& x, unsigned long k);

// Exact normalized valuation (v(p) = 1): min_i (v_p(c_i) + i/e). Returns
// AtLeast when every coordinate surviving below the finite candidates is only
// bounded; ExactZero when all coordinates are exactly zero.
Valu cyclo_valuation(const CycloElement& x);

// True if the element is exactly zero (every coordinate in the Zero state).
bool cyclo_is_zero(const CycloElement& x);

// Unit-part Newton inversion: factor x = p^q pi^r u with u a unit, lift u^{-1}
// from the residue field, return u^{-1} pi^{e-r} / p^{q+1} (the minimal
// polynomial absorbs pi^e/p exactly). Coordinates of the result are Approx at
// roughly the tower's working precision.
CycloElement cyclo_inv(const CycloElement& x);

// Dense linear-solve inversion (Gaussian elimination, pivots chosen by minimal
// certified valuation). Exact on exact inputs; kept as an independent
// cross-check of cyclo_inv.
CycloElement cyclo_inv_linear(const CycloElement& x);

// Truncate every coordinate to absolute precision A.
CycloElement cyclo_truncate_abs(const CycloElement& x, long A);

// Unique root of f near x0 under the strict Newton condition
// v(f(x0)) > 2 v(f'(x0)); f given by its coefficient list (low to high).
CycloElement hensel_root(const std::vector<CycloElement>& f, const CycloElement& x0);

// Dwork's pi: a root of X^{p-1} + p with v(pi - pi_0) > 1/(p-1). For p = 2 this
// is pi_0 = -2 exactly; for odd p it is pi_0 * U where U solves the unit
// equation U^{p-1} = -p * pi_0^{-(p-1)}, U = 1 mod pi_0.
CycloElement dwork_pi(const CycloTower& tw);

std::string cyclo_str(const CycloElement& x, size_t max_terms = 8);

// Ring handle for the generic series/Witt templates.
struct CycloRing {
    using Elem = CycloElement;
    const CycloTower* tw;

    long prime() const { return tw->p; }
    Elem zero() const { return tw->zero(); }
    Elem one() const { return tw->one(); }
    Elem from_int(long k) const { return tw->from_rat(Rat(k)); }
    Elem from_rat(const Rat& q) const { return tw->from_rat(q); }
    Elem add(const Elem& a, const Elem& b) const { return cyclo_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return cyclo_sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return cyclo_mul(a, b); }
    Elem neg(const Elem& a) const { return cyclo_neg(a); }
    Elem inv(const Elem& a) const { return cyclo_inv(a); }
    Elem mul_int(const Elem& a, const Int& m) const { return cyclo_mul_int(a, m); }
    Elem div_int(const Elem& a, const Int& d) const { return cyclo_div_int(a, d); }
    bool is_zero(const Elem& a) const { return cyclo_is_zero(a); }
    Valu valuation(const Elem& a) const { return cyclo_valuation(a); }
    std::string str(const Elem& a) const { return cyclo_str(a); }
    bool same(const CycloRing& o) const { return tw == o.tw; }
};

}  // namespace piexp

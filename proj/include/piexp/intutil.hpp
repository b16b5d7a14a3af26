#pragma once

#include <stdexcept>

#include "piexp/errors.hpp"
#include "piexp/rational.hpp"

namespace piexp {

inline Int pow_int(long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// p-adic valuation of a nonzero integer; also strips the p-part when asked.
inline long vp_int(const Int& x, long p, Int* unit = nullptr) {
    if (x == 0) throw InvariantError("vp of zero");
    Int u;
    Int pp(p);
    long v = static_cast<long>(mpz_remove(u.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
    if (unit) *unit = u;
    return v;
}

inline long vp_rat(const Rat& q, long p, Rat* unit = nullptr) {
    Int un, ud;
    long vn = vp_int(q.get_num(), p, &un);
    long vd = vp_int(q.get_den(), p, &ud);
    if (unit) *unit = make_rat(un, ud);
    return vn - vd;
}

inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw InvariantError("not invertible modulo m");
    return r;
}

// Residue of a rational with p-free denominator modulo p^k (k >= 1).
inline Int rat_residue(const Rat& q, long p, long k) {
    Int m = pow_int(p, k);
    Int num = q.get_num() % m;
    if (num < 0) num += m;
    if (q.get_den() == 1) return num;
    return (num * invmod(q.get_den() % m, m)) % m;
}

// v_p(M!) by Legendre's formula.
inline Int vp_factorial(long M, long p) {
    Int total = 0;
    for (Int q = M / p; q > 0; q /= p) total += q;
    return total;
}

// Largest k >= 0 with p^k <= x (x >= 1).
inline long floor_log(long p, long x) {
    if (x < 1) throw InvariantError("floor_log needs x >= 1");
    long k = 0;
    Int pk = p;
    while (pk <= x) {
        ++k;
        pk *= p;
    }
    return k;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace piexp

#include "piexp/cyclotomic.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace piexp {

namespace {

std::vector<Int> poly_mul_int(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

CycloTower::CycloTower(long p_, long L_, long N_) : p(p_), L(L_), N(N_) {
    if (!is_prime(p)) throw InvariantError("p must be prime");
    if (L < 0 || N < 1) throw InvariantError("bad tower parameters");
    Int ee = pow_int(p, L) * (p - 1);
    if (!ee.fits_slong_p()) throw InvariantError("tower degree too large");
    e = ee.get_si();

    // (1+X)^{p^L} by binomials, then sum its powers j = 0..p-1.
    unsigned long pl = pow_int(p, L).get_ui();
    std::vector<Int> base(pl + 1);
    for (unsigned long i = 0; i <= pl; ++i) base[i] = binomial(pl, i);
    std::vector<Int> sum{Int(1)}, pw{Int(1)};
    for (long j = 1; j < p; ++j) {
        pw = poly_mul_int(pw, base);
        if (sum.size() < pw.size()) sum.resize(pw.size(), Int(0));
        for (size_t i = 0; i < pw.size(); ++i) sum[i] += pw[i];
    }
    minpoly = std::move(sum);
    if (static_cast<long>(minpoly.size()) != e + 1 || minpoly[e] != 1)
        throw InvariantError("minimal polynomial construction failed");

    // pi_k via the root-of-unity chain zeta_{k-1} = zeta_k^p.
    pis_.resize(L + 1);
    CycloElement zeta = zero();
    if (e == 1) {
        // Degree-one case (p = 2, L = 0): pi = -2 from X + 2.
        zeta.c[0] = PadicScalar::exact(p, Rat(-1));
    } else {
        zeta.c[0] = PadicScalar::exact(p, Rat(1));
        zeta.c[1] = PadicScalar::exact(p, Rat(1));
    }
    for (long k = L; k >= 0; --k) {
        CycloElement pik = zeta;
        pik.c[0] = padic_sub(pik.c[0], PadicScalar::exact(p, Rat(1)));
        pis_[k] = pik;
        if (k > 0) zeta = cyclo_pow(zeta, p);
    }
}

const CycloElement& CycloTower::pi_k(long k) const {
    if (k < 0 || k > L) throw InvariantError("pi_k level out of range");
    return pis_[k];
}

CycloElement CycloTower::zeta_k(long k) const {
    CycloElement z = pi_k(k);
    z.c[0] = padic_add(z.c[0], PadicScalar::exact(p, Rat(1)));
    return z;
}

CycloElement CycloTower::zero() const {
    CycloElement x;
    x.tw = this;
    x.c.assign(e, PadicScalar::zero(p));
    return x;
}

CycloElement CycloTower::one() const { return from_rat(Rat(1)); }

CycloElement CycloTower::from_scalar(PadicScalar s) const {
    CycloElement x = zero();
    x.c[0] = std::move(s);
    return x;
}

CycloElement CycloTower::from_rat(const Rat& q) const {
    return from_scalar(PadicScalar::exact(p, q));
}

namespace {

void check_same(const CycloElement& x, const CycloElement& y) {
    if (x.tw != y.tw) throw InvariantError("tower mismatch");
}

// Reduce a coordinate vector of degree >= e in place modulo the monic minimal
// polynomial, then shrink to length e.
void reduce_mod_minpoly(const CycloTower& tw, std::vector<PadicScalar>& c) {
    const long e = tw.e;
    for (size_t i = c.size(); i-- > static_cast<size_t>(e);) {
        PadicScalar t = c[i];
        c[i] = PadicScalar::zero(tw.p);
        if (t.is_zero()) continue;
        for (long j = 0; j < e; ++j) {
            if (tw.minpoly[j] == 0) continue;
            c[i - e + j] = padic_sub(c[i - e + j], padic_mul_int(t, tw.minpoly[j]));
        }
    }
    c.resize(e);
}

// Divide by p^k for any sign of k (p^{-k} multiplies).
CycloElement div_p_power(const CycloElement& x, long k) {
    if (k >= 0) return cyclo_div_int(x, pow_int(x.tw->p, k));
    return cyclo_mul_int(x, pow_int(x.tw->p, -k));
}

CycloElement mul_by_pi(const CycloElement& x) {
    const CycloTower& tw = *x.tw;
    std::vector<PadicScalar> c(tw.e + 1, PadicScalar::zero(tw.p));
    for (long i = 0; i < tw.e; ++i) c[i + 1] = x.c[i];
    reduce_mod_minpoly(tw, c);
    CycloElement r;
    r.tw = x.tw;
    r.c = std::move(c);
    return r;
}

}  // namespace

CycloElement cyclo_add(const CycloElement& x, const CycloElement& y) {
    check_same(x, y);
    CycloElement r = x;
    for (long i = 0; i < x.tw->e; ++i) r.c[i] = padic_add(x.c[i], y.c[i]);
    return r;
}

CycloElement cyclo_sub(const CycloElement& x, const CycloElement& y) {
    check_same(x, y);
    CycloElement r = x;
    for (long i = 0; i < x.tw->e; ++i) r.c[i] = padic_sub(x.c[i], y.c[i]);
    return r;
}

CycloElement cyclo_neg(const CycloElement& x) {
    CycloElement r = x;
    for (auto& ci : r.c) ci = padic_neg(ci);
    return r;
}

CycloElement cyclo_mul(const CycloElement& x, const CycloElement& y) {
    check_same(x, y);
    const CycloTower& tw = *x.tw;
    std::vector<PadicScalar> c(2 * tw.e - 1, PadicScalar::zero(tw.p));
    for (long i = 0; i < tw.e; ++i) {
        if (x.c[i].is_zero()) continue;
        for (long j = 0; j < tw.e; ++j) {
            if (y.c[j].is_zero()) continue;
            c[i + j] = padic_add(c[i + j], padic_mul(x.c[i], y.c[j]));
        }
    }
    reduce_mod_minpoly(tw, c);
    CycloElement r;
    r.tw = x.tw;
    r.c = std::move(c);
    return r;
}

CycloElement cyclo_mul_scalar(const CycloElement& x, const PadicScalar& s) {
    CycloElement r = x;
    for (auto& ci : r.c) ci = padic_mul(ci, s);
    return r;
}

CycloElement cyclo_mul_int(const CycloElement& x, const Int& m) {
    CycloElement r = x;
    for (auto& ci : r.c) ci = padic_mul_int(ci, m);
    return r;
}

CycloElement cyclo_div_int(const CycloElement& x, const Int& d) {
    CycloElement r = x;
    for (auto& ci : r.c) ci = padic_div_int(ci, d);
    return r;
}

CycloElement cyclo_pow(const CycloElement& x, unsigned long k) {
    CycloElement acc = x.tw->one(), base = x;
    while (k) {
        if (k & 1) acc = cyclo_mul(acc, base);
        k >>= 1;
        if (k) base = cyclo_mul(base, base);
    }
    return acc;
}

bool cyclo_is_zero(const CycloElement& x) {
    for (const auto& ci : x.c)
        if (!ci.is_zero()) return false;
    return true;
}

Valu cyclo_valuation(const CycloElement& x) {
    const long e = x.tw->e;
    std::optional<Rat> best;         // min over certified coordinates
    std::optional<Rat> best_bound;   // min over AtLeast coordinates
    for (long i = 0; i < e; ++i) {
        Valu vi = x.c[i].valuation();
        if (vi.kind == VKind::Zero) continue;
        Rat val = vi.v + make_rat(i, e);
        if (vi.kind == VKind::Finite) {
            if (!best || val < *best) best = val;
        } else {
            if (!best_bound || val < *best_bound) best_bound = val;
        }
    }
    if (!best && !best_bound) return Valu::zero();
    if (!best) return Valu::at_least(*best_bound);
    if (best_bound && *best_bound < *best) return Valu::at_least(*best_bound);
    // Distinct fractional parts i/e make the finite minimum the exact value;
    // bounds at or above it cannot lower the minimum.
    return Valu::finite(*best);
}

CycloElement cyclo_truncate_abs(const CycloElement& x, long A) {
    CycloElement r = x;
    for (auto& ci : r.c) ci = padic_truncate_abs(ci, A);
    return r;
}

CycloElement cyclo_inv(const CycloElement& x) {
    const CycloTower& tw = *x.tw;
    Valu val = cyclo_valuation(x);
    if (val.kind == VKind::Zero) throw InvariantError("inversion of zero");
    if (val.kind == VKind::AtLeast)
        throw PrecisionExhausted("inversion of element indistinguishable from zero");

    // v = m/e exactly; x = p^q pi^r * unit with m = q e + r, 0 <= r < e.
    Int m_num = val.v.get_num() * tw.e;
    Int m, rr;
    mpz_fdiv_qr(m.get_mpz_t(), rr.get_mpz_t(), m_num.get_mpz_t(), val.v.get_den().get_mpz_t());
    if (rr != 0) throw InvariantError("valuation denominator does not divide e");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), Int(tw.e).get_mpz_t());
    long ql = q.get_si(), rl = r.get_si();

    CycloElement unit = x;
    if (rl > 0) unit = cyclo_mul(unit, cyclo_pow(tw.pi_k(tw.L), tw.e - rl));
    unit = div_p_power(unit, rl > 0 ? ql + 1 : ql);

    // Seed from the residue field O/(pi) = F_p: the unit's constant coordinate.
    Valu v0 = unit.c[0].valuation();
    if (v0.kind != VKind::Finite || v0.v != 0)
        throw PrecisionExhausted("unit part not certified at current precision");
    Int seed = invmod(unit.c[0].unit_residue(1), Int(tw.p));
    const long A = tw.N + 2;
    CycloElement w = tw.from_rat(Rat(seed));
    CycloElement two = tw.from_rat(Rat(2));
    // The seed is correct to one pi-adic digit; count convergence in
    // pi-adic digits (A p-adic digits = A*e pi-adic digits).
    for (long correct = 1; correct < A * tw.e; correct *= 2) {
        w = cyclo_mul(w, cyclo_sub(two, cyclo_mul(unit, w)));
        w = cyclo_truncate_abs(w, A);
    }

    if (rl > 0) w = cyclo_mul(w, cyclo_pow(tw.pi_k(tw.L), tw.e - rl));
    w = div_p_power(w, rl > 0 ? ql + 1 : ql);
    return w;
}

CycloElement cyclo_inv_linear(const CycloElement& x) {
    const CycloTower& tw = *x.tw;
    const long e = tw.e;
    // Columns of the multiplication-by-x matrix, augmented with e_0.
    std::vector<std::vector<PadicScalar>> M(e, std::vector<PadicScalar>(e + 1, PadicScalar::zero(tw.p)));
    CycloElement col = x;
    for (long j = 0; j < e; ++j) {
        for (long i = 0; i < e; ++i) M[i][j] = col.c[i];
        if (j + 1 < e) col = mul_by_pi(col);
    }
    M[0][e] = PadicScalar::exact(tw.p, Rat(1));

    std::vector<long> where(e, -1);
    std::vector<bool> used(e, false);
    for (long colk = 0; colk < e; ++colk) {
        long pivot = -1;
        std::optional<Rat> pv;
        std::optional<Rat> bound;
        for (long i = 0; i < e; ++i) {
            if (used[i]) continue;
            Valu vi = M[i][colk].valuation();
            if (vi.kind == VKind::Finite && (!pv || vi.v < *pv)) {
                pv = vi.v;
                pivot = i;
            } else if (vi.kind == VKind::AtLeast && (!bound || vi.v < *bound)) {
                bound = vi.v;
            }
        }
        if (pivot < 0 || (bound && *bound < *pv))
            throw PrecisionExhausted("singular to working precision");
        used[pivot] = true;
        where[colk] = pivot;
        PadicScalar inv_p = padic_inv(M[pivot][colk]);
        for (long j = colk; j <= e; ++j) M[pivot][j] = padic_mul(M[pivot][j], inv_p);
        for (long i = 0; i < e; ++i) {
            if (i == pivot || M[i][colk].is_zero()) continue;
            PadicScalar f = M[i][colk];
            for (long j = colk; j <= e; ++j)
                M[i][j] = padic_sub(M[i][j], padic_mul(f, M[pivot][j]));
        }
    }
    CycloElement w = tw.zero();
    for (long k = 0; k < e; ++k) w.c[k] = M[where[k]][e];
    return w;
}

namespace {

CycloElement poly_eval(const std::vector<CycloElement>& f, const CycloElement& x) {
    CycloElement acc = x.tw->zero();
    for (size_t i = f.size(); i-- > 0;) acc = cyclo_add(cyclo_mul(acc, x), f[i]);
    return acc;
}

std::vector<CycloElement> poly_derivative(const std::vector<CycloElement>& f) {
    std::vector<CycloElement> d;
    for (size_t k = 1; k < f.size(); ++k) d.push_back(cyclo_mul_int(f[k], Int(k)));
    return d;
}

}  // namespace

CycloElement hensel_root(const std::vector<CycloElement>& f, const CycloElement& x0) {
    if (f.size() < 2) throw InvariantError("hensel_root needs degree >= 1");
    const CycloTower& tw = *x0.tw;
    std::vector<CycloElement> fp = poly_derivative(f);

    CycloElement fx = poly_eval(f, x0);
    Valu vf = cyclo_valuation(fx);
    if (vf.kind == VKind::Zero) return x0;
    Valu vd = cyclo_valuation(poly_eval(fp, x0));
    if (vd.kind == VKind::Zero) throw InvariantError("derivative vanishes at seed");
    if (vd.kind == VKind::AtLeast)
        throw PrecisionExhausted("derivative valuation not certified");
    // vf.v is the valuation itself (Finite) or a certified lower bound
    // (AtLeast); either way the strict Newton condition must hold.
    if (!(vf.v > 2 * vd.v)) throw InvariantError("Newton condition v(f(x0)) > 2 v(f'(x0)) fails");

    const Rat target(tw.N);
    CycloElement x = x0;
    for (int it = 0; it < 64; ++it) {
        fx = poly_eval(f, x);
        if (cyclo_valuation(fx).kind == VKind::Zero) return x;
        CycloElement delta = cyclo_mul(fx, cyclo_inv(poly_eval(fp, x)));
        x = cyclo_sub(x, delta);
        Valu vdel = cyclo_valuation(delta);
        // The iterate agrees with the true root to v >= vdel only; cap the
        // carried precision claims so later cancellations stay honest.
        if (vdel.kind == VKind::Zero || vdel.v >= target) return cyclo_truncate_abs(x, tw.N);
    }
    throw InvariantError("Newton iteration failed to converge");
}

CycloElement dwork_pi(const CycloTower& tw) {
    if (tw.p == 2) return tw.pi_k(0);
    // Solve U^{p-1} = -p / pi_0^{p-1} (a 1-unit) with U = 1 as Newton seed.
    CycloElement c = cyclo_neg(cyclo_mul_int(cyclo_inv(cyclo_pow(tw.pi_k(0), tw.p - 1)), Int(tw.p)));
    std::vector<CycloElement> f(tw.p, tw.zero());
    f[0] = cyclo_neg(c);
    f[tw.p - 1] = tw.one();
    CycloElement U = hensel_root(f, tw.one());
    return cyclo_mul(tw.pi_k(0), U);
}

std::string cyclo_str(const CycloElement& x, size_t max_terms) {
    std::ostringstream os;
    size_t shown = 0;
    bool first = true;
    for (long i = 0; i < x.tw->e; ++i) {
        if (x.c[i].is_zero()) continue;
        if (shown == max_terms) {
            os << " + ...";
            break;
        }
        if (!first) os << " + ";
        os << "(" << padic_str(x.c[i]) << ")";
        if (i == 1) os << "*pi";
        if (i > 1) os << "*pi^" << i;
        first = false;
        ++shown;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace piexp

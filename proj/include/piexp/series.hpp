#pragma once

#include <atomic>
#include <exception>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "piexp/errors.hpp"
#include "piexp/intutil.hpp"
#include "piexp/padic.hpp"
#include "piexp/rational.hpp"

namespace piexp {

// Power series over ring R, exact modulo T^{cap+1}. Dense coefficient vector;
// caps stay in the low thousands, so no asymptotically fast multiplication.
template <class R>
struct TruncSeries {
    R ring;
    long cap = 0;
    std::vector<typename R::Elem> c;  // size cap + 1

    static TruncSeries make(const R& ring, long cap) {
        TruncSeries f;
        f.ring = ring;
        f.cap = cap;
        f.c.assign(cap + 1, ring.zero());
        return f;
    }

    static TruncSeries one(const R& ring, long cap) {
        TruncSeries f = make(ring, cap);
        f.c[0] = ring.one();
        return f;
    }
};

// Cauchy-product coefficient n; the summation order k = 0..n is fixed so the
// serial and parallel kernels produce identical results.
template <class R>
typename R::Elem cauchy_coefficient(const TruncSeries<R>& f, const TruncSeries<R>& g, long n) {
    auto acc = f.ring.zero();
    for (long k = std::max(0L, n - g.cap); k <= std::min(n, f.cap); ++k) {
        if (f.ring.is_zero(f.c[k]) || f.ring.is_zero(g.c[n - k])) continue;
        acc = f.ring.add(acc, f.ring.mul(f.c[k], g.c[n - k]));
    }
    return acc;
}

template <class R>
TruncSeries<R> series_mul_serial(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (!f.ring.same(g.ring)) throw InvariantError("ring mismatch");
    long cap = std::min(f.cap, g.cap);
    TruncSeries<R> h = TruncSeries<R>::make(f.ring, cap);
    for (long n = 0; n <= cap; ++n) h.c[n] = cauchy_coefficient(f, g, n);
    return h;
}

template <class R>
TruncSeries<R> series_mul_parallel(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (!f.ring.same(g.ring)) throw InvariantError("ring mismatch");
    long cap = std::min(f.cap, g.cap);
    TruncSeries<R> h = TruncSeries<R>::make(f.ring, cap);
#ifdef _OPENMP
    std::exception_ptr eptr = nullptr;
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 8)
    for (long n = 0; n <= cap; ++n) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            h.c[n] = cauchy_coefficient(f, g, n);
        } catch (...) {
#pragma omp critical
            {
                if (!failed.exchange(true)) eptr = std::current_exception();
            }
        }
    }
    if (eptr) std::rethrow_exception(eptr);
    return h;
#else
    for (long n = 0; n <= cap; ++n) h.c[n] = cauchy_coefficient(f, g, n);
    return h;
#endif
}

// Parallelism pays only when there is real work per coefficient.
template <class R>
TruncSeries<R> series_mul(const TruncSeries<R>& f, const TruncSeries<R>& g) {
#ifdef _OPENMP
    if (std::min(f.cap, g.cap) >= 64) return series_mul_parallel(f, g);
#endif
    return series_mul_serial(f, g);
}

// exp of a polynomial with zero constant term, via the first-order recurrence
// n b_n = sum_{k=1}^{min(n, deg P)} k p_k b_{n-k}. The recurrence is
// sequential by contract; only independent series multiply in parallel.
template <class R>
TruncSeries<R> poly_exp(const R& ring, const std::vector<typename R::Elem>& P, long cap) {
    if (!P.empty() && !ring.is_zero(P[0]))
        throw InvariantError("poly_exp needs a zero constant term");
    long d = static_cast<long>(P.size()) - 1;
    TruncSeries<R> b = TruncSeries<R>::one(ring, cap);
    for (long n = 1; n <= cap; ++n) {
        auto acc = ring.zero();
        for (long k = 1; k <= std::min(n, d); ++k) {
            if (ring.is_zero(P[k]) || ring.is_zero(b.c[n - k])) continue;
            acc = ring.add(acc, ring.mul(ring.mul_int(P[k], Int(k)), b.c[n - k]));
        }
        b.c[n] = ring.div_int(acc, Int(n));
    }
    return b;
}

// log of a series with constant term 1; inverse of poly_exp on its domain.
// From n f_n = sum_{k=1}^{n} k l_k f_{n-k}: solve for l_n (f_0 = 1).
template <class R>
std::vector<typename R::Elem> series_log(const TruncSeries<R>& f) {
    const R& ring = f.ring;
    if (ring.is_zero(f.c[0]) || !ring.is_zero(ring.sub(f.c[0], ring.one())))
        throw InvariantError("series_log needs constant term exactly 1");
    std::vector<typename R::Elem> l(f.cap + 1, ring.zero());
    for (long n = 1; n <= f.cap; ++n) {
        auto acc = ring.mul_int(f.c[n], Int(n));
        for (long k = 1; k < n; ++k) {
            if (ring.is_zero(l[k]) || ring.is_zero(f.c[n - k])) continue;
            acc = ring.sub(acc, ring.mul(ring.mul_int(l[k], Int(k)), f.c[n - k]));
        }
        l[n] = ring.div_int(acc, Int(n));
    }
    return l;
}

struct GaussNorm {
    Rat value;                  // log_p of the Gauss norm at radius p^{log_r}
    std::vector<long> argmax;   // degrees attaining it (certified)
};

// log_p of max_i |b_i| r^i = max_i (-v(b_i) + i log_r) over certified
// valuations. AtLeast coordinates are tolerated only when their best case
// cannot reach the finite maximum; otherwise the decision needs more digits.
template <class R>
GaussNorm gauss_log_norm(const R& ring, const std::vector<typename R::Elem>& coeffs,
                         const Rat& log_r) {
    std::optional<Rat> best;
    std::vector<long> argmax;
    std::vector<std::pair<long, Rat>> bounds;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Valu vi = ring.valuation(coeffs[i]);
        if (vi.kind == VKind::Zero) continue;
        Rat contrib = -vi.v + Rat(static_cast<long>(i)) * log_r;
        if (vi.kind == VKind::AtLeast) {
            bounds.emplace_back(static_cast<long>(i), contrib);  // an upper bound
            continue;
        }
        if (!best || contrib > *best) {
            best = contrib;
            argmax.assign(1, static_cast<long>(i));
        } else if (contrib == *best) {
            argmax.push_back(static_cast<long>(i));
        }
    }
    if (!best) {
        if (bounds.empty()) throw InvariantError("Gauss norm of the zero polynomial");
        throw PrecisionExhausted("no certified coefficient valuation for Gauss norm");
    }
    for (const auto& [i, ub] : bounds)
        if (!(ub < *best))
            throw PrecisionExhausted("uncertified coefficient could attain the Gauss norm");
    return {*best, std::move(argmax)};
}

// Worst-case digits lost to the divisions by 1..M in the exp/log recurrences:
// sum_n v_p(n) = v_p(M!).
inline Int division_loss_bound(long M, long p) { return vp_factorial(M, p); }

}  // namespace piexp

#pragma once

#include <map>
#include <vector>

#include "piexp/series.hpp"

namespace piexp {

// p-typical Witt vector represented by its ghost components (phi_0, phi_1, ...).
// Over the characteristic-zero coefficient rings used here the ghost map is
// injective, Frobenius is a left shift, Verschiebung a scaled right shift and
// the product is componentwise.
template <class R>
struct GhostWitt {
    R ring;
    std::vector<typename R::Elem> phi;

    static GhostWitt make(const R& ring, std::vector<typename R::Elem> phi) {
        GhostWitt x{ring, std::move(phi)};
        while (!x.phi.empty() && ring.is_zero(x.phi.back())) x.phi.pop_back();
        return x;
    }

    typename R::Elem at(size_t i) const { return i < phi.size() ? phi[i] : ring.zero(); }
};

template <class R>
GhostWitt<R> ghost_F(const GhostWitt<R>& x) {
    std::vector<typename R::Elem> out(x.phi.begin() + (x.phi.empty() ? 0 : 1), x.phi.end());
    return GhostWitt<R>::make(x.ring, std::move(out));
}

template <class R>
GhostWitt<R> ghost_V(const GhostWitt<R>& x) {
    std::vector<typename R::Elem> out;
    out.push_back(x.ring.zero());
    for (const auto& f : x.phi) out.push_back(x.ring.mul_int(f, Int(x.ring.prime())));
    return GhostWitt<R>::make(x.ring, std::move(out));
}

template <class R>
GhostWitt<R> ghost_add(const GhostWitt<R>& x, const GhostWitt<R>& y) {
    if (!x.ring.same(y.ring)) throw InvariantError("ring mismatch");
    size_t n = std::max(x.phi.size(), y.phi.size());
    std::vector<typename R::Elem> out;
    for (size_t i = 0; i < n; ++i) out.push_back(x.ring.add(x.at(i), y.at(i)));
    return GhostWitt<R>::make(x.ring, std::move(out));
}

template <class R>
GhostWitt<R> ghost_neg(const GhostWitt<R>& x) {
    std::vector<typename R::Elem> out;
    for (const auto& f : x.phi) out.push_back(x.ring.neg(f));
    return GhostWitt<R>::make(x.ring, std::move(out));
}

template <class R>
GhostWitt<R> ghost_mul(const GhostWitt<R>& x, const GhostWitt<R>& y) {
    if (!x.ring.same(y.ring)) throw InvariantError("ring mismatch");
    size_t n = std::min(x.phi.size(), y.phi.size());
    std::vector<typename R::Elem> out;
    for (size_t i = 0; i < n; ++i) out.push_back(x.ring.mul(x.phi[i], y.phi[i]));
    return GhostWitt<R>::make(x.ring, std::move(out));
}

// Artin-Hasse image: exp(-sum_i phi_i T^{p^i} / p^i) truncated at cap
// (Bourbaki sign convention: the Witt vector with ghost (phi_i) corresponds to
// the p-typical series with coefficients a_i = -phi_i / p^i).
template <class R>
TruncSeries<R> ah_to_series(const GhostWitt<R>& x, long cap) {
    const long p = x.ring.prime();
    std::vector<typename R::Elem> P{x.ring.zero()};
    Int pk(1);
    for (size_t i = 0; i < x.phi.size(); ++i) {
        if (pk > cap) break;
        long deg = pk.get_si();
        if (static_cast<long>(P.size()) <= deg) P.resize(deg + 1, x.ring.zero());
        P[deg] = x.ring.neg(x.ring.div_int(x.phi[i], pk));
        pk *= p;
    }
    return poly_exp(x.ring, P, cap);
}

// Splits a zero-constant-term polynomial into its p-typical components:
// P(T) = sum_{p does not divide n} P_n(T^n), grouping degree i = n p^k under n.
// Returns pairs (n, P_n) with P_n listed by increasing n; P_n's coefficient of
// Y^{p^k} is a_{n p^k}.
template <class R>
std::vector<std::pair<long, std::vector<typename R::Elem>>> p_typical_decompose(
    const R& ring, const std::vector<typename R::Elem>& P) {
    const long p = ring.prime();
    if (!P.empty() && !ring.is_zero(P[0]))
        throw InvariantError("p-typical decomposition needs a zero constant term");
    std::map<long, std::vector<typename R::Elem>> comps;
    for (size_t i = 1; i < P.size(); ++i) {
        if (ring.is_zero(P[i])) continue;
        long n = static_cast<long>(i);
        long ppow = 1;
        while (n % p == 0) {
            n /= p;
            ppow *= p;
        }
        auto& comp = comps.try_emplace(n, std::vector<typename R::Elem>{ring.zero()}).first->second;
        if (static_cast<long>(comp.size()) <= ppow) comp.resize(ppow + 1, ring.zero());
        comp[ppow] = P[i];
    }
    std::vector<std::pair<long, std::vector<typename R::Elem>>> out;
    for (auto& [n, comp] : comps) out.emplace_back(n, std::move(comp));
    return out;
}

// Witt coordinates from ghost components: solve
// phi_k = sum_{i=0}^{k} p^i x_i^{p^{k-i}} successively (field divisions).
template <class R>
std::vector<typename R::Elem> ghost_to_witt_coords(const GhostWitt<R>& x, size_t count) {
    const long p = x.ring.prime();
    std::vector<typename R::Elem> coords;
    for (size_t k = 0; k < count; ++k) {
        auto acc = x.at(k);
        Int pi(1);
        for (size_t i = 0; i < k; ++i) {
            // x_i^{p^{k-i}} by square and multiply.
            auto base = coords[i];
            auto power = x.ring.one();
            Int e = pow_int(p, k - i);
            while (e > 0) {
                if (mpz_odd_p(e.get_mpz_t())) power = x.ring.mul(power, base);
                e /= 2;
                if (e > 0) base = x.ring.mul(base, base);
            }
            acc = x.ring.sub(acc, x.ring.mul_int(power, pi));
            pi *= p;
        }
        coords.push_back(x.ring.div_int(acc, pi));
    }
    return coords;
}

// Coordinates (u_1, ..., u_D) with f = prod_{n>=1} (1 - u_n T^n) mod T^{D+1},
// peeled degree by degree.
template <class R>
std::vector<typename R::Elem> series_to_universal_coords(const TruncSeries<R>& f, long D) {
    const R& ring = f.ring;
    if (ring.is_zero(f.c[0]) || !ring.is_zero(ring.sub(f.c[0], ring.one())))
        throw InvariantError("universal coordinates need constant term exactly 1");
    if (D > f.cap) throw InvariantError("truncation exceeds series cap");
    std::vector<typename R::Elem> g(f.c.begin(), f.c.begin() + D + 1);
    std::vector<typename R::Elem> u(D + 1, ring.zero());
    for (long n = 1; n <= D; ++n) {
        u[n] = ring.neg(g[n]);
        if (ring.is_zero(u[n])) continue;
        // g <- g / (1 - u_n T^n), in place (forward: g_m += u_n g_{m-n}).
        for (long m = n; m <= D; ++m) g[m] = ring.add(g[m], ring.mul(u[n], g[m - n]));
    }
    return u;  // index 0 unused
}

// prod_{n=1}^{D} (1 - u_n T^n) mod T^{cap+1} (round-trip check for the above).
template <class R>
TruncSeries<R> universal_coords_product(const R& ring, const std::vector<typename R::Elem>& u,
                                        long cap) {
    TruncSeries<R> f = TruncSeries<R>::one(ring, cap);
    for (size_t n = 1; n < u.size(); ++n) {
        if (ring.is_zero(u[n])) continue;
        // multiply by (1 - u_n T^n): backward in-place pass
        for (long m = cap; m >= static_cast<long>(n); --m)
            f.c[m] = ring.sub(f.c[m], ring.mul(u[n], f.c[m - n]));
    }
    return f;
}

}  // namespace piexp

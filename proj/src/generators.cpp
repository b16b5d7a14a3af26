#include "piexp/generators.hpp"

namespace piexp {

std::vector<long> depth_levels(long D, long p) {
    if (D < 1) throw InvariantError("degree must be positive");
    std::vector<long> d(D + 1, 0);
    for (long n = 1; n <= D; ++n) {
        long k = 0;
        Int npk = Int(n) * p;
        while (npk <= D) {
            ++k;
            npk *= p;
        }
        d[n] = k;
    }
    return d;
}

GhostWitt<CycloRing> w_d_ghost(const CycloTower& tw, long d) {
    if (d > tw.L) throw InvariantError("tower level too small for requested depth");
    CycloRing ring{&tw};
    std::vector<CycloElement> phi;
    for (long k = d; k >= 0; --k) phi.push_back(tw.pi_k(k));
    return GhostWitt<CycloRing>::make(ring, std::move(phi));
}

TruncSeries<CycloRing> e_d_series(const CycloTower& tw, long d, long cap) {
    if (d > tw.L) throw InvariantError("tower level too small for requested depth");
    CycloRing ring{&tw};
    std::vector<CycloElement> P{ring.zero()};
    Int pk(1);
    for (long k = 0; k <= d && pk <= cap; ++k, pk *= tw.p) {
        long deg = pk.get_si();
        if (static_cast<long>(P.size()) <= deg) P.resize(deg + 1, ring.zero());
        P[deg] = cyclo_div_int(tw.pi_k(d - k), pk);
    }
    return poly_exp(ring, P, cap);
}

TruncSeries<CycloRing> global_generator(const CycloTower& tw, long D, long cap) {
    std::vector<long> d = depth_levels(D, tw.p);
    if (d[1] > tw.L) throw InvariantError("tower level too small for degree D");
    CycloRing ring{&tw};
    std::vector<CycloElement> P(std::min(D, cap) + 1, ring.zero());
    for (long n = 1; n < static_cast<long>(P.size()); ++n)
        P[n] = cyclo_div_int(tw.pi_k(d[n]), Int(n));
    return poly_exp(ring, P, cap);
}

GhostWitt<CycloRing> all_ones_ghost(const CycloTower& tw, long cap) {
    CycloRing ring{&tw};
    std::vector<CycloElement> phi;
    for (Int pk(1); pk <= cap; pk *= tw.p) phi.push_back(tw.one());
    if (phi.empty()) phi.push_back(tw.one());
    return GhostWitt<CycloRing>::make(ring, std::move(phi));
}

GhostWitt<CycloRing> minus_one_ghost(const CycloTower& tw, long cap) {
    return ghost_neg(all_ones_ghost(tw, cap));
}

TruncSeries<CycloRing> monomial_scale(const TruncSeries<CycloRing>& f, const CycloElement& s) {
    TruncSeries<CycloRing> r = f;
    CycloElement pw = f.ring.one();
    for (long i = 1; i <= f.cap; ++i) {
        pw = cyclo_mul(pw, s);
        r.c[i] = cyclo_mul(f.c[i], pw);
    }
    return r;
}

}  // namespace piexp

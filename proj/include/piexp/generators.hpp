#pragma once

#include "piexp/cyclotomic.hpp"
#include "piexp/witt.hpp"

namespace piexp {

// Depth sequence d_n = floor(log_p(D/n)) for 1 <= n <= D, i.e. the largest k
// with n p^k <= D. Index 0 of the returned vector is unused.
std::vector<long> depth_levels(long D, long p);

// Ghost vector (pi_d, pi_{d-1}, ..., pi_0): the canonical generator at depth d.
// Frobenius maps it to the depth-(d-1) generator; F^{d+1} kills it.
GhostWitt<CycloRing> w_d_ghost(const CycloTower& tw, long d);

// exp(pi_d T + pi_{d-1} T^p / p + ... + pi_0 T^{p^d} / p^d) truncated at cap
// (positive-sign normalization; the Artin-Hasse image of w_d is the same with
// every sign flipped).
TruncSeries<CycloRing> e_d_series(const CycloTower& tw, long d, long cap);

// exp(sum_{n=1}^{D} pi_{d_n} X^n / n) truncated at cap: the degree-D generator
// whose p-typical components are the e_{d_n}.
TruncSeries<CycloRing> global_generator(const CycloTower& tw, long D, long cap);

// Ghost (1, 1, ..., 1) with enough entries to cover degrees up to cap; its
// Artin-Hasse image is exp(-T - T^p/p - T^{p^2}/p^2 - ...).
GhostWitt<CycloRing> all_ones_ghost(const CycloTower& tw, long cap);

// Ghost (-1, -1, ..., -1): the Witt vector -1. Its Artin-Hasse image is the
// reciprocal of the all-ones image and plays the role of the T -> -T factor in
// the two-factor product formula (literally equal to it for odd p only).
GhostWitt<CycloRing> minus_one_ghost(const CycloTower& tw, long cap);

// f(sT): coefficient i scaled by s^i.
TruncSeries<CycloRing> monomial_scale(const TruncSeries<CycloRing>& f, const CycloElement& s);

}  // namespace piexp

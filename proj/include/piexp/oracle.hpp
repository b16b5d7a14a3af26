#pragma once

#include <optional>
#include <vector>

#include "piexp/escalate.hpp"
#include "piexp/input.hpp"
#include "piexp/series.hpp"

namespace piexp {

// Brute-force scan of the Taylor coefficients b_n of exp(P) itself (no
// uniformizer rescaling): an independent check on the radius pipeline. Since
// exp(P) is a unit on its open disk of convergence, v(b_n) >= n log_p(rho)
// for every n, so `bound` can approach -log_p(rho) from below but can never
// cross it.
struct OracleReport {
    long M = 0;
    bool exact_path = false;  // all-rational input: plain rational arithmetic, nothing approximate
    Rat bound;                // sup_{1<=n<=M} -v(b_n)/n
    std::vector<long> attained;
    std::optional<long> first_nonintegral;          // first certified v(b_n) < 0
    std::vector<std::pair<long, Valu>> valuations;  // (n, v(b_n)) for n = 1..M
    TowerInfo tower;                                // zeroed on the exact path
};

// min(4 D p, 2000): far enough past the first uniformizer period to make the
// sup informative, small enough to stay instant.
long default_scan_length(const InputPolynomial& P);

// b_0..b_M of exp(P) by the direct recurrence n b_n = sum_k k a_k b_{n-k},
// over exact rationals. Requires rational coefficients.
std::vector<Rat> exp_coefficients(const InputPolynomial& P, long M);

// Same recurrence inside a tower, for coefficients involving pi or zeta.
TruncSeries<CycloRing> exp_coefficients(const InputPolynomial& P, long M, const CycloTower& tw);

OracleReport empirical_radius_bound(const InputPolynomial& P, long M,
                                    std::optional<long> prec = {});

// Identical scan, kept under the name the integrality workflow uses: the
// interesting field is first_nonintegral. A hit here forces the pipeline's
// integrality verdict to be negative; the converse needs M large enough to
// reach the first violation.
OracleReport integrality_scan(const InputPolynomial& P, long M, std::optional<long> prec = {});

}  // namespace piexp

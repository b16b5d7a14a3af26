#pragma once

#include <optional>
#include <vector>

#include "piexp/escalate.hpp"
#include "piexp/generators.hpp"
#include "piexp/input.hpp"
#include "piexp/polyring.hpp"
#include "piexp/series.hpp"

namespace piexp {

enum class IntegralityMode { Full, PPowers, Monoid };

struct RadiusReport {
    Rat log_radius;                               // log_p of the convergence radius
    std::vector<long> attained;                   // degrees attaining the min of v(e_i)/i
    std::vector<std::pair<long, Valu>> tilde_vals;  // (i, v(e_i)) for i = 1..D
    std::vector<std::pair<Rat, Rat>> newton_vertices;
    bool hull_certified = true;  // false when a lower-bound-only valuation could add a vertex
    TowerInfo tower;
};

struct IntegralityReport {
    bool integral = false;
    std::optional<long> witness;  // first tested degree with negative valuation
    std::vector<long> tested;
    IntegralityMode mode = IntegralityMode::Full;
    TowerInfo tower;
};

struct RocPointReport {
    Rat log_radius;
    std::vector<long> contributing;
    std::vector<std::pair<long, Valu>> tilde_vals;
    TowerInfo tower;
};

struct RocGenericReport {
    Rat log_r;
    Rat log_radius;
    std::vector<long> contributing;
    std::vector<std::pair<long, Rat>> gauss_norms;  // (i, log_p Gauss norm of e_i(a))
    std::vector<long> degrees_in_a;                 // deg_a of e_i(a)
    TowerInfo tower;
};

// --- single-shot pipeline pieces (tower supplied by the caller) ---

// Coefficients of P~: a_i / (zeta_{d_i} - 1), indices 0..D (index 0 zero).
std::vector<CycloElement> tilde_polynomial(const InputPolynomial& P, const CycloTower& tw);

// exp(P~) truncated at T^D.
TruncSeries<CycloRing> tilde_e(const InputPolynomial& P, const CycloTower& tw);

// Taylor coefficients of P at T = point: a_i(point) = sum_{k>=i} a_k C(k,i) point^{k-i}.
std::vector<CycloElement> shifted_coefficients(const InputPolynomial& P,
                                               const CycloElement& point);

// e_i(a) as polynomials in the formal expansion point a, for i = 0..D.
std::vector<PolyRing<CycloRing>::Elem> roc_polynomials(const InputPolynomial& P,
                                                       const CycloTower& tw);

// Lower convex hull of {(0,0)} union {(i, v_i)}: exactly-zero entries are
// skipped, AtLeast entries must lie strictly above the hull (otherwise the
// hull is not certified and more precision is needed).
std::vector<std::pair<Rat, Rat>> newton_polygon_dual(const std::vector<std::pair<long, Valu>>& vals);

struct MinRatio {
    Rat value;
    std::vector<long> attained;
};

// min v_i/i over certified entries. Exact zeros impose no constraint. An
// AtLeast entry is tolerated only when its bound is strictly above the finite
// minimum: anything else could move the value or the attained set, so
// PrecisionExhausted is thrown instead.
MinRatio certified_min_ratio(const std::vector<std::pair<long, Valu>>& vals);

// Minimal tower level needed by the pipeline for P (depths + coefficient atoms).
long required_level(const InputPolynomial& P);

// --- precision-loop owners ---

// log_p of the radius of convergence of exp(P): min_{1<=i<=D} v(e_i)/i where
// e = exp(P~) mod T^{D+1}. Starts at precision 32 + ceil(D/(p-1)) (or the
// override), doubles on any precision-exhausted signal, gives up after 10
// doublings. The dual Newton polygon is reported best-effort: a coefficient
// whose valuation is known only as a lower bound may hide a vertex, in which
// case hull_certified is false and the vertex list is empty. Pass
// require_hull = true to treat that as precision exhaustion instead (the
// radius itself is always certified).
RadiusReport radius_log(const InputPolynomial& P, std::optional<long> prec = {},
                        bool require_hull = false);

// True iff v(e_i) >= 0 at every tested degree; the witness is the first
// violating degree. Full tests 1..D; PPowers tests the powers of p (valid for
// p-typical P only); Monoid tests the monoid generated by p and the monomial
// degrees of P, intersected with [1, D].
IntegralityReport integrality_check(const InputPolynomial& P, IntegralityMode mode,
                                    std::optional<long> prec = {});

// Radius of the Taylor expansion of exp(P) at an explicit point.
RocPointReport roc_at_point(const InputPolynomial& P, const CoeffExpr& point,
                            std::optional<long> prec = {});

// Radius at the generic point of absolute value p^{log_r}: coefficient sizes
// are read off from Gauss norms of the e_i(a).
RocGenericReport roc_at_generic_radius(const InputPolynomial& P, const Rat& log_r,
                                       std::optional<long> prec = {});

const char* mode_name(IntegralityMode m);

}  // namespace piexp

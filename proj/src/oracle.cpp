#include "piexp/oracle.hpp"

#include <algorithm>

#include "piexp/errors.hpp"
#include "piexp/intutil.hpp"

namespace piexp {

namespace {

// Assemble the report from per-degree valuations; throws PrecisionExhausted
// whenever an uncertified entry could change the bound, the attained set, or
// the first-violation index.
OracleReport assemble(long M, bool exact, std::vector<std::pair<long, Valu>> vals,
                      const TowerInfo& info) {
    OracleReport rep;
    rep.M = M;
    rep.exact_path = exact;
    rep.valuations = std::move(vals);
    rep.tower = info;
    std::optional<Rat> best;
    std::vector<std::pair<long, Rat>> caps;  // AtLeast entries: -v/n can be at most this
    for (const auto& [n, val] : rep.valuations) {
        if (val.kind == VKind::Zero) continue;
        Rat r = -val.v / Rat(n);
        if (val.kind == VKind::Finite) {
            if (!best || r > *best) {
                best = r;
                rep.attained.assign(1, n);
            } else if (r == *best) {
                rep.attained.push_back(n);
            }
        } else {
            caps.emplace_back(n, r);
        }
        if (!rep.first_nonintegral && val.v < 0) {
            if (val.kind == VKind::Finite)
                rep.first_nonintegral = n;
            else
                throw PrecisionExhausted("integrality of coefficient " + std::to_string(n) +
                                         " undecided");
        }
    }
    if (!best) throw PrecisionExhausted("no certified coefficient valuation in the scan");
    for (const auto& [n, r] : caps) {
        (void)n;
        if (!(r < *best))
            throw PrecisionExhausted("an uncertified coefficient could raise the bound");
    }
    rep.bound = *best;
    return rep;
}

}  // namespace

long default_scan_length(const InputPolynomial& P) {
    return std::min(4 * P.D * P.p, 2000L);
}

std::vector<Rat> exp_coefficients(const InputPolynomial& P, long M) {
    if (!P.is_rational())
        throw InvariantError("the exact expansion needs rational coefficients");
    std::vector<Rat> a(P.D + 1, Rat(0));
    for (long i = 1; i <= P.D; ++i)
        if (!P.a[i].is_symbolically_zero()) a[i] = P.a[i].rational_value();
    std::vector<Rat> b(M + 1, Rat(0));
    b[0] = 1;
    for (long n = 1; n <= M; ++n) {
        Rat acc(0);
        for (long k = 1; k <= std::min(n, P.D); ++k) {
            if (a[k] == 0 || b[n - k] == 0) continue;
            acc += Rat(k) * a[k] * b[n - k];
        }
        b[n] = acc / Rat(n);
    }
    return b;
}

TruncSeries<CycloRing> exp_coefficients(const InputPolynomial& P, long M, const CycloTower& tw) {
    std::vector<CycloElement> coeffs = evaluate_coefficients(P, tw);
    return poly_exp(CycloRing{&tw}, coeffs, M);
}

OracleReport empirical_radius_bound(const InputPolynomial& P, long M, std::optional<long> prec) {
    if (M < 1) throw InvariantError("scan length must be positive");
    if (P.is_rational()) {
        std::vector<Rat> b = exp_coefficients(P, M);
        std::vector<std::pair<long, Valu>> vals;
        vals.reserve(M);
        for (long n = 1; n <= M; ++n)
            vals.emplace_back(n, b[n] == 0 ? Valu::zero() : Valu::finite(Rat(vp_rat(b[n], P.p))));
        return assemble(M, true, std::move(vals), TowerInfo{});
    }
    return with_escalating_tower(
        P.p, P.level_req, M, prec, [&](const CycloTower& tw, const TowerInfo& info) {
            TruncSeries<CycloRing> e = exp_coefficients(P, M, tw);
            std::vector<std::pair<long, Valu>> vals;
            vals.reserve(M);
            for (long n = 1; n <= M; ++n) vals.emplace_back(n, cyclo_valuation(e.c[n]));
            return assemble(M, false, std::move(vals), info);
        });
}

OracleReport integrality_scan(const InputPolynomial& P, long M, std::optional<long> prec) {
    return empirical_radius_bound(P, M, prec);
}

}  // namespace piexp

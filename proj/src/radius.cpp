#include "piexp/radius.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "piexp/errors.hpp"
#include "piexp/intutil.hpp"

namespace piexp {

MinRatio certified_min_ratio(const std::vector<std::pair<long, Valu>>& vals) {
    std::optional<Rat> best;
    std::vector<long> attained;
    std::vector<Rat> bounds;
    for (const auto& [i, val] : vals) {
        if (val.kind == VKind::Zero) continue;
        Rat r = val.v / Rat(i);
        if (val.kind == VKind::Finite) {
            if (!best || r < *best) {
                best = r;
                attained.assign(1, i);
            } else if (r == *best) {
                attained.push_back(i);
            }
        } else {
            bounds.push_back(r);
        }
    }
    if (!best) throw PrecisionExhausted("no coefficient valuation could be certified");
    for (const Rat& b : bounds)
        if (b <= *best) throw PrecisionExhausted("an uncertified coefficient could attain the minimum");
    return {*best, std::move(attained)};
}

namespace {

Rat cross(const std::pair<Rat, Rat>& o, const std::pair<Rat, Rat>& a,
          const std::pair<Rat, Rat>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

// Height of the hull at abscissa x; nullopt right of the last vertex.
std::optional<Rat> hull_value(const std::vector<std::pair<Rat, Rat>>& hull, const Rat& x) {
    if (hull.empty() || x < hull.front().first || x > hull.back().first) return std::nullopt;
    for (size_t j = 0; j + 1 < hull.size(); ++j) {
        if (x <= hull[j + 1].first) {
            const auto& [x0, y0] = hull[j];
            const auto& [x1, y1] = hull[j + 1];
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    }
    return hull.back().second;
}

// a_i / pi_{d_i} for an explicit coefficient vector (index 0 ignored).
std::vector<CycloElement> tilde_from_coeffs(const CycloTower& tw,
                                            const std::vector<CycloElement>& coeffs, long D) {
    std::vector<long> depths = depth_levels(D, tw.p);
    std::map<long, CycloElement> inv_pi;  // the handful of distinct depths
    std::vector<CycloElement> tilde(D + 1, tw.zero());
    for (long i = 1; i <= D; ++i) {
        if (cyclo_is_zero(coeffs[i])) continue;
        auto it = inv_pi.find(depths[i]);
        if (it == inv_pi.end())
            it = inv_pi.emplace(depths[i], cyclo_inv(tw.pi_k(depths[i]))).first;
        tilde[i] = cyclo_mul(coeffs[i], it->second);
    }
    return tilde;
}

std::vector<std::pair<long, Valu>> series_valuations(const TruncSeries<CycloRing>& e, long D) {
    std::vector<std::pair<long, Valu>> vals;
    vals.reserve(D);
    for (long i = 1; i <= D; ++i) vals.emplace_back(i, cyclo_valuation(e.c[i]));
    return vals;
}

std::vector<long> degrees_for_mode(const InputPolynomial& P, IntegralityMode mode) {
    std::vector<long> out;
    switch (mode) {
        case IntegralityMode::Full:
            for (long i = 1; i <= P.D; ++i) out.push_back(i);
            break;
        case IntegralityMode::PPowers: {
            for (long i = 1; i <= P.D; ++i) {
                if (P.a[i].is_symbolically_zero()) continue;
                Int unit;
                vp_int(Int(i), P.p, &unit);
                if (unit != 1)
                    throw InvariantError(
                        "the p-power scan is only valid when every monomial degree is a power of p");
            }
            for (Int q = 1; q <= P.D; q *= P.p) out.push_back(q.get_si());
            break;
        }
        case IntegralityMode::Monoid: {
            std::vector<long> gens{P.p};
            for (long i = 1; i <= P.D; ++i)
                if (!P.a[i].is_symbolically_zero()) gens.push_back(i);
            std::set<long> seen{1};
            std::vector<long> stack{1};
            while (!stack.empty()) {
                long x = stack.back();
                stack.pop_back();
                for (long g : gens) {
                    if (g == 0 || x > P.D / g) continue;
                    long y = x * g;
                    if (y <= P.D && seen.insert(y).second) stack.push_back(y);
                }
            }
            out.assign(seen.begin(), seen.end());
            break;
        }
    }
    return out;
}

}  // namespace

long required_level(const InputPolynomial& P) {
    return std::max(floor_log(P.p, P.D), P.level_req);
}

std::vector<CycloElement> tilde_polynomial(const InputPolynomial& P, const CycloTower& tw) {
    if (tw.p != P.p) throw InvariantError("tower prime does not match the polynomial");
    if (tw.L < required_level(P)) throw InvariantError("tower level too small for this degree");
    std::vector<CycloElement> coeffs = evaluate_coefficients(P, tw);
    if (cyclo_is_zero(coeffs[P.true_deg]))
        throw InvariantError("leading coefficient evaluates to zero");
    return tilde_from_coeffs(tw, coeffs, P.D);
}

TruncSeries<CycloRing> tilde_e(const InputPolynomial& P, const CycloTower& tw) {
    return poly_exp(CycloRing{&tw}, tilde_polynomial(P, tw), P.D);
}

std::vector<std::pair<Rat, Rat>> newton_polygon_dual(
    const std::vector<std::pair<long, Valu>>& vals) {
    std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(0)}};
    std::vector<std::pair<Rat, Rat>> pending;
    for (const auto& [i, val] : vals) {
        if (val.kind == VKind::Zero) continue;
        if (val.kind == VKind::Finite)
            pts.emplace_back(Rat(i), val.v);
        else
            pending.emplace_back(Rat(i), val.v);
    }
    std::vector<std::pair<Rat, Rat>> hull;  // lower hull, slopes strictly increasing
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    for (const auto& [x, lo] : pending) {
        std::optional<Rat> h = hull_value(hull, x);
        if (!h || !(lo > *h))
            throw PrecisionExhausted("an uncertified coefficient could reshape the polygon");
    }
    return hull;
}

RadiusReport radius_log(const InputPolynomial& P, std::optional<long> prec, bool require_hull) {
    return with_escalating_tower(P.p, required_level(P), P.D, prec,
                      [&](const CycloTower& tw, const TowerInfo& info) {
                          TruncSeries<CycloRing> e = tilde_e(P, tw);
                          auto vals = series_valuations(e, P.D);
                          MinRatio mr = certified_min_ratio(vals);
                          RadiusReport rep;
                          rep.log_radius = mr.value;
                          rep.attained = std::move(mr.attained);
                          try {
                              rep.newton_vertices = newton_polygon_dual(vals);
                          } catch (const PrecisionExhausted&) {
                              if (require_hull) throw;
                              rep.hull_certified = false;
                          }
                          rep.tilde_vals = std::move(vals);
                          rep.tower = info;
                          return rep;
                      });
}

IntegralityReport integrality_check(const InputPolynomial& P, IntegralityMode mode,
                                    std::optional<long> prec) {
    std::vector<long> degrees = degrees_for_mode(P, mode);
    return with_escalating_tower(P.p, required_level(P), P.D, prec,
                      [&](const CycloTower& tw, const TowerInfo& info) {
                          TruncSeries<CycloRing> e = tilde_e(P, tw);
                          IntegralityReport rep;
                          rep.integral = true;
                          rep.mode = mode;
                          rep.tested = degrees;
                          rep.tower = info;
                          for (long i : degrees) {
                              Valu v = cyclo_valuation(e.c[i]);
                              if (v.kind == VKind::Zero) continue;
                              if (v.kind == VKind::Finite) {
                                  if (v.v < 0) {
                                      rep.integral = false;
                                      rep.witness = i;
                                      break;
                                  }
                              } else if (v.v < 0) {
                                  throw PrecisionExhausted("integrality undecided at degree " +
                                                           std::to_string(i));
                              }
                          }
                          return rep;
                      });
}

std::vector<CycloElement> shifted_coefficients(const InputPolynomial& P,
                                               const CycloElement& point) {
    const CycloTower& tw = *point.tw;
    std::vector<CycloElement> coeffs = evaluate_coefficients(P, tw);
    std::vector<CycloElement> pw(P.D + 1, tw.one());
    for (long j = 1; j <= P.D; ++j) pw[j] = cyclo_mul(pw[j - 1], point);
    std::vector<CycloElement> out(P.D + 1, tw.zero());
    for (long i = 0; i <= P.D; ++i) {
        CycloElement acc = tw.zero();
        for (long k = std::max(i, 1L); k <= P.D; ++k) {
            if (cyclo_is_zero(coeffs[k])) continue;
            acc = cyclo_add(acc, cyclo_mul(cyclo_mul_int(coeffs[k], binomial(k, i)), pw[k - i]));
        }
        out[i] = acc;
    }
    return out;
}

RocPointReport roc_at_point(const InputPolynomial& P, const CoeffExpr& point,
                            std::optional<long> prec) {
    long level = std::max(required_level(P), point.min_tower_level());
    return with_escalating_tower(P.p, level, P.D, prec, [&](const CycloTower& tw, const TowerInfo& info) {
        CycloElement a = evaluate(point, tw);
        std::vector<CycloElement> shifted = shifted_coefficients(P, a);
        if (cyclo_is_zero(shifted[P.D]))
            throw InvariantError("leading coefficient evaluates to zero");
        std::vector<CycloElement> tilde = tilde_from_coeffs(tw, shifted, P.D);
        TruncSeries<CycloRing> e = poly_exp(CycloRing{&tw}, tilde, P.D);
        auto vals = series_valuations(e, P.D);
        MinRatio mr = certified_min_ratio(vals);
        RocPointReport rep;
        rep.log_radius = mr.value;
        rep.contributing = std::move(mr.attained);
        rep.tilde_vals = std::move(vals);
        rep.tower = info;
        return rep;
    });
}

std::vector<PolyRing<CycloRing>::Elem> roc_polynomials(const InputPolynomial& P,
                                                       const CycloTower& tw) {
    if (tw.p != P.p) throw InvariantError("tower prime does not match the polynomial");
    if (tw.L < required_level(P)) throw InvariantError("tower level too small for this degree");
    std::vector<CycloElement> coeffs = evaluate_coefficients(P, tw);
    if (cyclo_is_zero(coeffs[P.true_deg]))
        throw InvariantError("leading coefficient evaluates to zero");
    std::vector<long> depths = depth_levels(P.D, tw.p);
    PolyRing<CycloRing> PR{CycloRing{&tw}};
    std::map<long, CycloElement> inv_pi;
    std::vector<PolyRing<CycloRing>::Elem> tilde(P.D + 1, PR.zero());
    for (long i = 1; i <= P.D; ++i) {
        PolyRing<CycloRing>::Elem Ai;  // Taylor coefficient i of P at the formal point a
        for (long j = 0; i + j <= P.D; ++j)
            Ai.push_back(cyclo_mul_int(coeffs[i + j], binomial(i + j, i)));
        if (PR.is_zero(Ai)) continue;
        auto it = inv_pi.find(depths[i]);
        if (it == inv_pi.end())
            it = inv_pi.emplace(depths[i], cyclo_inv(tw.pi_k(depths[i]))).first;
        tilde[i] = PR.mul(Ai, PR.constant(it->second));
    }
    return poly_exp(PR, tilde, P.D).c;
}

RocGenericReport roc_at_generic_radius(const InputPolynomial& P, const Rat& log_r,
                                       std::optional<long> prec) {
    return with_escalating_tower(P.p, required_level(P), P.D, prec,
                      [&](const CycloTower& tw, const TowerInfo& info) {
                          auto e = roc_polynomials(P, tw);
                          CycloRing ring{&tw};
                          PolyRing<CycloRing> PR{ring};
                          RocGenericReport rep;
                          rep.log_r = log_r;
                          rep.tower = info;
                          std::optional<Rat> best;
                          for (long i = 1; i <= P.D; ++i) {
                              if (PR.is_zero(e[i])) continue;
                              GaussNorm g = gauss_log_norm(ring, e[i], log_r);
                              rep.gauss_norms.emplace_back(i, g.value);
                              rep.degrees_in_a.push_back(PR.degree(e[i]));
                              Rat ratio = -g.value / Rat(i);
                              if (!best || ratio < *best) {
                                  best = ratio;
                                  rep.contributing.assign(1, i);
                              } else if (ratio == *best) {
                                  rep.contributing.push_back(i);
                              }
                          }
                          if (!best)
                              throw PrecisionExhausted("no certified coefficient in the expansion");
                          rep.log_radius = *best;
                          return rep;
                      });
}

const char* mode_name(IntegralityMode m) {
    switch (m) {
        case IntegralityMode::Full: return "full";
        case IntegralityMode::PPowers: return "ppowers";
        case IntegralityMode::Monoid: return "monoid";
    }
    return "?";
}

}  // namespace piexp

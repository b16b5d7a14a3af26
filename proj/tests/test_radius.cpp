#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>

#include "doctest.h"
#include "piexp/parse.hpp"
#include "piexp/radius.hpp"

using namespace piexp;

namespace {

InputPolynomial rational_poly(long p, const std::vector<Rat>& coeffs_1_to_D) {
    std::vector<CoeffExpr> cs;
    for (const Rat& q : coeffs_1_to_D) cs.push_back(CoeffExpr::rational(q));
    return InputPolynomial::make(p, std::move(cs), true);
}

InputPolynomial random_poly(long p, long maxdeg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> deg(1, maxdeg), num(-8, 8), den(1, 6), keep(0, 3);
    while (true) {
        long D = deg(rng);
        std::vector<Rat> cs(D, Rat(0));
        for (long i = 0; i < D; ++i)
            if (keep(rng) != 0) cs[i] = make_rat(Int(num(rng)), Int(den(rng)));
        bool all_zero = true;
        for (const Rat& q : cs) all_zero = all_zero && q == 0;
        if (all_zero) continue;
        if (cs[D - 1] == 0) cs[D - 1] = Rat(1);
        return rational_poly(p, cs);
    }
}

Valu fin(const Rat& v) { return {VKind::Finite, v}; }
Valu atl(const Rat& v) { return {VKind::AtLeast, v}; }

}  // namespace

TEST_CASE("rescaled polynomial: coefficients are divided by depth uniformizers") {
    // P = T at p = 2: single coefficient 1 / pi_0 = -1/2.
    CycloTower t2(2, 0, 16);
    auto tp = tilde_polynomial(parse_polynomial("T", 2), t2);
    REQUIRE(tp.size() == 2);
    // Equality to working precision: the inverse of pi_0 carries approximate digits.
    CHECK(cyclo_valuation(cyclo_sub(tp[1], t2.from_rat(Rat(-1, 2)))).kind != VKind::Finite);
    CHECK(cyclo_valuation(tp[1]).v == Rat(-1));

    // Known-zero tilde: pi(1) T + pi(0) T^3/3 at p = 3 gives 1 and 1/3.
    CycloTower t3(3, 1, 24);
    auto wp = tilde_polynomial(parse_polynomial("pi(1)*T + pi(0)*T^3/3", 3), t3);
    REQUIRE(wp.size() == 4);
    Valu v1 = cyclo_valuation(cyclo_sub(wp[1], t3.one()));
    CHECK(v1.kind != VKind::Finite);  // equals 1 to working precision
    Valu v3 = cyclo_valuation(cyclo_sub(wp[3], t3.from_rat(Rat(1, 3))));
    CHECK(v3.kind != VKind::Finite);
}

TEST_CASE("golden radii") {
    for (long p : {2L, 3L, 5L, 7L})
        CHECK(radius_log(parse_polynomial("T", p)).log_radius == Rat(-1, p - 1));

    for (long p : {2L, 3L, 5L}) {
        std::string txt = "T + T^" + std::to_string(p) + "/" + std::to_string(p);
        CHECK(radius_log(parse_polynomial(txt, p)).log_radius ==
              Rat(-(2 * p - 1), p * p * (p - 1)));
    }

    // Declared degree padding does not change the radius (the min moves to
    // degree 3, where 1/3! pays the full division loss).
    RadiusReport pad = radius_log(parse_polynomial("T + 0*T^3", 3));
    CHECK(pad.log_radius == Rat(-1, 2));
    CHECK(pad.attained == std::vector<long>{3});

    // Dwork's splitting function is overconvergent: log-radius +(p-1)/p^2.
    for (long p : {2L, 3L, 5L}) {
        std::string txt = "dworkpi*T - dworkpi*T^" + std::to_string(p);
        CHECK(radius_log(parse_polynomial(txt, p)).log_radius == Rat(p - 1, p * p));
    }

    // Unit coefficients up to T^p plus T^p/p: the T^p/p term lowers the
    // radius below the exp(T) baseline.
    CHECK(radius_log(parse_polynomial("T + T^2 + T^3 + T^4 + T^5/5", 5)).log_radius ==
          Rat(-1, 8));

    // A symbolically-zero rescaled polynomial certifies radius 0.
    CHECK(radius_log(parse_polynomial("pi(1)*T + pi(0)*T^3/3", 3)).log_radius == Rat(0));
}

TEST_CASE("radius report details") {
    RadiusReport r = radius_log(parse_polynomial("T + T^2/2", 2));
    CHECK(r.log_radius == Rat(-3, 4));
    CHECK(r.attained == std::vector<long>{2});
    REQUIRE(r.hull_certified);
    REQUIRE(r.newton_vertices.size() == 2);
    CHECK(r.newton_vertices[0] == std::pair<Rat, Rat>{Rat(0), Rat(0)});
    CHECK(r.newton_vertices[1] == std::pair<Rat, Rat>{Rat(2), Rat(-3, 2)});
    CHECK(r.tower.escalations == 0);

    // An exactly-zero rescaled coefficient leaves the hull uncertifiable
    // (only a bound is ever known at degree 2) but the radius still certifies.
    RadiusReport s = radius_log(parse_polynomial("pi(1)*T + T^2", 2));
    CHECK(s.log_radius == Rat(0));
    CHECK(s.attained == std::vector<long>{1});
    CHECK_FALSE(s.hull_certified);
    CHECK(s.newton_vertices.empty());
    // Demanding the hull turns that into precision exhaustion.
    CHECK_THROWS_AS(radius_log(parse_polynomial("pi(1)*T + T^2", 2), {}, true),
                    PrecisionExhausted);
}

TEST_CASE("uncertifiable input: a coefficient that is exactly zero but only known approximately") {
    CHECK_THROWS_AS(radius_log(parse_polynomial("dworkpi^2*T + 3*T", 3)),
                    PrecisionExhausted);
}

TEST_CASE("homogeneity: substituting p^s T shifts the log-radius by s") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<long> shift(-2, 2), pickp(0, 1);
    const long primes[2] = {2, 3};
    for (int trial = 0; trial < 30; ++trial) {
        long p = primes[pickp(rng)];
        InputPolynomial P = random_poly(p, 6, rng);
        long s = shift(rng);
        Rat c = s >= 0 ? Rat(pow_int(p, s)) : Rat(1) / Rat(pow_int(p, -s));
        CHECK(radius_log(P.scale_argument(c)).log_radius ==
              radius_log(P).log_radius + Rat(s));
    }
}

TEST_CASE("p-typical splitting: the radius is the min over components") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long> pickp(0, 1);
    const long primes[2] = {2, 3};
    for (int trial = 0; trial < 20; ++trial) {
        long p = primes[pickp(rng)];
        InputPolynomial P = random_poly(p, 8, rng);

        // Components over the rationals: group degree n p^k under p-free n.
        std::map<long, std::map<long, Rat>> comp;
        for (long i = 1; i <= P.D; ++i) {
            Rat q = P.a[i].rational_value();
            if (q == 0) continue;
            long n = i, ppow = 1;
            while (n % p == 0) n /= p, ppow *= p;
            comp[n][ppow] = q;
        }
        std::optional<Rat> expect;
        for (const auto& [n, mono] : comp) {
            long top = mono.rbegin()->first;
            std::vector<Rat> cs(top, Rat(0));
            for (const auto& [j, q] : mono) cs[j - 1] = q;
            Rat r = radius_log(rational_poly(p, cs)).log_radius / Rat(n);
            if (!expect || r < *expect) expect = r;
        }
        REQUIRE(expect.has_value());
        CHECK(radius_log(P).log_radius == *expect);
    }
}

TEST_CASE("integrality agrees with the sign of the log-radius") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 25; ++trial) {
        long p = trial % 2 == 0 ? 2 : 3;
        InputPolynomial P = random_poly(p, 6, rng);
        bool integral = integrality_check(P, IntegralityMode::Full).integral;
        CHECK(integral == (radius_log(P).log_radius >= 0));
    }
    // Boundary: exp(2T) at p = 2 has log-radius exactly 0 and is integral.
    CHECK(radius_log(parse_polynomial("2*T", 2)).log_radius == Rat(0));
    CHECK(integrality_check(parse_polynomial("2*T", 2), IntegralityMode::Full).integral);
}

TEST_CASE("integrality witnesses and modes") {
    auto r1 = integrality_check(parse_polynomial("T", 2), IntegralityMode::Full);
    CHECK_FALSE(r1.integral);
    CHECK(r1.witness == 1);

    auto r2 = integrality_check(parse_polynomial("2*T + T^2", 2), IntegralityMode::PPowers);
    CHECK_FALSE(r2.integral);
    CHECK(r2.witness == 2);
    CHECK(r2.tested == std::vector<long>{1, 2});

    auto r3 = integrality_check(parse_polynomial("2*T + 4*T^3", 2), IntegralityMode::Monoid);
    CHECK(r3.integral);
    CHECK(r3.tested == std::vector<long>{1, 2, 3});

    // The p-power scan requires a p-typical polynomial.
    CHECK_THROWS_AS(integrality_check(parse_polynomial("T + T^3", 2), IntegralityMode::PPowers),
                    InvariantError);

    // Monoid and full always agree; p-powers agrees on p-typical inputs.
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 15; ++trial) {
        long p = trial % 2 == 0 ? 2 : 3;
        InputPolynomial P = random_poly(p, 6, rng);
        CHECK(integrality_check(P, IntegralityMode::Full).integral ==
              integrality_check(P, IntegralityMode::Monoid).integral);
    }
    std::uniform_int_distribution<long> num(-8, 8), den(1, 6), dd(0, 2);
    for (int trial = 0; trial < 15; ++trial) {
        long p = trial % 2 == 0 ? 2 : 3;
        long d = dd(rng);
        std::vector<Rat> cs(pow_int(p, d).get_si(), Rat(0));
        for (long k = 0, q = 1; k <= d; ++k, q *= p) {
            Rat c = make_rat(Int(num(rng)), Int(den(rng)));
            cs[q - 1] = c == 0 ? Rat(1) : c;
        }
        InputPolynomial P = rational_poly(p, cs);
        CHECK(integrality_check(P, IntegralityMode::Full).integral ==
              integrality_check(P, IntegralityMode::PPowers).integral);
    }
}

TEST_CASE("dual polygon hull construction") {
    // Collinear middle points are dropped; vertices only.
    auto hull = newton_polygon_dual({{1, fin(Rat(-3, 4))}, {2, fin(Rat(-3, 2))}});
    REQUIRE(hull.size() == 2);
    CHECK(hull[0] == std::pair<Rat, Rat>{Rat(0), Rat(0)});
    CHECK(hull[1] == std::pair<Rat, Rat>{Rat(2), Rat(-3, 2)});

    // A genuine breakpoint survives.
    auto hull2 = newton_polygon_dual({{1, fin(Rat(-2))}, {2, fin(Rat(-5, 2))}});
    REQUIRE(hull2.size() == 3);
    CHECK(hull2[1] == std::pair<Rat, Rat>{Rat(1), Rat(-2)});

    // Exact zeros are not points; bounds must stay strictly above the hull.
    auto hull3 = newton_polygon_dual({{1, fin(Rat(0))}, {2, {VKind::Zero, Rat(0)}}});
    CHECK(hull3.size() == 2);
    CHECK_NOTHROW(newton_polygon_dual({{1, fin(Rat(0))}, {2, atl(Rat(5))}, {3, fin(Rat(0))}}));
    CHECK_THROWS_AS(newton_polygon_dual({{1, fin(Rat(0))}, {2, atl(Rat(-1))}}),
                    PrecisionExhausted);
    // A bound to the right of the last finite point can always hide a vertex.
    CHECK_THROWS_AS(newton_polygon_dual({{1, fin(Rat(0))}, {2, atl(Rat(100))}}),
                    PrecisionExhausted);
}

TEST_CASE("first hull slope equals the log-radius") {
    std::mt19937_64 rng(8128);
    for (int trial = 0; trial < 20; ++trial) {
        long p = trial % 2 == 0 ? 2 : 3;
        RadiusReport r = radius_log(random_poly(p, 6, rng));
        REQUIRE(r.hull_certified);
        REQUIRE(r.newton_vertices.size() >= 2);
        const auto& [x0, y0] = r.newton_vertices[0];
        const auto& [x1, y1] = r.newton_vertices[1];
        CHECK((y1 - y0) / (x1 - x0) == r.log_radius);
    }
}

TEST_CASE("certified minimum of v_i / i") {
    MinRatio m = certified_min_ratio({{1, fin(Rat(1))}, {2, fin(Rat(2))}, {3, fin(Rat(3, 2))}});
    CHECK(m.value == Rat(1, 2));
    CHECK(m.attained == std::vector<long>{3});

    MinRatio tie = certified_min_ratio({{1, fin(Rat(1))}, {2, fin(Rat(2))}});
    CHECK(tie.attained == std::vector<long>{1, 2});

    CHECK_THROWS_AS(certified_min_ratio({{1, atl(Rat(5))}}), PrecisionExhausted);
    CHECK_THROWS_AS(certified_min_ratio({{1, fin(Rat(1))}, {2, atl(Rat(2))}}),
                    PrecisionExhausted);  // bound not strictly above the min
    CHECK(certified_min_ratio({{1, fin(Rat(1))}, {2, atl(Rat(3))}}).value == Rat(1));
    CHECK(certified_min_ratio({{1, fin(Rat(1))}, {2, {VKind::Zero, Rat(0)}}}).value == Rat(1));
}

TEST_CASE("Taylor coefficients at a shifted origin") {
    std::mt19937_64 rng(9999);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    CycloTower tw(3, 0, 24);
    for (int trial = 0; trial < 10; ++trial) {
        InputPolynomial P = random_poly(3, 5, rng);
        Rat aq = make_rat(Int(num(rng)), Int(den(rng)));
        CycloElement a = tw.from_rat(aq);
        auto sc = shifted_coefficients(P, a);
        REQUIRE(static_cast<long>(sc.size()) == P.D + 1);
        // Compare against the rational binomial expansion of P(T + a).
        for (long i = 0; i <= P.D; ++i) {
            Rat want(0);
            for (long k = std::max<long>(i, 1); k <= P.D; ++k) {
                Rat term = P.a[k].rational_value() * Rat(binomial(k, i));
                Rat pw(1);
                for (long t = 0; t < k - i; ++t) pw *= aq;
                want += term * pw;
            }
            CHECK(cyclo_valuation(cyclo_sub(sc[i], tw.from_rat(want))).kind == VKind::Zero);
        }
    }
}

TEST_CASE("radius at a shifted origin: piecewise law for T^2 at p = 2") {
    InputPolynomial P = parse_polynomial("T^2", 2);
    for (const char* pt : {"1", "3", "2", "4"}) {
        auto r = roc_at_point(P, parse_coefficient(pt));
        CHECK(r.log_radius == Rat(-1, 2));
    }
    CHECK(roc_at_point(P, parse_coefficient("1/2")).log_radius == Rat(-1));
    CHECK(roc_at_point(P, parse_coefficient("1/4")).log_radius == Rat(-2));
    // A ramified expansion point rides the same law with v(a) = 1/2 > 0.
    CHECK(roc_at_point(P, parse_coefficient("pi(0)")).log_radius == Rat(-1, 2));
}

TEST_CASE("shifted-coefficient polynomials in the formal point") {
    CycloTower tw(2, 1, 24);
    InputPolynomial P = parse_polynomial("T^2", 2);
    auto es = roc_polynomials(P, tw);
    REQUIRE(es.size() >= 3);

    // e_1(a) = 2a / pi_1: degree 1 in a with zero constant term.
    REQUIRE(es[1].size() == 2);
    CHECK(cyclo_valuation(es[1][0]).kind != VKind::Finite);
    Valu d1 = cyclo_valuation(cyclo_sub(es[1][1], cyclo_mul_int(cyclo_inv(tw.pi_k(1)), Int(2))));
    CHECK(d1.kind != VKind::Finite);

    // e_2(a) = zeta a^2 - 1/2.
    REQUIRE(es[2].size() == 3);
    CHECK(cyclo_valuation(cyclo_sub(es[2][0], tw.from_rat(Rat(-1, 2)))).kind != VKind::Finite);
    CHECK(cyclo_valuation(es[2][1]).kind != VKind::Finite);
    CHECK(cyclo_valuation(cyclo_sub(es[2][2], tw.zeta_k(1))).kind != VKind::Finite);

    // Degree growth in the formal point is bounded by i (D - 1).
    std::mt19937_64 rng(4321);
    InputPolynomial Q = random_poly(2, 4, rng);
    CycloTower t2(2, 2, 20);
    auto eq = roc_polynomials(Q, t2);
    for (size_t i = 1; i < eq.size(); ++i)
        CHECK(static_cast<long>(eq[i].size()) - 1 <= static_cast<long>(i) * (Q.D - 1));
}

TEST_CASE("radius at the generic point") {
    InputPolynomial P = parse_polynomial("T^2", 2);
    auto g = roc_at_generic_radius(P, Rat(0));
    CHECK(g.log_radius == Rat(-1, 2));
    CHECK(g.log_r == Rat(0));

    // Far out, the generic radius follows the same law as large-valuation
    // points: at |a| = 2 (log_r = 1) the quadratic term dominates.
    auto far = roc_at_generic_radius(P, Rat(1));
    CHECK(far.log_radius == roc_at_point(P, parse_coefficient("1/2")).log_radius);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "piexp/padic.hpp"
#include "piexp/cyclotomic.hpp"
#include "piexp/series.hpp"

using namespace piexp;

namespace {

bool exact_eq(const PadicScalar& x, const Rat& q) {
    return padic_sub(x, PadicScalar::exact(x.p, q)).is_zero();
}

TruncSeries<QpRing> random_series(const QpRing& ring, long cap, std::mt19937_64& rng,
                                  bool unit_constant) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    auto f = TruncSeries<QpRing>::make(ring, cap);
    for (long i = 0; i <= cap; ++i) f.c[i] = ring.from_rat(make_rat(Int(num(rng)), Int(den(rng))));
    if (unit_constant) f.c[0] = ring.one();
    return f;
}

std::vector<PadicScalar> random_poly(const QpRing& ring, long deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    std::vector<PadicScalar> P(deg + 1, ring.zero());
    for (long i = 1; i <= deg; ++i) P[i] = ring.from_rat(make_rat(Int(num(rng)), Int(den(rng))));
    return P;
}

}  // namespace

TEST_CASE("exponential of T") {
    QpRing ring{5, 20};
    std::vector<PadicScalar> P{ring.zero(), ring.one()};
    auto e = poly_exp(ring, P, 4);
    const Rat want[5] = {Rat(1), Rat(1), Rat(1, 2), Rat(1, 6), Rat(1, 24)};
    for (long i = 0; i <= 4; ++i) CHECK(exact_eq(e.c[i], want[i]));

    CHECK_THROWS_AS(poly_exp(ring, std::vector<PadicScalar>{ring.one()}, 3), InvariantError);
}

TEST_CASE("logarithm of 1 + T") {
    QpRing ring{3, 20};
    auto f = TruncSeries<QpRing>::one(ring, 3);
    f.c[1] = ring.one();
    auto l = series_log(f);
    CHECK(exact_eq(l[1], Rat(1)));
    CHECK(exact_eq(l[2], Rat(-1, 2)));
    CHECK(exact_eq(l[3], Rat(1, 3)));

    auto bad = TruncSeries<QpRing>::make(ring, 2);
    CHECK_THROWS_AS(series_log(bad), InvariantError);
}

TEST_CASE("exp and log invert each other on random polynomials") {
    std::mt19937_64 rng(4242);
    for (long p : {2L, 3L, 7L}) {
        QpRing ring{p, 24};
        for (int trial = 0; trial < 10; ++trial) {
            auto P = random_poly(ring, 6, rng);
            auto e = poly_exp(ring, P, 9);
            auto l = series_log(e);
            for (long i = 1; i <= 9; ++i) {
                PadicScalar want = i <= 6 ? P[i] : ring.zero();
                CHECK(padic_sub(l[i], want).is_zero());
            }
        }
    }
}

TEST_CASE("exp turns sums into products") {
    std::mt19937_64 rng(5150);
    QpRing ring{3, 24};
    for (int trial = 0; trial < 10; ++trial) {
        auto P = random_poly(ring, 5, rng);
        auto Q = random_poly(ring, 5, rng);
        std::vector<PadicScalar> S(6, ring.zero());
        for (long i = 0; i <= 5; ++i) S[i] = ring.add(P[i], Q[i]);
        auto lhs = poly_exp(ring, S, 8);
        auto rhs = series_mul(poly_exp(ring, P, 8), poly_exp(ring, Q, 8));
        for (long i = 0; i <= 8; ++i) CHECK(padic_sub(lhs.c[i], rhs.c[i]).is_zero());
    }
}

TEST_CASE("Gauss norm on closed forms") {
    QpRing ring{2, 16};
    // 1 + aT: log-norm at log_r = 0 is max(0, -v(a)).
    std::vector<PadicScalar> f{ring.one(), ring.from_rat(Rat(1, 4))};
    GaussNorm g = gauss_log_norm(ring, f, Rat(0));
    CHECK(g.value == Rat(2));
    CHECK(g.argmax == std::vector<long>{1});

    std::vector<PadicScalar> h{ring.one(), ring.zero(), ring.one()};  // 1 + T^2
    GaussNorm g2 = gauss_log_norm(ring, h, Rat(1, 2));
    CHECK(g2.value == Rat(1));
    CHECK(g2.argmax == std::vector<long>{2});

    // Ties are reported in degree order.
    GaussNorm g3 = gauss_log_norm(ring, h, Rat(0));
    CHECK(g3.value == Rat(0));
    CHECK(g3.argmax == std::vector<long>{0, 2});
}

TEST_CASE("Gauss norm honors uncertified coordinates") {
    QpRing ring{2, 16};
    // A bound that could reach the current max poisons the decision...
    std::vector<PadicScalar> f{ring.one(), PadicScalar::near(2, -1)};
    CHECK_THROWS_AS(gauss_log_norm(ring, f, Rat(0)), PrecisionExhausted);
    // ...a bound strictly below it is harmless.
    std::vector<PadicScalar> g{ring.one(), PadicScalar::near(2, 5)};
    CHECK(gauss_log_norm(ring, g, Rat(0)).value == Rat(0));
    // All-uncertified input cannot be normed.
    std::vector<PadicScalar> h{PadicScalar::near(2, 3)};
    CHECK_THROWS_AS(gauss_log_norm(ring, h, Rat(0)), PrecisionExhausted);
    CHECK_THROWS_AS(gauss_log_norm(ring, std::vector<PadicScalar>{ring.zero()}, Rat(0)),
                    InvariantError);
}

TEST_CASE("Gauss norm is convex in the log radius") {
    std::mt19937_64 rng(99);
    QpRing ring{3, 16};
    std::uniform_int_distribution<long> num(-40, 40);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<PadicScalar> f(7, ring.zero());
        for (auto& c : f) c = ring.from_rat(Rat(num(rng)));
        bool allzero = true;
        for (auto& c : f) allzero = allzero && c.is_zero();
        if (allzero) f[0] = ring.one();
        for (long r = -2; r <= 2; ++r) {
            Rat lo = gauss_log_norm(ring, f, Rat(r - 1)).value;
            Rat mid = gauss_log_norm(ring, f, Rat(r)).value;
            Rat hi = gauss_log_norm(ring, f, Rat(r + 1)).value;
            CHECK(mid + mid <= lo + hi);
        }
    }
}

TEST_CASE("denominator loss of exp truncated at M is at most v_p(M!)") {
    CHECK(division_loss_bound(81, 3) == 40);  // 27+9+3+1
    CHECK(division_loss_bound(10, 2) == 8);
    CHECK(division_loss_bound(1, 5) == 0);
}

TEST_CASE("parallel Cauchy product is bitwise identical to the serial kernel") {
    std::mt19937_64 rng(20240901);

    QpRing ring{3, 32};
    auto f = random_series(ring, 150, rng, false);
    auto g = random_series(ring, 150, rng, false);
    auto a = series_mul_serial(f, g);
    auto b = series_mul_parallel(f, g);
    for (long i = 0; i <= 150; ++i) CHECK(padic_str(a.c[i]) == padic_str(b.c[i]));

    CycloTower tw(3, 1, 24);
    CycloRing cring{&tw};
    std::uniform_int_distribution<long> coord(-8, 8);
    auto fc = TruncSeries<CycloRing>::make(cring, 80);
    auto gc = TruncSeries<CycloRing>::make(cring, 80);
    for (long i = 0; i <= 80; ++i) {
        fc.c[i] = cyclo_mul_int(cyclo_pow(tw.pi_k(1), i % tw.e), Int(coord(rng)));
        gc.c[i] = cyclo_add(tw.from_rat(Rat(coord(rng))), tw.pi_k(1));
    }
    auto ac = series_mul_serial(fc, gc);
    auto bc = series_mul_parallel(fc, gc);
    for (long i = 0; i <= 80; ++i) CHECK(cyclo_str(ac.c[i], 99) == cyclo_str(bc.c[i], 99));

    // The dispatcher picks one of the two kernels, never a third behavior.
    auto d = series_mul(f, g);
    for (long i = 0; i <= 150; ++i) CHECK(padic_str(d.c[i]) == padic_str(a.c[i]));
}

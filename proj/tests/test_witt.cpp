#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "piexp/witt.hpp"

using namespace piexp;

namespace {

GhostWitt<QpRing> ghost_of(const QpRing& ring, std::vector<Rat> qs) {
    std::vector<PadicScalar> phi;
    for (const Rat& q : qs) phi.push_back(ring.from_rat(q));
    return GhostWitt<QpRing>::make(ring, std::move(phi));
}

bool exact_eq(const PadicScalar& x, const Rat& q) {
    return padic_sub(x, PadicScalar::exact(x.p, q)).is_zero();
}

std::vector<Rat> random_rats(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<Rat> out;
    for (size_t i = 0; i < n; ++i) out.push_back(make_rat(Int(num(rng)), Int(den(rng))));
    return out;
}

}  // namespace

TEST_CASE("Frobenius shifts left, Verschiebung shifts right with a factor p") {
    QpRing ring{3, 16};
    auto x = ghost_of(ring, {Rat(2), Rat(5), Rat(7)});

    auto F = ghost_F(x);
    REQUIRE(F.phi.size() == 2);
    CHECK(exact_eq(F.phi[0], Rat(5)));
    CHECK(exact_eq(F.phi[1], Rat(7)));

    auto V = ghost_V(x);
    REQUIRE(V.phi.size() == 4);
    CHECK(V.phi[0].is_zero());
    CHECK(exact_eq(V.phi[1], Rat(6)));
    CHECK(exact_eq(V.phi[2], Rat(15)));
    CHECK(exact_eq(V.phi[3], Rat(21)));

    // F(V(x)) = p x, componentwise.
    auto FV = ghost_F(ghost_V(x));
    REQUIRE(FV.phi.size() == x.phi.size());
    for (size_t i = 0; i < x.phi.size(); ++i)
        CHECK(padic_sub(FV.phi[i], padic_mul_int(x.phi[i], Int(3))).is_zero());

    // Addition and multiplication are componentwise on ghost components.
    auto y = ghost_of(ring, {Rat(1), Rat(-5)});
    auto s = ghost_add(x, y);
    CHECK(exact_eq(s.phi[0], Rat(3)));
    CHECK(s.phi.size() == 3);  // the cancelled component stays inside
    auto m = ghost_mul(x, y);
    CHECK(exact_eq(m.phi[0], Rat(2)));
    CHECK(exact_eq(m.phi[1], Rat(-25)));
    CHECK(m.phi.size() == 2);  // trailing zeros are trimmed
}

TEST_CASE("series image is a homomorphism from ghost addition to multiplication") {
    std::mt19937_64 rng(1234);
    for (long p : {2L, 3L}) {
        QpRing ring{p, 24};
        for (int trial = 0; trial < 8; ++trial) {
            auto x = ghost_of(ring, random_rats(rng, 3));
            auto y = ghost_of(ring, random_rats(rng, 3));
            auto lhs = ah_to_series(ghost_add(x, y), 20);
            auto rhs = series_mul(ah_to_series(x, 20), ah_to_series(y, 20));
            for (long i = 0; i <= 20; ++i) CHECK(padic_sub(lhs.c[i], rhs.c[i]).is_zero());
        }
    }
}

TEST_CASE("series image: closed form for a one-component ghost") {
    QpRing ring{2, 16};
    // ghost (t, 0, 0, ...) maps to exp(-tT) : coefficient i is (-t)^i / i!.
    Rat t(3, 5);
    auto e = ah_to_series(ghost_of(ring, {t}), 4);
    Rat fact(1);
    Rat pow(1);
    for (long i = 1; i <= 4; ++i) {
        fact *= Rat(i);
        pow *= -t;
        CHECK(exact_eq(e.c[i], pow / fact));
    }
}

TEST_CASE("Witt coordinates from ghost components") {
    QpRing ring2{2, 16};
    Rat t(3, 2);
    auto teich = ghost_of(ring2, {t, t * t, t * t * t * t});
    auto coords = ghost_to_witt_coords(teich, 3);
    CHECK(exact_eq(coords[0], t));
    CHECK(coords[1].is_zero());
    CHECK(coords[2].is_zero());

    QpRing ring3{3, 16};
    auto v1 = ghost_of(ring3, {Rat(0), Rat(3), Rat(0)});
    auto c = ghost_to_witt_coords(v1, 3);
    CHECK(c[0].is_zero());
    CHECK(exact_eq(c[1], Rat(1)));
    CHECK(exact_eq(c[2], Rat(-1, 3)));
}

TEST_CASE("Witt coordinates round-trip through the ghost map") {
    std::mt19937_64 rng(777);
    for (long p : {2L, 5L}) {
        QpRing ring{p, 24};
        for (int trial = 0; trial < 8; ++trial) {
            auto x = ghost_of(ring, random_rats(rng, 4));
            auto coords = ghost_to_witt_coords(x, 4);
            // phi_k = sum_{i<=k} p^i coords_i^{p^{k-i}}
            for (size_t k = 0; k < 4; ++k) {
                PadicScalar acc = ring.zero();
                Int pi(1);
                for (size_t i = 0; i <= k; ++i) {
                    PadicScalar pw = ring.one();
                    for (Int e = pow_int(p, k - i); e > 0; e -= 1) pw = ring.mul(pw, coords[i]);
                    acc = ring.add(acc, ring.mul_int(pw, pi));
                    pi *= p;
                }
                CHECK(padic_sub(acc, x.at(k)).is_zero());
            }
        }
    }
}

TEST_CASE("universal product coordinates") {
    QpRing ring{2, 16};
    // f = 1 - uT has u_1 = u and nothing else.
    Rat u(7, 3);
    auto f = TruncSeries<QpRing>::one(ring, 6);
    f.c[1] = ring.from_rat(-u);
    auto coords = series_to_universal_coords(f, 6);
    CHECK(exact_eq(coords[1], u));
    for (long n = 2; n <= 6; ++n) CHECK(coords[n].is_zero());

    auto bad = TruncSeries<QpRing>::make(ring, 3);
    CHECK_THROWS_AS(series_to_universal_coords(bad, 3), InvariantError);
    CHECK_THROWS_AS(series_to_universal_coords(f, 7), InvariantError);
}

TEST_CASE("universal coordinates round-trip on random series") {
    std::mt19937_64 rng(2024);
    for (long p : {2L, 3L}) {
        QpRing ring{p, 24};
        for (int trial = 0; trial < 8; ++trial) {
            auto f = TruncSeries<QpRing>::one(ring, 12);
            auto qs = random_rats(rng, 12);
            for (long i = 1; i <= 12; ++i) f.c[i] = ring.from_rat(qs[i - 1]);
            auto u = series_to_universal_coords(f, 12);
            auto back = universal_coords_product(ring, u, 12);
            for (long i = 0; i <= 12; ++i) CHECK(padic_sub(back.c[i], f.c[i]).is_zero());
        }
    }
}

TEST_CASE("p-typical split of a polynomial") {
    QpRing ring{2, 16};
    std::vector<PadicScalar> P(18, ring.zero());
    for (long i = 1; i <= 17; ++i) P[i] = ring.from_rat(Rat(i));

    auto comps = p_typical_decompose(ring, P);
    std::vector<long> ns;
    for (auto& [n, comp] : comps) ns.push_back(n);
    CHECK(ns == std::vector<long>{1, 3, 5, 7, 9, 11, 13, 15, 17});

    // Depth of the n-component: largest p^k with n p^k <= 17.
    std::vector<long> top;
    for (auto& [n, comp] : comps) top.push_back(static_cast<long>(comp.size()) - 1);
    CHECK(top == std::vector<long>{16, 12 / 3, 10 / 5, 14 / 7, 1, 1, 1, 1, 1});

    // Every original coefficient appears exactly once, at slot (n, p^k).
    std::vector<bool> seen(18, false);
    for (auto& [n, comp] : comps) {
        for (size_t j = 1; j < comp.size(); ++j) {
            if (ring.is_zero(comp[j])) continue;
            long k = static_cast<long>(j);
            CHECK((k & (k - 1)) == 0);  // power of two
            CHECK(exact_eq(comp[j], Rat(n * k)));
            seen[n * k] = true;
        }
    }
    for (long i = 1; i <= 17; ++i) CHECK(seen[i]);

    std::vector<PadicScalar> nonzero{ring.one()};
    CHECK_THROWS_AS(p_typical_decompose(ring, nonzero), InvariantError);
}

// Timing harness comparing the serial and OpenMP Cauchy-product kernels on
// the two coefficient rings that matter in practice, with a bitwise-equality
// check between both results. Also times the (contractually sequential)
// exponential recurrence for reference.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include "piexp/cyclotomic.hpp"
#include "piexp/padic.hpp"
#include "piexp/series.hpp"

using namespace piexp;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <class R>
bool identical(const R& ring, const TruncSeries<R>& a, const TruncSeries<R>& b) {
    if (a.cap != b.cap) return false;
    for (long n = 0; n <= a.cap; ++n)
        if (ring.str(a.c[n]) != ring.str(b.c[n])) return false;
    return true;
}

template <class R>
void bench_mul(const std::string& label, const R& ring, const TruncSeries<R>& f,
               const TruncSeries<R>& g) {
    auto t0 = std::chrono::steady_clock::now();
    TruncSeries<R> serial = series_mul_serial(f, g);
    double t_serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    TruncSeries<R> parallel = series_mul_parallel(f, g);
    double t_parallel = ms_since(t0);
    std::cout << label << ": serial " << t_serial << " ms, parallel " << t_parallel
              << " ms, speedup " << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x, identical "
              << (identical(ring, serial, parallel) ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    long cap_q = argc > 1 ? std::stol(argv[1]) : 2048;
    long cap_c = argc > 2 ? std::stol(argv[2]) : 256;
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 16);

    QpRing q{3, 64};
    TruncSeries<QpRing> f = TruncSeries<QpRing>::make(q, cap_q);
    TruncSeries<QpRing> g = TruncSeries<QpRing>::make(q, cap_q);
    for (long n = 0; n <= cap_q; ++n) {
        f.c[n] = q.from_rat(make_rat(num(rng), den(rng)));
        g.c[n] = q.from_rat(make_rat(num(rng), den(rng)));
    }
    bench_mul("rational series, cap " + std::to_string(cap_q), q, f, g);

    CycloTower tw(3, 1, 64);
    CycloRing c{&tw};
    TruncSeries<CycloRing> fc = TruncSeries<CycloRing>::make(c, cap_c);
    TruncSeries<CycloRing> gc = TruncSeries<CycloRing>::make(c, cap_c);
    for (long n = 0; n <= cap_c; ++n) {
        fc.c[n] = tw.zero();
        gc.c[n] = tw.zero();
        for (long i = 0; i < tw.e; ++i) {
            fc.c[n].c[i] = PadicScalar::exact(3, Rat(num(rng)));
            gc.c[n].c[i] = PadicScalar::exact(3, Rat(num(rng)));
        }
    }
    bench_mul("tower series, cap " + std::to_string(cap_c), c, fc, gc);

    std::vector<PadicScalar> P{q.zero(), q.one(), q.from_rat(make_rat(1, 3))};
    auto t0 = std::chrono::steady_clock::now();
    TruncSeries<QpRing> e = poly_exp(q, P, cap_q / 2);
    double t_exp = ms_since(t0);
    std::cout << "exp recurrence (sequential by design), cap " << cap_q / 2 << ": " << t_exp
              << " ms, v(tail) = " << (q.is_zero(e.c[cap_q / 2]) ? std::string("zero")
                                                                 : rat_str(q.valuation(e.c[cap_q / 2]).v))
              << "\n";
    return 0;
}

#pragma once

#include <gmpxx.h>

#include <string>

namespace piexp {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(a, b) does not canonicalize; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Fixed-point decimal rendering (annotation only, never used in decisions):
// round-toward-zero at `digits` fractional digits, trailing zeros stripped.
inline std::string rat_decimal(const Rat& q, unsigned digits = 6) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int scaled = (q.get_num() * scale) / q.get_den();  // mpz division truncates toward zero
    bool neg = scaled < 0;
    Int mag = abs(scaled);
    Int ipart = mag / scale, fpart = mag % scale;
    std::string frac = fpart.get_str();
    frac.insert(0, digits - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    std::string out = (neg && (ipart != 0 || fpart != 0)) ? "-" : "";
    out += ipart.get_str();
    if (fpart != 0) out += "." + frac;
    return out;
}

}  // namespace piexp

#pragma once

#include <optional>

#include "piexp/cyclotomic.hpp"
#include "piexp/errors.hpp"
#include "piexp/intutil.hpp"

namespace piexp {

struct TowerInfo {
    long level = 0;
    long ramification = 0;  // e = p^level (p-1)
    long precision = 0;     // working precision that produced the result
    long escalations = 0;   // precision doublings that were needed
};

// Enough p-digits that the divisions by 1..size_hint in the exp recurrence
// cannot eat the whole budget, plus headroom for the decision rules.
inline long default_escalation_precision(long p, long size_hint) {
    return 32 + ceil_div(size_hint, p - 1);
}

// Run body(tower, info) with doubling working precision until it stops
// signalling PrecisionExhausted; give up after 10 doublings (the input then
// genuinely hides information behind approximate arithmetic, e.g. an exact
// zero produced through an inverted uniformizer).
template <class F>
auto with_escalating_tower(long p, long level, long size_hint, std::optional<long> prec,
                           F&& body) {
    long n0 = prec ? *prec : default_escalation_precision(p, size_hint);
    if (n0 < 4) n0 = 4;
    for (long k = 0;; ++k) {
        CycloTower tw(p, level, n0 << k);
        TowerInfo info;
        info.level = level;
        info.ramification = tw.e;
        info.precision = n0 << k;
        info.escalations = k;
        try {
            return body(tw, info);
        } catch (const PrecisionExhausted&) {
            if (k >= 10) throw;
        }
    }
}

}  // namespace piexp

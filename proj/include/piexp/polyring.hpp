#pragma once

#include <string>
#include <vector>

#include "piexp/errors.hpp"
#include "piexp/rational.hpp"

namespace piexp {

// Dense polynomial ring over a scalar ring: coefficients of a formal variable
// `a`. Used so the series machinery can expand exp with a symbolic expansion
// point; no valuation (Gauss norms take over there).
template <class R>
struct PolyRing {
    using Elem = std::vector<typename R::Elem>;  // coefficients of a^0, a^1, ...
    R base;

    long prime() const { return base.prime(); }

    Elem zero() const { return {}; }
    Elem one() const { return {base.one()}; }
    Elem from_int(long k) const { return k ? Elem{base.from_int(k)} : Elem{}; }
    Elem from_rat(const Rat& q) const { return q != 0 ? Elem{base.from_rat(q)} : Elem{}; }
    Elem constant(typename R::Elem c) const { return {std::move(c)}; }

    Elem add(const Elem& x, const Elem& y) const {
        Elem r = x;
        if (r.size() < y.size()) r.resize(y.size(), base.zero());
        for (size_t i = 0; i < y.size(); ++i) r[i] = base.add(r[i], y[i]);
        trim(r);
        return r;
    }
    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }
    Elem neg(const Elem& x) const {
        Elem r = x;
        for (auto& c : r) c = base.neg(c);
        return r;
    }
    Elem mul(const Elem& x, const Elem& y) const {
        if (x.empty() || y.empty()) return {};
        Elem r(x.size() + y.size() - 1, base.zero());
        for (size_t i = 0; i < x.size(); ++i) {
            if (base.is_zero(x[i])) continue;
            for (size_t j = 0; j < y.size(); ++j) {
                if (base.is_zero(y[j])) continue;
                r[i + j] = base.add(r[i + j], base.mul(x[i], y[j]));
            }
        }
        trim(r);
        return r;
    }
    Elem mul_int(const Elem& x, const Int& m) const {
        if (m == 0) return {};
        Elem r = x;
        for (auto& c : r) c = base.mul_int(c, m);
        return r;
    }
    Elem div_int(const Elem& x, const Int& d) const {
        Elem r = x;
        for (auto& c : r) c = base.div_int(c, d);
        return r;
    }
    Elem inv(const Elem&) const { throw InvariantError("polynomial ring has no inverses"); }
    bool is_zero(const Elem& x) const {
        for (const auto& c : x)
            if (!base.is_zero(c)) return false;
        return true;
    }
    std::string str(const Elem& x) const {
        std::string s;
        bool first = true;
        for (size_t i = 0; i < x.size(); ++i) {
            if (base.is_zero(x[i])) continue;
            if (!first) s += " + ";
            s += "(" + base.str(x[i]) + ")";
            if (i == 1) s += "*a";
            if (i > 1) s += "*a^" + std::to_string(i);
            first = false;
        }
        return first ? "0" : s;
    }
    bool same(const PolyRing& o) const { return base.same(o.base); }

    long degree(const Elem& x) const {  // -1 for zero
        for (size_t i = x.size(); i-- > 0;)
            if (!base.is_zero(x[i])) return static_cast<long>(i);
        return -1;
    }

  private:
    void trim(Elem& x) const {
        while (!x.empty() && base.is_zero(x.back())) x.pop_back();
    }
};

}  // namespace piexp

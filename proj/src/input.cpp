#include "piexp/input.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace piexp {

CoeffExpr CoeffExpr::rational(const Rat& q) {
    CoeffExpr e;
    if (q != 0) e.terms.push_back({q, {}});
    return e;
}

bool CoeffExpr::is_rational() const {
    for (const auto& t : terms)
        if (!t.atoms.empty()) return false;
    return true;
}

Rat CoeffExpr::rational_value() const {
    Rat q(0);
    for (const auto& t : terms) {
        if (!t.atoms.empty()) throw InvariantError("coefficient is not rational");
        q += t.scalar;
    }
    return q;
}

long CoeffExpr::min_tower_level() const {
    long lvl = 0;
    for (const auto& t : terms)
        for (const auto& at : t.atoms)
            if (at.kind != CoeffAtom::Kind::DworkPi) lvl = std::max(lvl, at.level);
    return lvl;
}

CoeffExpr CoeffExpr::scaled(const Rat& s) const {
    CoeffExpr e = *this;
    if (s == 0) return zero();
    for (auto& t : e.terms) t.scalar *= s;
    return e;
}

namespace {

std::string atom_text(const CoeffAtom& a) {
    std::string s;
    switch (a.kind) {
        case CoeffAtom::Kind::Pi: s = "pi(" + std::to_string(a.level) + ")"; break;
        case CoeffAtom::Kind::Zeta: s = "zeta(" + std::to_string(a.level) + ")"; break;
        case CoeffAtom::Kind::DworkPi: s = "dworkpi"; break;
    }
    if (a.exp != 1) s += "^" + std::to_string(a.exp);
    return s;
}

// Canonical ordering key for merging like terms.
std::string atoms_key(const std::vector<CoeffAtom>& atoms) {
    std::string k;
    for (const auto& a : atoms) k += atom_text(a) + "*";
    return k;
}

}  // namespace

void CoeffExpr::normalize() {
    for (auto& t : terms) {
        // merge repeated atoms inside a term
        std::map<std::pair<int, long>, long> exps;
        for (const auto& a : t.atoms) exps[{static_cast<int>(a.kind), a.level}] += a.exp;
        t.atoms.clear();
        for (const auto& [key, e] : exps) {
            if (e == 0) continue;
            t.atoms.push_back({static_cast<CoeffAtom::Kind>(key.first), key.second, e});
        }
    }
    std::map<std::string, CoeffTerm> merged;
    for (auto& t : terms) {
        auto key = atoms_key(t.atoms);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, t);
        else
            it->second.scalar += t.scalar;
    }
    terms.clear();
    for (auto& [key, t] : merged)
        if (t.scalar != 0) terms.push_back(std::move(t));
}

std::string CoeffExpr::text() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (i) os << " + ";
        bool need_scalar = t.scalar != 1 || t.atoms.empty();
        if (need_scalar) os << t.scalar.get_str();
        for (size_t j = 0; j < t.atoms.size(); ++j) {
            if (need_scalar || j) os << "*";
            os << atom_text(t.atoms[j]);
        }
    }
    return os.str();
}

CycloElement evaluate(const CoeffExpr& expr, const CycloTower& tw) {
    CycloElement acc = tw.zero();
    for (const auto& t : expr.terms) {
        CycloElement prod = tw.from_rat(t.scalar);
        for (const auto& a : t.atoms) {
            CycloElement base = tw.zero();
            switch (a.kind) {
                case CoeffAtom::Kind::Pi: base = tw.pi_k(a.level); break;
                case CoeffAtom::Kind::Zeta: base = tw.zeta_k(a.level); break;
                case CoeffAtom::Kind::DworkPi: base = dwork_pi(tw); break;
            }
            if (a.exp < 0)
                base = cyclo_inv(cyclo_pow(base, -a.exp));
            else
                base = cyclo_pow(base, a.exp);
            prod = cyclo_mul(prod, base);
        }
        acc = cyclo_add(acc, prod);
    }
    return acc;
}

InputPolynomial InputPolynomial::make(long p, std::vector<CoeffExpr> coeffs, bool allow_padding) {
    if (!is_prime(p)) throw InvariantError("p must be prime");
    InputPolynomial P;
    P.p = p;
    for (auto& e : coeffs) e.normalize();
    long true_deg = 0;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_symbolically_zero()) true_deg = static_cast<long>(i) + 1;
    if (true_deg == 0) throw InvariantError("the zero polynomial has no exponential radius");
    long D = static_cast<long>(coeffs.size());
    if (D != true_deg && !allow_padding)
        throw InvariantError("leading coefficient is zero (declare padding explicitly)");
    P.D = D;
    P.true_deg = true_deg;
    P.a.resize(D + 1);
    for (long i = 1; i <= D; ++i) P.a[i] = std::move(coeffs[i - 1]);
    for (long i = 1; i <= D; ++i) P.level_req = std::max(P.level_req, P.a[i].min_tower_level());
    return P;
}

bool InputPolynomial::is_rational() const {
    for (const auto& e : a)
        if (!e.is_rational()) return false;
    return true;
}

std::string InputPolynomial::text() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 1; i <= D; ++i) {
        if (a[i].is_symbolically_zero() && i != D) continue;
        if (!first) os << " + ";
        std::string c = a[i].text();
        if (c != "1") os << "(" << c << ")*";
        os << "T";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

InputPolynomial InputPolynomial::scale_argument(const Rat& c) const {
    InputPolynomial P = *this;
    Rat pw(1);
    for (long i = 1; i <= D; ++i) {
        pw *= c;
        P.a[i] = a[i].scaled(pw);
    }
    if (c == 0) throw InvariantError("scaling by zero");
    return P;
}

std::vector<CycloElement> evaluate_coefficients(const InputPolynomial& P, const CycloTower& tw) {
    std::vector<CycloElement> out(P.D + 1, tw.zero());
    for (long i = 1; i <= P.D; ++i) out[i] = evaluate(P.a[i], tw);
    return out;
}

}  // namespace piexp

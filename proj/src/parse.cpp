#include "piexp/parse.hpp"

#include <cctype>
#include <map>

#include "piexp/errors.hpp"
#include "piexp/intutil.hpp"

namespace piexp {

namespace {

constexpr long kMaxDegree = 100000;
constexpr long kMaxLevel = 20;
constexpr long kMaxExp = 10000;

struct Tok {
    enum Kind { IntLit, Name, Plus, Minus, Star, Slash, Caret, LPar, RPar, End };
    Kind kind;
    size_t pos;
    Int ival;
    std::string name;
};

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::IntLit, i, Int(s.substr(i, j - i)), {}});
            i = j;
            continue;
        }
        if (std::isalpha(c)) {
            size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Name, i, 0, s.substr(i, j - i)});
            i = j;
            continue;
        }
        Tok::Kind k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LPar; break;
            case ')': k = Tok::RPar; break;
            default: throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
        }
        out.push_back({k, i, 0, {}});
        ++i;
    }
    out.push_back({Tok::End, s.size(), 0, {}});
    return out;
}

Rat rat_pow(const Rat& base, long e, size_t pos) {
    if (e < 0 && base == 0) throw ParseError("zero cannot carry a negative exponent", pos);
    Rat b = e >= 0 ? base : Rat(1) / base;
    unsigned long m = static_cast<unsigned long>(e >= 0 ? e : -e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), m);
    return make_rat(num, den);
}

struct Parser {
    std::vector<Tok> toks;
    size_t at = 0;
    bool allow_T;

    const Tok& peek() const { return toks[at]; }
    Tok take() { return toks[at++]; }

    Tok expect(Tok::Kind k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        return take();
    }

    long small_int(const Tok& t, long cap, const char* what) const {
        if (t.ival > cap) throw ParseError(std::string(what) + " too large", t.pos);
        return t.ival.get_si();
    }

    // '^' ['-'] INT, defaulting to 1; sign allowed only when signed_ok.
    long exponent(bool signed_ok) {
        if (peek().kind != Tok::Caret) return 1;
        take();
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            if (!signed_ok) throw ParseError("exponent of T must be positive", peek().pos);
            take();
            neg = true;
        }
        Tok t = expect(Tok::IntLit, "an integer exponent");
        long e = small_int(t, kMaxExp, "exponent");
        return neg ? -e : e;
    }

    // One factor folded into the running term: scalar, atoms, T-degree.
    void factor(CoeffTerm& t, long& deg) {
        const Tok& tok = peek();
        if (tok.kind == Tok::IntLit) {
            Tok lit = take();
            long e = exponent(true);
            t.scalar *= rat_pow(Rat(lit.ival), e, lit.pos);
            return;
        }
        if (tok.kind != Tok::Name)
            throw ParseError("expected a coefficient or T", tok.pos);
        Tok name = take();
        if (name.name == "T" || name.name == "t") {
            if (!allow_T) throw ParseError("T is not allowed in a scalar expression", name.pos);
            if (peek().kind == Tok::Caret) {
                Tok caret = peek();
                long e = exponent(false);
                if (e < 1) throw ParseError("exponent of T must be positive", caret.pos);
                deg += e;
            } else {
                deg += 1;
            }
            if (deg > kMaxDegree) throw ParseError("degree too large", name.pos);
            return;
        }
        CoeffAtom atom;
        if (name.name == "pi" || name.name == "zeta") {
            atom.kind = name.name == "pi" ? CoeffAtom::Kind::Pi : CoeffAtom::Kind::Zeta;
            expect(Tok::LPar, "'('");
            Tok lvl = expect(Tok::IntLit, "a tower level");
            atom.level = small_int(lvl, kMaxLevel, "tower level");
            expect(Tok::RPar, "')'");
        } else if (name.name == "dworkpi") {
            atom.kind = CoeffAtom::Kind::DworkPi;
            atom.level = 0;
        } else {
            throw ParseError("unknown name '" + name.name + "'", name.pos);
        }
        atom.exp = exponent(true);
        if (atom.exp != 0) t.atoms.push_back(atom);
    }

    // term := factor (('*' factor) | ('/' INT))*
    std::pair<CoeffTerm, long> term() {
        CoeffTerm t;
        long deg = 0;
        factor(t, deg);
        for (;;) {
            if (peek().kind == Tok::Star) {
                take();
                factor(t, deg);
            } else if (peek().kind == Tok::Slash) {
                take();
                Tok d = expect(Tok::IntLit, "an integer divisor");
                if (d.ival == 0) throw ParseError("division by zero", d.pos);
                t.scalar /= Rat(d.ival);
            } else {
                break;
            }
        }
        return {std::move(t), deg};
    }

    // sum := ['-'] term (('+'|'-') term)*; returns (degree, term) pairs with
    // the first source position of each degree.
    std::vector<std::pair<long, CoeffTerm>> sum(std::map<long, size_t>& first_pos) {
        std::vector<std::pair<long, CoeffTerm>> parts;
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            take();
            neg = true;
        }
        for (;;) {
            size_t pos = peek().pos;
            auto [t, deg] = term();
            if (neg) t.scalar = -t.scalar;
            first_pos.emplace(deg, pos);
            parts.emplace_back(deg, std::move(t));
            if (peek().kind == Tok::Plus) {
                take();
                neg = false;
            } else if (peek().kind == Tok::Minus) {
                take();
                neg = true;
            } else if (peek().kind == Tok::End) {
                break;
            } else {
                throw ParseError("expected '+', '-' or end of input", peek().pos);
            }
        }
        return parts;
    }
};

}  // namespace

InputPolynomial parse_polynomial(const std::string& text, long p) {
    Parser parser{lex(text), 0, /*allow_T=*/true};
    std::map<long, size_t> first_pos;
    auto parts = parser.sum(first_pos);
    std::map<long, CoeffExpr> acc;
    for (auto& [deg, t] : parts) acc[deg].terms.push_back(std::move(t));
    for (auto& [deg, expr] : acc) expr.normalize();
    if (auto it = acc.find(0); it != acc.end() && !it->second.is_symbolically_zero())
        throw ParseError("constant term must vanish", first_pos.at(0));
    long D = 0;
    bool any_nonzero = false;
    for (const auto& [deg, expr] : acc) {
        if (deg > D) D = deg;
        if (deg >= 1 && !expr.is_symbolically_zero()) any_nonzero = true;
    }
    if (D < 1 || !any_nonzero)
        throw ParseError("the zero polynomial has no exponential radius", 0);
    std::vector<CoeffExpr> coeffs(D);
    for (long i = 1; i <= D; ++i) {
        auto it = acc.find(i);
        coeffs[i - 1] = it == acc.end() ? CoeffExpr::zero() : it->second;
    }
    return InputPolynomial::make(p, std::move(coeffs), /*allow_padding=*/true);
}

CoeffExpr parse_coefficient(const std::string& text) {
    Parser parser{lex(text), 0, /*allow_T=*/false};
    std::map<long, size_t> first_pos;
    auto parts = parser.sum(first_pos);
    CoeffExpr expr;
    for (auto& [deg, t] : parts) {
        (void)deg;  // always 0: T is rejected at the factor level
        expr.terms.push_back(std::move(t));
    }
    expr.normalize();
    return expr;
}

Rat parse_rational(const std::string& text) {
    auto toks = lex(text);
    size_t at = 0;
    bool neg = false;
    if (toks[at].kind == Tok::Minus) {
        ++at;
        neg = true;
    }
    if (toks[at].kind != Tok::IntLit) throw ParseError("expected an integer", toks[at].pos);
    Int num = toks[at++].ival;
    Int den = 1;
    if (toks[at].kind == Tok::Slash) {
        ++at;
        if (toks[at].kind != Tok::IntLit) throw ParseError("expected a denominator", toks[at].pos);
        den = toks[at++].ival;
        if (den == 0) throw ParseError("division by zero", toks[at - 1].pos);
    }
    if (toks[at].kind != Tok::End) throw ParseError("trailing input", toks[at].pos);
    Rat q = make_rat(num, den);
    return neg ? Rat(-q) : q;
}

}  // namespace piexp

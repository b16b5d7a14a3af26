#pragma once

#include <optional>
#include <string>
#include <vector>

#include "piexp/cyclotomic.hpp"

namespace piexp {

// Symbolic coefficient language: sums of terms (rational scalar) * (product of
// tower atoms). Kept symbolic so the adaptive-precision loop can re-evaluate
// everything inside a fresh tower at higher precision.
struct CoeffAtom {
    enum class Kind { Pi, Zeta, DworkPi };
    Kind kind;
    long level = 0;  // Pi/Zeta only
    long exp = 1;
};

struct CoeffTerm {
    Rat scalar{1};
    std::vector<CoeffAtom> atoms;
};

struct CoeffExpr {
    std::vector<CoeffTerm> terms;

    static CoeffExpr rational(const Rat& q);
    static CoeffExpr zero() { return {}; }

    bool is_symbolically_zero() const { return terms.empty(); }
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()
    long min_tower_level() const;
    CoeffExpr scaled(const Rat& s) const;
    std::string text() const;

    void normalize();  // sort atoms, merge like terms, drop zero scalars
};

CycloElement evaluate(const CoeffExpr& expr, const CycloTower& tw);

// P(T) = sum_{i=1}^{D} a_i T^i with a_0 = 0. D is the declared degree: it may
// exceed the true degree only when the caller explicitly asks for padding
// (examples: a polynomial entered as "T + 0*T^2"). The zero polynomial is
// always rejected.
struct InputPolynomial {
    long p = 0;
    long D = 0;
    long true_deg = 0;
    std::vector<CoeffExpr> a;  // index 0..D; a[0] stays zero
    long level_req = 0;        // minimal tower level imposed by the coefficients

    static InputPolynomial make(long p, std::vector<CoeffExpr> coeffs_1_to_D,
                                bool allow_padding = false);

    bool is_rational() const;
    std::string text() const;

    // P(c T): coefficient i scaled by c^i (used by homogeneity checks and the
    // scaled integrality equivalence).
    InputPolynomial scale_argument(const Rat& c) const;
};

// Evaluate all coefficients in a tower (index 0..D).
std::vector<CycloElement> evaluate_coefficients(const InputPolynomial& P, const CycloTower& tw);

}  // namespace piexp

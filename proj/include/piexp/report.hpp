#pragma once

#include <string>

#include "json.hpp"
#include "piexp/input.hpp"
#include "piexp/oracle.hpp"
#include "piexp/radius.hpp"
#include "piexp/witt.hpp"

namespace piexp {

using Json = nlohmann::ordered_json;

// Exact rational as strings (arbitrary precision, no floats anywhere), plus a
// truncated decimal annotation for humans.
Json rat_json(const Rat& q);
Json valu_json(const Valu& v);

// "num/den" with a decimal annotation when the fraction is not an integer.
std::string rat_text(const Rat& q);
std::string valu_text(const Valu& v);

struct TildeReport {
    InputPolynomial P;
    std::vector<std::pair<long, std::string>> coeff_text;  // rendered tilde coefficients
    std::vector<std::pair<long, Valu>> coeff_vals;
    std::vector<long> depths;  // d_i for i = 1..D
    TowerInfo tower;
};

struct WittReport {
    InputPolynomial P;
    std::vector<std::pair<long, Valu>> coord_vals;  // v(u_n) of the universal coordinates
    Rat iota_log;                                   // min_n v(u_n)/n (equals the log radius)
    std::vector<long> attained;
    TowerInfo tower;
};

TildeReport tilde_report(const InputPolynomial& P, std::optional<long> prec = {});
WittReport witt_report(const InputPolynomial& P, std::optional<long> prec = {});

Json radius_json(const InputPolynomial& P, const RadiusReport& r);
Json newton_json(const InputPolynomial& P, const RadiusReport& r);
Json integrality_json(const InputPolynomial& P, const IntegralityReport& r);
Json roc_point_json(const InputPolynomial& P, const std::string& point_text,
                    const RocPointReport& r);
Json roc_generic_json(const InputPolynomial& P, const RocGenericReport& r);
Json oracle_json(const InputPolynomial& P, const OracleReport& r);
Json tilde_json(const TildeReport& r);
Json witt_json(const WittReport& r);

std::string radius_text(const InputPolynomial& P, const RadiusReport& r);
std::string newton_text(const InputPolynomial& P, const RadiusReport& r);
std::string integrality_text(const InputPolynomial& P, const IntegralityReport& r);
std::string roc_point_text(const InputPolynomial& P, const std::string& point_text,
                           const RocPointReport& r);
std::string roc_generic_text(const InputPolynomial& P, const RocGenericReport& r);
std::string oracle_text(const InputPolynomial& P, const OracleReport& r);
std::string tilde_text(const TildeReport& r);
std::string witt_text(const WittReport& r);

}  // namespace piexp

#include "piexp/report.hpp"

#include <sstream>

#include "piexp/intutil.hpp"

namespace piexp {

Json rat_json(const Rat& q) {
    Json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    j["decimal"] = rat_decimal(q);
    return j;
}

Json valu_json(const Valu& v) {
    Json j;
    switch (v.kind) {
        case VKind::Zero: j["kind"] = "zero"; break;
        case VKind::Finite:
            j["kind"] = "finite";
            j["v"] = rat_json(v.v);
            break;
        case VKind::AtLeast:
            j["kind"] = "at_least";
            j["v"] = rat_json(v.v);
            break;
    }
    return j;
}

std::string rat_text(const Rat& q) {
    std::string s = rat_str(q);
    if (q.get_den() != 1) s += " (" + rat_decimal(q) + ")";
    return s;
}

std::string valu_text(const Valu& v) {
    switch (v.kind) {
        case VKind::Zero: return "zero (exact)";
        case VKind::Finite: return rat_text(v.v);
        case VKind::AtLeast: return ">= " + rat_text(v.v);
    }
    return "?";
}

namespace {

Json tower_json(const TowerInfo& t) {
    Json j;
    j["level"] = t.level;
    j["ramification"] = t.ramification;
    j["precision"] = t.precision;
    j["escalations"] = t.escalations;
    return j;
}

Json head_json(const char* command, const InputPolynomial& P) {
    Json j;
    j["command"] = command;
    j["prime"] = P.p;
    j["polynomial"] = P.text();
    j["degree"] = P.D;
    return j;
}

Json degree_valu_array(const std::vector<std::pair<long, Valu>>& vals) {
    Json arr = Json::array();
    for (const auto& [i, v] : vals) {
        Json e;
        e["degree"] = i;
        e["valuation"] = valu_json(v);
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string tower_text(const TowerInfo& t) {
    std::ostringstream os;
    os << "tower: level " << t.level << " (e = " << t.ramification << "), precision "
       << t.precision << ", escalations " << t.escalations;
    return os.str();
}

std::string head_text(const InputPolynomial& P) {
    std::ostringstream os;
    os << "polynomial: " << P.text() << "\nprime: " << P.p << "\n";
    return os.str();
}

std::string degree_list(const std::vector<long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

TildeReport tilde_report(const InputPolynomial& P, std::optional<long> prec) {
    long n0 = prec ? *prec : default_escalation_precision(P.p, P.D);
    if (n0 < 4) n0 = 4;
    long level = required_level(P);
    CycloTower tw(P.p, level, n0);
    TildeReport rep;
    rep.P = P;
    rep.tower = {level, tw.e, n0, 0};
    rep.depths = depth_levels(P.D, P.p);
    std::vector<CycloElement> tilde = tilde_polynomial(P, tw);
    for (long i = 1; i <= P.D; ++i) {
        rep.coeff_text.emplace_back(i, cyclo_str(tilde[i]));
        rep.coeff_vals.emplace_back(i, cyclo_valuation(tilde[i]));
    }
    return rep;
}

WittReport witt_report(const InputPolynomial& P, std::optional<long> prec) {
    return with_escalating_tower(
        P.p, required_level(P), P.D, prec, [&](const CycloTower& tw, const TowerInfo& info) {
            TruncSeries<CycloRing> e = tilde_e(P, tw);
            std::vector<CycloElement> u = series_to_universal_coords(e, P.D);
            std::vector<std::pair<long, Valu>> vals;
            for (long n = 1; n <= P.D; ++n) vals.emplace_back(n, cyclo_valuation(u[n]));
            MinRatio mr = certified_min_ratio(vals);
            WittReport rep;
            rep.P = P;
            rep.coord_vals = std::move(vals);
            rep.iota_log = mr.value;
            rep.attained = std::move(mr.attained);
            rep.tower = info;
            return rep;
        });
}

Json radius_json(const InputPolynomial& P, const RadiusReport& r) {
    Json j = head_json("radius", P);
    j["log_radius"] = rat_json(r.log_radius);
    j["attained_degrees"] = r.attained;
    j["tilde_valuations"] = degree_valu_array(r.tilde_vals);
    if (r.hull_certified) {
        Json verts = Json::array();
        for (const auto& [x, y] : r.newton_vertices) {
            Json v;
            v["x"] = rat_json(x);
            v["y"] = rat_json(y);
            verts.push_back(std::move(v));
        }
        j["newton_vertices"] = std::move(verts);
    } else {
        j["newton_vertices"] = nullptr;
    }
    j["tower"] = tower_json(r.tower);
    return j;
}

Json newton_json(const InputPolynomial& P, const RadiusReport& r) {
    Json j = head_json("newton", P);
    Json verts = Json::array();
    for (const auto& [x, y] : r.newton_vertices) {
        Json v;
        v["x"] = rat_json(x);
        v["y"] = rat_json(y);
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    j["min_slope"] = rat_json(r.log_radius);
    j["tilde_valuations"] = degree_valu_array(r.tilde_vals);
    j["tower"] = tower_json(r.tower);
    return j;
}

Json integrality_json(const InputPolynomial& P, const IntegralityReport& r) {
    Json j = head_json("integrality", P);
    j["mode"] = mode_name(r.mode);
    j["integral"] = r.integral;
    if (r.witness)
        j["witness"] = *r.witness;
    else
        j["witness"] = nullptr;
    j["tested_degrees"] = r.tested;
    j["tower"] = tower_json(r.tower);
    return j;
}

Json roc_point_json(const InputPolynomial& P, const std::string& point_text,
                    const RocPointReport& r) {
    Json j = head_json("roc", P);
    j["point"] = point_text;
    j["log_radius"] = rat_json(r.log_radius);
    j["contributing_degrees"] = r.contributing;
    j["tilde_valuations"] = degree_valu_array(r.tilde_vals);
    j["tower"] = tower_json(r.tower);
    return j;
}

Json roc_generic_json(const InputPolynomial& P, const RocGenericReport& r) {
    Json j = head_json("roc", P);
    j["generic_log_r"] = rat_json(r.log_r);
    j["log_radius"] = rat_json(r.log_radius);
    j["contributing_degrees"] = r.contributing;
    Json gauss = Json::array();
    for (size_t k = 0; k < r.gauss_norms.size(); ++k) {
        Json e;
        e["degree"] = r.gauss_norms[k].first;
        e["log_norm"] = rat_json(r.gauss_norms[k].second);
        e["degree_in_a"] = r.degrees_in_a[k];
        gauss.push_back(std::move(e));
    }
    j["gauss_norms"] = std::move(gauss);
    j["tower"] = tower_json(r.tower);
    return j;
}

Json oracle_json(const InputPolynomial& P, const OracleReport& r) {
    Json j = head_json("oracle", P);
    j["M"] = r.M;
    j["exact"] = r.exact_path;
    j["bound"] = rat_json(r.bound);
    j["attained_degrees"] = r.attained;
    if (r.first_nonintegral)
        j["first_nonintegral"] = *r.first_nonintegral;
    else
        j["first_nonintegral"] = nullptr;
    j["valuations"] = degree_valu_array(r.valuations);
    j["tower"] = tower_json(r.tower);
    return j;
}

Json tilde_json(const TildeReport& r) {
    Json j = head_json("tilde", r.P);
    Json depths = Json::array();
    for (long i = 1; i <= r.P.D; ++i) depths.push_back(r.depths[i]);
    j["depths"] = std::move(depths);
    Json coeffs = Json::array();
    for (size_t k = 0; k < r.coeff_text.size(); ++k) {
        Json e;
        e["degree"] = r.coeff_text[k].first;
        e["coefficient"] = r.coeff_text[k].second;
        e["valuation"] = valu_json(r.coeff_vals[k].second);
        coeffs.push_back(std::move(e));
    }
    j["coefficients"] = std::move(coeffs);
    j["tower"] = tower_json(r.tower);
    return j;
}

Json witt_json(const WittReport& r) {
    Json j = head_json("witt", r.P);
    j["iota_log"] = rat_json(r.iota_log);
    j["attained_degrees"] = r.attained;
    j["coordinate_valuations"] = degree_valu_array(r.coord_vals);
    j["tower"] = tower_json(r.tower);
    return j;
}

std::string radius_text(const InputPolynomial& P, const RadiusReport& r) {
    std::ostringstream os;
    os << head_text(P);
    os << "log_radius: " << rat_text(r.log_radius) << "\n";
    os << "attained at degrees: " << degree_list(r.attained) << "\n";
    os << "tilde valuations:\n";
    for (const auto& [i, v] : r.tilde_vals)
        os << "  v(e_" << i << ") = " << valu_text(v) << "\n";
    os << tower_text(r.tower) << "\n";
    return os.str();
}

std::string newton_text(const InputPolynomial& P, const RadiusReport& r) {
    std::ostringstream os;
    os << head_text(P);
    os << "newton vertices:";
    for (const auto& [x, y] : r.newton_vertices)
        os << " (" << rat_str(x) << ", " << rat_str(y) << ")";
    os << "\nmin_slope: " << rat_text(r.log_radius) << "\n";
    os << tower_text(r.tower) << "\n";
    return os.str();
}

std::string integrality_text(const InputPolynomial& P, const IntegralityReport& r) {
    std::ostringstream os;
    os << head_text(P);
    os << "mode: " << mode_name(r.mode) << "\n";
    os << "integral: " << (r.integral ? "yes" : "no") << "\n";
    if (r.witness) os << "witness degree: " << *r.witness << "\n";
    os << "tested degrees: " << degree_list(r.tested) << "\n";
    os << tower_text(r.tower) << "\n";
    return os.str();
}

std::string roc_point_text(const InputPolynomial& P, const std::string& point_text,
                           const RocPointReport& r) {
    std::ostringstream os;
    os << head_text(P);
    os << "point: " << point_text << "\n";
    os << "log_radius: " << rat_text(r.log_radius) << "\n";
    os << "contributing degrees: " << degree_list(r.contributing) << "\n";
    os << tower_text(r.tower) << "\n";
    return os.str();
}

std::string roc_generic_text(const InputPolynomial& P, const RocGenericReport& r) {
    std::ostringstream os;
    os << head_text(P);
    os << "generic log_r: " << rat_text(r.log_r) << "\n";
    os << "log_radius: " << rat_text(r.log_radius) << "\n";
    os << "contributing degrees: " << degree_list(r.contributing) << "\n";
    os << "gauss norms:\n";
    for (size_t k = 0; k < r.gauss_norms.size(); ++k)
        os << "  degree " << r.gauss_norms[k].first << ": " << rat_text(r.gauss_norms[k].second)
           << " (degree in a: " << r.degrees_in_a[k] << ")\n";
    os << tower_text(r.tower) << "\n";
    return os.str();
}

std::string oracle_text(const InputPolynomial& P, const OracleReport& r) {
    std::ostringstream os;
    os << head_text(P);
    os << "M: " << r.M << "\n";
    os << "arithmetic: " << (r.exact_path ? "exact rational" : "tower") << "\n";
    os << "bound: " << rat_text(r.bound) << "\n";
    os << "attained at degrees: " << degree_list(r.attained) << "\n";
    os << "first nonintegral coefficient: "
       << (r.first_nonintegral ? std::to_string(*r.first_nonintegral) : std::string("none"))
       << "\n";
    if (!r.exact_path) os << tower_text(r.tower) << "\n";
    return os.str();
}

std::string tilde_text(const TildeReport& r) {
    std::ostringstream os;
    os << head_text(r.P);
    os << "depths:";
    for (long i = 1; i <= r.P.D; ++i) os << " " << r.depths[i];
    os << "\ncoefficients:\n";
    for (size_t k = 0; k < r.coeff_text.size(); ++k)
        os << "  degree " << r.coeff_text[k].first << ": " << r.coeff_text[k].second
           << "  [v = " << valu_text(r.coeff_vals[k].second) << "]\n";
    os << tower_text(r.tower) << "\n";
    return os.str();
}

std::string witt_text(const WittReport& r) {
    std::ostringstream os;
    os << head_text(r.P);
    os << "iota_log: " << rat_text(r.iota_log) << "\n";
    os << "attained at degrees: " << degree_list(r.attained) << "\n";
    os << "coordinate valuations:\n";
    for (const auto& [n, v] : r.coord_vals)
        os << "  v(u_" << n << ") = " << valu_text(v) << "\n";
    os << tower_text(r.tower) << "\n";
    return os.str();
}

}  // namespace piexp

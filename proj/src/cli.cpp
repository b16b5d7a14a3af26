#include "piexp/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "piexp/errors.hpp"
#include "piexp/intutil.hpp"
#include "piexp/oracle.hpp"
#include "piexp/parse.hpp"
#include "piexp/radius.hpp"
#include "piexp/report.hpp"

namespace piexp {

namespace {

struct JobOptions {
    std::string sub;
    long p = 0;
    std::optional<long> prec;
    std::string mode = "full";
    std::string at;
    bool at_given = false;
    std::string generic_logr;
    bool logr_given = false;
    std::optional<long> M;
    bool json = false;
    std::string poly;
};

IntegralityMode mode_from_string(const std::string& s) {
    if (s == "full") return IntegralityMode::Full;
    if (s == "ppowers") return IntegralityMode::PPowers;
    return IntegralityMode::Monoid;
}

std::string render(const Json& j, bool json, const std::string& text) {
    return json ? j.dump(2) + "\n" : text;
}

int dispatch(const JobOptions& o, std::string& out) {
    if (!is_prime(o.p)) throw ParseError("p must be a prime number", 0);
    InputPolynomial P = parse_polynomial(o.poly, o.p);
    if (o.sub == "radius") {
        RadiusReport r = radius_log(P, o.prec);
        out = render(radius_json(P, r), o.json, radius_text(P, r));
    } else if (o.sub == "newton") {
        RadiusReport r = radius_log(P, o.prec, /*require_hull=*/true);
        out = render(newton_json(P, r), o.json, newton_text(P, r));
    } else if (o.sub == "tilde") {
        TildeReport r = tilde_report(P, o.prec);
        out = render(tilde_json(r), o.json, tilde_text(r));
    } else if (o.sub == "integrality") {
        IntegralityReport r = integrality_check(P, mode_from_string(o.mode), o.prec);
        out = render(integrality_json(P, r), o.json, integrality_text(P, r));
    } else if (o.sub == "roc") {
        if (o.at_given == o.logr_given)
            throw ParseError("roc needs exactly one of --at or --generic-logr", 0);
        if (o.at_given) {
            CoeffExpr pt = parse_coefficient(o.at);
            RocPointReport r = roc_at_point(P, pt, o.prec);
            out = render(roc_point_json(P, o.at, r), o.json, roc_point_text(P, o.at, r));
        } else {
            Rat lr = parse_rational(o.generic_logr);
            RocGenericReport r = roc_at_generic_radius(P, lr, o.prec);
            out = render(roc_generic_json(P, r), o.json, roc_generic_text(P, r));
        }
    } else if (o.sub == "oracle") {
        long M = o.M ? *o.M : default_scan_length(P);
        OracleReport r = empirical_radius_bound(P, M, o.prec);
        out = render(oracle_json(P, r), o.json, oracle_text(P, r));
    } else if (o.sub == "witt") {
        WittReport r = witt_report(P, o.prec);
        out = render(witt_json(r), o.json, witt_text(r));
    } else {
        throw InvariantError("unknown subcommand " + o.sub);
    }
    return EXIT_OK;
}

std::string read_stdin() {
    std::ostringstream os;
    std::string line;
    while (std::getline(std::cin, line)) os << line << " ";
    return os.str();
}

}  // namespace

std::vector<std::string> split_args(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_single = false, in_double = false, quoted = false;
    for (char c : line) {
        if (in_single) {
            if (c == '\'')
                in_single = false;
            else
                cur += c;
            continue;
        }
        if (in_double) {
            if (c == '"')
                in_double = false;
            else
                cur += c;
            continue;
        }
        if (c == '\'') {
            in_single = quoted = true;
            continue;
        }
        if (c == '"') {
            in_double = quoted = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty() || quoted) {
                out.push_back(cur);
                cur.clear();
                quoted = false;
            }
            continue;
        }
        cur += c;
    }
    if (!cur.empty() || quoted) out.push_back(cur);
    return out;
}

int run_job(const std::vector<std::string>& args, bool allow_stdin, std::string& out,
            std::string& err) {
    JobOptions o;
    CLI::App app{"exact p-adic radius of convergence of exp(P(T))", "piexp"};
    app.require_subcommand(1);
    const char* poly_help = "polynomial in T (stdin if omitted)";
    auto add_common = [&](CLI::App* s) {
        s->add_option("-p,--prime", o.p, "prime p")->required();
        s->add_option("--prec", o.prec, "working precision in p-digits")
            ->check(CLI::PositiveNumber);
        s->add_flag("--json", o.json, "emit a JSON report");
        s->add_option("poly", o.poly, poly_help);
    };
    add_common(app.add_subcommand("radius", "log_p of the radius of convergence of exp(P)"));
    add_common(app.add_subcommand("tilde", "rescaled coefficients a_i / pi_{d_i}"));
    CLI::App* integ = app.add_subcommand("integrality", "are all coefficients of exp(P) integral?");
    add_common(integ);
    integ->add_option("--mode", o.mode, "degrees to test")
        ->check(CLI::IsMember({"full", "ppowers", "monoid"}));
    CLI::App* roc = app.add_subcommand("roc", "radius of exp(P) expanded at another point");
    add_common(roc);
    roc->add_option("--at", o.at, "expansion point (coefficient expression)");
    roc->add_option("--generic-logr", o.generic_logr,
                    "log_p of the generic point's absolute value (rational)");
    add_common(app.add_subcommand("newton", "dual Newton polygon of the rescaled exponential"));
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force scan of exp(P) coefficients");
    add_common(oracle);
    oracle->add_option("-M,--degree-bound", o.M, "scan up to degree M")->check(CLI::PositiveNumber);
    add_common(app.add_subcommand("witt", "universal coordinates of the rescaled exponential"));

    std::vector<const char*> cargs;
    cargs.push_back("piexp");
    for (const auto& a : args) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
        CLI::App* sub = app.get_subcommands().at(0);
        o.sub = sub->get_name();
        o.at_given = o.sub == "roc" && sub->count("--at") > 0;
        o.logr_given = o.sub == "roc" && sub->count("--generic-logr") > 0;
        if (sub->count("poly") == 0) {
            if (!allow_stdin) throw ParseError("no polynomial given", 0);
            o.poly = read_stdin();
        }
        return dispatch(o, out);
    } catch (const CLI::CallForHelp&) {
        out = app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError& e) {
        err = std::string("usage error: ") + e.what();
        return EXIT_PARSE;
    } catch (const ParseError& e) {
        err = "parse error at byte " + std::to_string(e.pos) + ": " + e.what();
        return EXIT_PARSE;
    } catch (const PrecisionExhausted& e) {
        err = std::string("precision exhausted: ") + e.what();
        return EXIT_PRECISION;
    } catch (const InvariantError& e) {
        err = std::string("invariant violated: ") + e.what();
        return EXIT_INVARIANT;
    } catch (const std::exception& e) {
        err = std::string("internal error: ") + e.what();
        return EXIT_INVARIANT;
    }
}

namespace {

int run_batch(const std::string& file, bool force_json) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open batch file: " << file << "\n";
        return EXIT_PARSE;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    long n = static_cast<long>(lines.size());
    std::vector<std::string> outs(n), errs(n);
    std::vector<int> codes(n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < n; ++i) {
        std::vector<std::string> args = split_args(lines[i]);
        if (force_json) {
            bool has = false;
            for (const auto& a : args) has = has || a == "--json";
            if (!has) args.push_back("--json");
        }
        codes[i] = run_job(args, /*allow_stdin=*/false, outs[i], errs[i]);
    }
    int worst = EXIT_OK;
    if (force_json) {
        Json arr = Json::array();
        for (long i = 0; i < n; ++i) {
            if (codes[i] == EXIT_OK) {
                arr.push_back(Json::parse(outs[i]));
            } else {
                Json e;
                e["command"] = "error";
                e["exit_code"] = codes[i];
                e["message"] = errs[i];
                e["input"] = lines[i];
                arr.push_back(std::move(e));
            }
            worst = std::max(worst, codes[i]);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (long i = 0; i < n; ++i) {
            if (codes[i] == EXIT_OK)
                std::cout << outs[i];
            else
                std::cerr << "job " << (i + 1) << ": " << errs[i] << "\n";
            worst = std::max(worst, codes[i]);
        }
    }
    return worst;
}

}  // namespace

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    // Batch mode bypasses the per-job parser: piexp --batch FILE [--json]
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] != "--batch") continue;
        if (i + 1 >= args.size()) {
            std::cerr << "--batch needs a file argument\n";
            return EXIT_PARSE;
        }
        std::string file = args[i + 1];
        bool json = false;
        bool ok = true;
        for (size_t j = 0; j < args.size(); ++j) {
            if (j == i || j == i + 1) continue;
            if (args[j] == "--json")
                json = true;
            else
                ok = false;
        }
        if (!ok) {
            std::cerr << "batch mode accepts only --json in addition to --batch FILE\n";
            return EXIT_PARSE;
        }
        return run_batch(file, json);
    }
    std::string out, err;
    int code = run_job(args, /*allow_stdin=*/true, out, err);
    if (!out.empty()) std::cout << out;
    if (!err.empty()) std::cerr << err << "\n";
    return code;
}

}  // namespace piexp

#ifndef RPGC_CLI_HPP
#define RPGC_CLI_HPP

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rpgc/bounds.hpp"
#include "rpgc/runtime.hpp"
#include "rpgc/tables.hpp"

namespace rpgc::cli {

// q is given as "p", "p^m", or a plain prime power (49 means 7^2).
inline std::pair<uint32_t, uint32_t> parse_q(const std::string& s) {
    const auto caret = s.find('^');
    auto to_u32 = [&](const std::string& part) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::SchemaViolation, "cannot parse '" + s + "' as a prime power");
        return static_cast<uint32_t>(std::stoul(part));
    };
    if (caret != std::string::npos) return {to_u32(s.substr(0, caret)), to_u32(s.substr(caret + 1))};
    const uint32_t v = to_u32(s);
    if (v < 2) fail(ErrorCode::NotPrime, "q must be at least 2");
    for (uint32_t p = 2; p <= v; ++p) {
        if (!detail::is_small_prime(p)) continue;
        if (v % p) continue;
        uint32_t m = 0;
        uint32_t w = v;
        while (w % p == 0) {
            w /= p;
            ++m;
        }
        if (w != 1) fail(ErrorCode::NotPrime, "'" + s + "' is not a prime power");
        return {p, m};
    }
    fail(ErrorCode::NotPrime, "'" + s + "' is not a prime power");
}

inline FieldPtr field_from_args(const std::string& qspec, const std::string& modulus_csv) {
    auto [p, m] = parse_q(qspec);
    std::vector<uint32_t> modulus;
    if (!modulus_csv.empty()) {
        std::stringstream ss(modulus_csv);
        std::string part;
        while (std::getline(ss, part, ','))
            modulus.push_back(static_cast<uint32_t>(std::stoul(part)));
    }
    return field_make(p, m, modulus);
}

inline Strategy strategy_from_arg(const std::string& s) {
    auto st = strategy_from_name(s);
    if (!st) fail(ErrorCode::SchemaViolation, "unknown strategy '" + s + "' (use deg, div or opt)");
    return *st;
}

struct TableRow {
    uint64_t q = 0;
    uint32_t n = 0;
    Strategy strategy = Strategy::Deg;
    uint64_t count = 0;
    std::optional<uint64_t> reference;
    bool match = true;
};

// One row per extension degree. Deg must hit its reference exactly; Opt must
// not exceed it (a strictly smaller count is an improvement, not a failure).
inline std::vector<TableRow> cmd_table(const FieldConfig& field, uint32_t nmin, uint32_t nmax, Strategy s,
                                       uint32_t umax = 3) {
    if (nmin < 2 || nmin > nmax) fail(ErrorCode::DegreeMismatch, "need 2 <= nmin <= nmax");
    std::vector<TableRow> rows;
    for (uint32_t n = nmin; n <= nmax; ++n) {
        TableRow row;
        row.q = field.q();
        row.n = n;
        row.strategy = s;
        row.count = bilinear_complexity(field, n, s, umax);
        row.reference = table_reference(row.q, n, s);
        if (row.reference)
            row.match = s == Strategy::Opt ? row.count <= *row.reference : row.count == *row.reference;
        rows.push_back(row);
    }
    return rows;
}

inline std::string ext_to_wire(const CompiledAlgorithm& alg, const ExtElement& e) {
    std::string s;
    for (uint32_t i = 0; i < alg.n; ++i) {
        if (i) s += ',';
        s += elem_to_wire(e.coeffs[i]);
    }
    return s;
}

namespace detail_cli {

inline std::string format_double(double v) {
    std::ostringstream ss;
    ss << std::setprecision(10) << v;
    return ss.str();
}

}  // namespace detail_cli

inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chudnovsky-type multiplication algorithms on the projective line"};
    app.require_subcommand(1);

    std::string qspec, modulus_csv, strategy_arg = "deg", outfile, qpoly_arg;
    uint32_t n = 0, nmin = 0, nmax = 0, d = 0, umax = 3, trials = 100;
    uint64_t seed = 1;
    bool as_json = false;
    std::string algfile, x_arg, y_arg;

    auto add_field_opts = [&](CLI::App* sub) {
        sub->add_option("--modulus", modulus_csv, "extension modulus digits over F_p, low-to-high");
    };

    auto* c_places = app.add_subcommand("places", "list the places of one degree");
    c_places->add_option("q", qspec)->required();
    c_places->add_option("d", d)->required();
    add_field_opts(c_places);

    auto* c_count = app.add_subcommand("count", "print d,B_d for d = 1..dmax");
    c_count->add_option("q", qspec)->required();
    c_count->add_option("dmax", d)->required();
    add_field_opts(c_count);

    auto* c_spec = app.add_subcommand("spec", "print the interpolation point list");
    c_spec->add_option("q", qspec)->required();
    c_spec->add_option("n", n)->required();
    c_spec->add_option("--strategy", strategy_arg);
    c_spec->add_option("--umax", umax);
    add_field_opts(c_spec);

    auto* c_compile = app.add_subcommand("compile", "compile a multiplication algorithm to JSON");
    c_compile->add_option("q", qspec)->required();
    c_compile->add_option("n", n)->required();
    c_compile->add_option("--strategy", strategy_arg);
    c_compile->add_option("--umax", umax);
    c_compile->add_option("-Q", qpoly_arg, "modulus of F_{q^n} in wire format");
    c_compile->add_option("-o", outfile, "output file (stdout when omitted)");
    add_field_opts(c_compile);

    auto* c_mul = app.add_subcommand("mul", "multiply two elements with a compiled algorithm");
    c_mul->add_option("algorithm", algfile)->required();
    c_mul->add_option("x", x_arg)->required();
    c_mul->add_option("y", y_arg)->required();

    auto* c_verify = app.add_subcommand("verify", "compare compiled products against the oracle");
    c_verify->add_option("q", qspec)->required();
    c_verify->add_option("n", n)->required();
    c_verify->add_option("--strategy", strategy_arg);
    c_verify->add_option("--trials", trials);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--umax", umax);
    add_field_opts(c_verify);

    auto* c_table = app.add_subcommand("table", "bilinear counts against the embedded references");
    c_table->add_option("q", qspec)->required();
    c_table->add_option("nmin", nmin)->required();
    c_table->add_option("nmax", nmax)->required();
    c_table->add_option("--strategy", strategy_arg);
    c_table->add_option("--umax", umax);
    add_field_opts(c_table);

    auto* c_bound = app.add_subcommand("bound", "complexity bounds for one extension");
    c_bound->add_option("q", qspec)->required();
    c_bound->add_option("n", n)->required();
    c_bound->add_option("--umax", umax);
    c_bound->add_flag("--json", as_json);
    add_field_opts(c_bound);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*c_places) {
            auto field = field_from_args(qspec, modulus_csv);
            for (const auto& place : enumerate_places(*field, d)) out << place_to_wire(place) << "\n";
            return 0;
        }
        if (*c_count) {
            auto field = field_from_args(qspec, modulus_csv);
            for (uint32_t k = 1; k <= d; ++k) out << k << "," << count_places(*field, k) << "\n";
            return 0;
        }
        if (*c_spec) {
            auto field = field_from_args(qspec, modulus_csv);
            const Strategy s = strategy_from_arg(strategy_arg);
            const InterpolationSpec spec = build_spec(*field, n, s, umax);
            for (const auto& pt : spec.points)
                out << place_to_wire(pt.place) << " u=" << pt.u << " weight=" << pt.weight()
                    << " cost=" << point_cost(*field, pt, s, umax) << "\n";
            out << "total weight=" << spec.total_weight() << " count=" << spec_cost(spec, umax) << "\n";
            return 0;
        }
        if (*c_compile) {
            auto field = field_from_args(qspec, modulus_csv);
            const Strategy s = strategy_from_arg(strategy_arg);
            std::optional<Poly> Q;
            if (!qpoly_arg.empty()) Q = poly_from_wire(*field, qpoly_arg);
            const CompiledAlgorithm alg = compile(field, n, s, umax, Q);
            const std::string doc = export_json(alg);
            if (outfile.empty()) {
                out << doc << "\n";
            } else {
                std::ofstream f(outfile);
                if (!f) fail(ErrorCode::SchemaViolation, "cannot write '" + outfile + "'");
                f << doc << "\n";
            }
            return 0;
        }
        if (*c_mul) {
            std::ifstream f(algfile);
            if (!f) fail(ErrorCode::SchemaViolation, "cannot read '" + algfile + "'");
            std::stringstream buf;
            buf << f.rdbuf();
            const CompiledAlgorithm alg = import_json(buf.str());
            const ExtElement x = ext_from_poly(alg, poly_from_wire(*alg.field, x_arg));
            const ExtElement y = ext_from_poly(alg, poly_from_wire(*alg.field, y_arg));
            const auto [z, trace] = multiply(alg, x, y);
            out << ext_to_wire(alg, z) << "\n" << trace.total << "\n";
            return 0;
        }
        if (*c_verify) {
            auto field = field_from_args(qspec, modulus_csv);
            const Strategy s = strategy_from_arg(strategy_arg);
            const VerifyReport report = verify(field, n, s, trials, seed, umax);
            out << "q=" << field->q() << " n=" << n << " strategy=" << strategy_name(s)
                << " trials=" << report.trials << " seed=" << report.seed
                << " count=" << report.bilinear_count << " result=" << (report.pass ? "PASS" : "FAIL")
                << "\n";
            if (!report.pass) out << report.failure << "\n";
            return report.pass ? 0 : 1;
        }
        if (*c_table) {
            auto field = field_from_args(qspec, modulus_csv);
            const Strategy s = strategy_from_arg(strategy_arg);
            const auto rows = cmd_table(*field, nmin, nmax, s, umax);
            out << "q,n,strategy,count,reference,match\n";
            bool all_match = true;
            for (const auto& row : rows) {
                out << row.q << "," << row.n << "," << strategy_name(row.strategy) << "," << row.count
                    << ",";
                if (row.reference) out << *row.reference;
                out << "," << (row.match ? "true" : "false") << "\n";
                all_match = all_match && row.match;
                if (row.reference && row.count < *row.reference)
                    err << "note: q=" << row.q << " n=" << row.n << " " << strategy_name(row.strategy)
                        << " count " << row.count << " improves on the reference " << *row.reference
                        << "\n";
            }
            return all_match ? 0 : 1;
        }
        if (*c_bound) {
            auto field = field_from_args(qspec, modulus_csv);
            const BoundReport r = bound_report(*field, n, umax);
            if (as_json) {
                nlohmann::json j;
                j["q"] = r.q;
                j["n"] = r.n;
                j["count_deg"] = r.count_deg;
                if (r.count_div) j["count_div"] = *r.count_div;
                j["count_opt"] = r.count_opt;
                j["lower_bound"] = r.lower;
                j["uniform_bound"] = r.uniform;
                j["iterated_log"] = r.logstar;
                j["within_bounds"] = r.within_bounds;
                out << j.dump(2) << "\n";
            } else {
                out << "q               " << r.q << "\n";
                out << "n               " << r.n << "\n";
                out << "count_deg       " << r.count_deg << "\n";
                out << "count_div       " << (r.count_div ? std::to_string(*r.count_div) : "-") << "\n";
                out << "count_opt       " << r.count_opt << "\n";
                out << "lower_bound     " << r.lower << "\n";
                out << "uniform_bound   " << detail_cli::format_double(r.uniform) << "\n";
                out << "iterated_log    " << r.logstar << "\n";
                out << "within_bounds   " << (r.within_bounds ? "true" : "false") << "\n";
            }
            return r.within_bounds ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n" << app.help();
    return 2;
}

inline int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return dispatch(std::move(args), out, err);
}

}  // namespace rpgc::cli

#endif

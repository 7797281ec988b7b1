// Copyright 2026 The wtrap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WTRAP_TOOLS_CLI_HPP
#define WTRAP_TOOLS_CLI_HPP

// Command-line front end:
//
//   wtrap eval          --fn erf --re 1 --im 0
//   wtrap params        [--eps 1e-8]
//   wtrap accuracy-map  --fn w <grid> --reference ref.csv --out map.csv
//   wtrap bench         --fn w <grid> --reps 100
//   wtrap selftest
//
// Exit codes: 0 ok, 1 selftest failure, 2 usage error, 3 data mismatch.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wtrap/bench.hpp"
#include "wtrap/reference.hpp"
#include "wtrap/selftest.hpp"
#include "wtrap/wtrap.hpp"

namespace wtrap::cli {

enum ExitCode : int { ok = 0, selftest_failed = 1, usage = 2, data_mismatch = 3 };

/// 17 significant digits, exponent without padding or '+': 1.0000000000000000e0.
inline std::string format_sci17(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    std::string s(buf);
    const std::size_t e = s.find('e');
    const int exponent = std::stoi(s.substr(e + 1));
    return s.substr(0, e + 1) + std::to_string(exponent);
}

struct CommonOptions {
    std::string fn = "w";
    double eps = deps;
    bool use_asymptotic = false;
    bool use_maclaurin = false;
    std::optional<double> h_override;
};

inline void add_common(CLI::App& cmd, CommonOptions& o, bool with_fn)
{
    if (with_fn) {
        cmd.add_option("--fn", o.fn, "Function")
            ->check(CLI::IsMember({"w", "imw", "erf", "erfc", "erfcx", "erfi", "dawson"}))
            ->capture_default_str();
    }
    cmd.add_option("--eps", o.eps, "Target relative accuracy")->capture_default_str();
    cmd.add_flag("--use-asymptotic", o.use_asymptotic, "Asymptotic series for |z| > 30");
    cmd.add_flag("--use-maclaurin", o.use_maclaurin, "Odd series near the origin on the real axis");
    cmd.add_option("--h-override", o.h_override, "Force the node spacing (debugging)");
}

inline void add_grid(CLI::App& cmd, GridSpec& g)
{
    cmd.add_option("--re-min", g.re_min)->required();
    cmd.add_option("--re-max", g.re_max)->required();
    cmd.add_option("--im-min", g.im_min)->required();
    cmd.add_option("--im-max", g.im_max)->required();
    cmd.add_option("--nre", g.n_re)->required();
    cmd.add_option("--nim", g.n_im)->required();
}

// Throws std::domain_error on a bad eps or step.
inline EvalParams make_params(const CommonOptions& o)
{
    if (o.h_override) {
        return build_params_with_step(o.eps, *o.h_override, o.use_asymptotic, o.use_maclaurin);
    }
    return build_params(o.eps, o.use_asymptotic, o.use_maclaurin);
}

inline FunctionKind kind_of(const CommonOptions& o)
{
    return *parse_kind(o.fn);
}

inline int cmd_eval(const CommonOptions& o, double re, double im, std::ostream& out, std::ostream& err)
{
    if (!std::isfinite(re) || !std::isfinite(im)) {
        err << "error: z must be finite\n";
        return usage;
    }
    const EvalParams p = make_params(o);
    const FunctionKind kind = kind_of(o);
    std::complex<double> v;
    if (im == 0.0 && kind != FunctionKind::W) {
        v = {evaluate_real(kind, re, p), 0.0};
    } else {
        v = evaluate(kind, {re, im}, p);
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        err << "warning: result overflows binary64\n";
    }
    out << format_sci17(v.real()) << ' ' << format_sci17(v.imag()) << '\n';
    return ok;
}

inline int cmd_params(const CommonOptions& o, std::ostream& out)
{
    const EvalParams p = make_params(o);
    auto real = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    out << "eps=" << real(p.eps) << '\n'
        << "h=" << real(p.h) << '\n'
        << "N=" << p.n_terms << '\n'
        << "re_cut=" << real(p.re_cut) << '\n'
        << "g=" << real(p.g_cut) << '\n'
        << "strip_height=" << real(p.strip_height) << '\n'
        << "use_asymptotic=" << (p.use_asymptotic ? 1 : 0) << '\n'
        << "asym_radius=" << real(p.asym_radius) << '\n'
        << "asym_terms=" << p.asym_terms << '\n'
        << "use_maclaurin=" << (p.use_maclaurin ? 1 : 0) << '\n'
        << "maclaurin_radius=" << real(p.maclaurin_radius) << '\n'
        << "maclaurin_terms=" << p.maclaurin_terms << '\n';
    return ok;
}

inline int cmd_accuracy_map(const CommonOptions& o, const GridSpec& grid, const std::string& ref_path,
                            const std::string& out_path, std::ostream& out, std::ostream& err)
{
    grid.validate();
    const EvalParams p = make_params(o);
    std::ifstream in(ref_path, std::ios::binary);
    if (!in) {
        err << "error: cannot open reference file " << ref_path << '\n';
        return usage;
    }
    ReferenceTable table;
    std::vector<AccuracyRow> rows;
    try {
        table = ReferenceTable::read(in);
        rows = accuracy_map(kind_of(o), grid, table, p);
    } catch (const ReferenceMismatch& e) {
        err << "error: " << e.what() << '\n';
        return data_mismatch;
    } catch (const std::exception& e) {
        err << "error: " << ref_path << ": " << e.what() << '\n';
        return data_mismatch;
    }
    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) {
        err << "error: cannot write " << out_path << '\n';
        return usage;
    }
    write_accuracy_csv(csv, rows);
    csv.close();
    const AccuracySummary s = summarize(rows);
    out << "mean=" << format_relerr(s.mean) << " max=" << format_relerr(s.max) << " n=" << s.n << '\n';
    return ok;
}

inline int cmd_bench(const CommonOptions& o, const GridSpec& grid, int reps, std::ostream& out, std::ostream& err)
{
    if (reps < 1) {
        err << "error: --reps must be at least 1\n";
        return usage;
    }
    grid.validate();
    const EvalParams p = make_params(o);
    const BenchReport r = run_bench(kind_of(o), grid, reps, p);
    char buf[96];
    for (const BenchBucket& b : r.buckets) {
        std::snprintf(buf, sizeof buf, "%.3f", b.ns_per_call);
        out << "region=" << to_string(b.region) << " ns_per_call=" << buf << " n=" << b.n << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.6f", r.total_seconds);
    out << "total_seconds=" << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.3f", r.ns_per_call);
    out << "ns_per_call=" << buf << " calls=" << r.calls << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", r.checksum);
    out << "checksum=" << buf << '\n';
    return ok;
}

inline int cmd_selftest(const CommonOptions& o, std::ostream& out)
{
    const EvalParams p = make_params(o);
    bool all = true;
    char buf[160];
    for (const CheckResult& c : run_selftest(p)) {
        std::snprintf(buf, sizeof buf, "%s %s worst=%.3g tol=%.3g", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                      c.worst, c.tolerance);
        out << buf << '\n';
        all = all && c.passed;
    }
    out << (all ? "selftest passed" : "selftest FAILED") << '\n';
    return all ? ok : selftest_failed;
}

/// Runs the tool on `args` (without the program name).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Faddeeva function and relatives by the trapezoidal rule"};
    app.name("wtrap");
    app.require_subcommand(1);

    CommonOptions common;
    GridSpec grid;
    double re = 0.0;
    double im = 0.0;
    std::string ref_path;
    std::string out_path;
    int reps = 1;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate at one point");
    add_common(*eval, common, true);
    eval->add_option("--re", re, "Re z")->required();
    eval->add_option("--im", im, "Im z")->required();

    CLI::App* params = app.add_subcommand("params", "Print the tuning constants");
    add_common(*params, common, false);

    CLI::App* amap = app.add_subcommand("accuracy-map", "Relative error against a reference table");
    add_common(*amap, common, true);
    add_grid(*amap, grid);
    amap->add_option("--reference", ref_path, "Reference CSV")->required();
    amap->add_option("--out", out_path, "Output CSV")->required();

    CLI::App* bench = app.add_subcommand("bench", "Time evaluation over a grid");
    add_common(*bench, common, true);
    add_grid(*bench, grid);
    bench->add_option("--reps", reps, "Repetitions")->capture_default_str();

    CLI::App* selftest = app.add_subcommand("selftest", "Reference-free identity checks");
    add_common(*selftest, common, false);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (eval->parsed()) {
            return cmd_eval(common, re, im, out, err);
        }
        if (params->parsed()) {
            return cmd_params(common, out);
        }
        if (amap->parsed()) {
            return cmd_accuracy_map(common, grid, ref_path, out_path, out, err);
        }
        if (bench->parsed()) {
            return cmd_bench(common, grid, reps, out, err);
        }
        if (selftest->parsed()) {
            return cmd_selftest(common, out);
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace wtrap::cli

#endif // WTRAP_TOOLS_CLI_HPP

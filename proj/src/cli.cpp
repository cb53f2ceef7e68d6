#include "logcave/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logcave/errors.hpp"
#include "logcave/pascal.hpp"
#include "logcave/region.hpp"
#include "logcave/textio.hpp"
#include "logcave/witness.hpp"

namespace logcave {

namespace {

// Malformed flag values surface as usage errors (exit 64) naming the flag,
// unlike domain errors (exit 65) where the text was valid but the named
// value is rejected by the operation.
struct UsageFailure {
    std::string message;
};

Seq seq_flag(const char* flag, const std::string& text) {
    try {
        return parse_seq(text);
    } catch (const parse_error& e) {
        throw UsageFailure{std::string(flag) + ": " + e.what()};
    }
}

QField qf_flag(const char* flag, const std::string& text) {
    try {
        return parse_qf(text);
    } catch (const parse_error& e) {
        throw UsageFailure{std::string(flag) + ": " + e.what()};
    }
}

Rat rat_flag(const char* flag, const std::string& text) {
    try {
        return parse_rat(text);
    } catch (const parse_error& e) {
        throw UsageFailure{std::string(flag) + ": " + e.what()};
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::certified:
            return 0;
        case Verdict::refuted:
            return 1;
        case Verdict::inconclusive:
            return 2;
    }
    return 70;
}

int outcome_exit(OrbitScan::Outcome o) {
    switch (o) {
        case OrbitScan::Outcome::reached:
            return 0;
        case OrbitScan::Outcome::refuted:
            return 1;
        case OrbitScan::Outcome::not_reached:
            return 2;
    }
    return 70;
}

Json seq_to_json(const Seq& s) {
    Json arr = Json::array();
    for (long k = 0; k < s.size(); ++k) {
        arr.push_back(format_qf(s.at(k)));
    }
    return arr;
}

// ---- apply ----------------------------------------------------------------

struct ApplyOpts {
    std::string seq;
    std::string r = "1";
    std::string format = "text";
    long iters = 1;
};

int do_apply(const ApplyOpts& o, std::ostream& out) {
    const Seq s = seq_flag("--seq", o.seq);
    const QField r = qf_flag("--r", o.r);
    const Seq result = iterate_lr(s, r, o.iters);
    if (o.format == "json") {
        out << Json{{"seq", seq_to_json(result)}}.dump() << "\n";
    } else {
        out << "{" << format_seq(result) << "}\n";
    }
    return 0;
}

// ---- check ----------------------------------------------------------------

struct CheckOpts {
    std::string seq;
    std::string r = "1";
    std::string format = "text";
    long folds = 0;
};

int do_check(const CheckOpts& o, std::ostream& out) {
    const Seq s = seq_flag("--seq", o.seq);
    const QField r = qf_flag("--r", o.r);
    if (o.folds == 0) {
        const LcVerdict v = is_r_factor_lc(s, r);
        if (o.format == "json") {
            Json j{{"ok", v.ok}, {"fail_index", Json(nullptr)}};
            if (!v.ok) {
                j["fail_index"] = v.fail_index;
            }
            out << j.dump() << "\n";
        } else if (v.ok) {
            out << "factor-r log-concave: yes\n";
        } else {
            out << "factor-r log-concave: no (fails at index " << v.fail_index << ")\n";
        }
        return v.ok ? 0 : 1;
    }
    const FoldVerdict f = is_ifold_lc(s, r, o.folds);
    if (o.format == "json") {
        Json j{{"ok", f.ok}, {"fail_iteration", Json(nullptr)}, {"fail_index", Json(nullptr)}};
        if (!f.ok) {
            j["fail_iteration"] = f.fail_iteration;
            j["fail_index"] = f.fail_index;
        }
        out << j.dump() << "\n";
    } else if (f.ok) {
        out << "nonnegative through " << o.folds << " folds: yes\n";
    } else {
        out << "nonnegative through " << o.folds << " folds: no (iteration "
            << f.fail_iteration << ", index " << f.fail_index << ")\n";
    }
    return f.ok ? 0 : 1;
}

// ---- certify / compare ----------------------------------------------------

struct CertifyOpts {
    std::string seq;
    std::string criterion = "r0";
    std::string step = "classic";
    long max_iters = 0;
};

int do_certify(const CertifyOpts& o, std::ostream& out) {
    const Seq s = seq_flag("--seq", o.seq);
    if (o.criterion == "r0" || o.step == "generalized") {
        const QField constant = o.criterion == "r0" ? r0() : r1();
        const QField step = o.step == "classic" ? QField(Rat(1)) : constant;
        const Certificate cert = certify_infinite(s, constant, step, o.max_iters);
        out << certificate_to_json(cert).dump() << "\n";
        return verdict_exit(cert.verdict);
    }
    // The smaller constant along the classic orbit: a criterion-reachability
    // report rather than a soundness verdict, since that constant sits below
    // the classic step's preservation threshold.
    const OrbitScan scan = scan_orbit(s, r1(), QField(Rat(1)), o.max_iters);
    Json j = orbit_scan_to_json(scan);
    j["criterion"] = "r1_generalized";
    j["step"] = "classic";
    j["r"] = format_qf(r1());
    out << j.dump() << "\n";
    return outcome_exit(scan.outcome);
}

struct CompareOpts {
    std::string seq;
    long max_iters = 0;
};

int do_compare(const CompareOpts& o, std::ostream& out) {
    const Seq s = seq_flag("--seq", o.seq);
    const CompareReport rep = compare_criteria(s, o.max_iters);
    out << Json{{"with_r0", orbit_scan_to_json(rep.with_r0)},
                {"with_r1", orbit_scan_to_json(rep.with_r1)}}
               .dump()
        << "\n";
    if (rep.with_r0.outcome == OrbitScan::Outcome::refuted ||
        rep.with_r1.outcome == OrbitScan::Outcome::refuted) {
        return 1;
    }
    if (rep.with_r0.outcome == OrbitScan::Outcome::reached &&
        rep.with_r1.outcome == OrbitScan::Outcome::reached) {
        return 0;
    }
    return 2;
}

// ---- region ---------------------------------------------------------------

struct RegionCheckOpts {
    std::string r;
    std::string parity = "even";
    std::string point;
    std::string format = "text";
};

int do_region_check(const RegionCheckOpts& o, std::ostream& out) {
    const Seq coords = seq_flag("--point", o.point);
    RegionPoint p;
    p.coords = coords.values();
    p.parity = o.parity == "odd" ? Parity::odd : Parity::even;
    const SideReport side = correct_side(p, qf_flag("--r", o.r));
    if (o.format == "json") {
        Json surfaces = Json::array();
        for (bool ok : side.per_surface) {
            surfaces.push_back(ok);
        }
        out << Json{{"member", side.member}, {"surfaces", surfaces}}.dump() << "\n";
    } else if (side.member) {
        out << "member\n";
    } else {
        long first = 0;
        while (side.per_surface[static_cast<std::size_t>(first)]) {
            ++first;
        }
        out << "not a member (first failing surface " << first << ")\n";
    }
    return side.member ? 0 : 1;
}

struct BoundaryOpts {
    std::string r;
    std::string parity = "even";
    long n = 1;
    long samples = 100;
    std::uint64_t seed = 0;
};

int do_boundary(const BoundaryOpts& o, std::ostream& out) {
    if (o.n != 1) {
        throw UsageFailure{"--n: boundary sampling emits the planar case only (n = 1)"};
    }
    const Rat r = rat_flag("--r", o.r);
    const Parity parity = o.parity == "odd" ? Parity::odd : Parity::even;
    std::mt19937_64 gen(o.seed);
    std::uniform_int_distribution<long> thousandths(2000, 12000);
    out << "x,d1,coord0,coord1,surface\n";
    for (long i = 0; i < o.samples; ++i) {
        HParams hp;
        hp.r = r;
        hp.n = 1;
        hp.parity = parity;
        hp.surface = i % 2;
        hp.x = make_rat(thousandths(gen), 1000);
        const RegionPoint pt = hypersurface_point(hp);
        const DecomposeResult d = decompose(pt);
        const double mid = (d.gaps[0].lo + d.gaps[0].hi) / 2.0;
        out << format_rat(hp.x) << "," << fmt_double(mid) << ","
            << format_qf(pt.coords[0]) << "," << format_qf(pt.coords[1]) << ","
            << hp.surface << "\n";
    }
    return 0;
}

// ---- witness --------------------------------------------------------------

struct WitnessOpts {
    std::string scheme = "pentagonal";
    std::string r;
    std::string c;
    std::string parity = "even";
    std::string a;  // empty: defaulted from the rounded lower bound plus one
    long n = 1;
};

int do_witness_build(const WitnessOpts& o, std::ostream& out) {
    WitnessSpec spec;
    spec.r = rat_flag("--r", o.r);
    spec.C = rat_flag("--C", o.c);
    spec.n = o.n;
    spec.parity = o.parity == "odd" ? Parity::odd : Parity::even;
    spec.scheme = o.scheme == "triangular" ? Scheme::triangular : Scheme::pentagonal;
    spec.a = o.a.empty() ? Rat(a_bound(spec) + 1) : rat_flag("--a", o.a);

    const SymSeq w = build_witness(spec);
    RegionPoint pt;
    pt.coords = w.core;
    pt.parity = spec.parity;
    const SideReport side = correct_side(pt, QField(spec.r));
    Json surfaces = Json::array();
    for (bool ok : side.per_surface) {
        surfaces.push_back(ok);
    }
    out << Json{{"witness", symseq_to_json(w)},
                {"a", format_rat(spec.a)},
                {"a_bound", format_qf(a_bound_exact(spec))},
                {"member", side.member},
                {"surfaces", surfaces}}
               .dump()
        << "\n";
    return side.member ? 0 : 1;
}

// ---- pascal ---------------------------------------------------------------

struct PascalOpts {
    long from = 0;
    long to = 0;
    long max_iters = 0;
    std::string mode = "both";
    std::string out_path;
    bool csv = false;
    bool timings = false;
};

std::string pascal_csv(const RangeReport& rep, bool timings) {
    std::string text = timings ? "n,r0_iters,r1_iters,verdicts,wall_ms\n"
                               : "n,r0_iters,r1_iters,verdicts\n";
    for (const RowReport& row : rep.rows) {
        std::string verdicts;
        auto add_verdict = [&verdicts](const std::string& part) {
            if (!verdicts.empty()) {
                verdicts += ";";
            }
            verdicts += part;
        };
        std::string r0_iters;
        std::string r1_iters;
        if (row.classic) {
            r0_iters = std::to_string(row.classic->iterations_applied);
            add_verdict("classic:" + certificate_to_json(*row.classic)["verdict"]
                                         .get<std::string>());
        }
        if (row.comparative) {
            r1_iters = std::to_string(row.comparative->iterations);
            add_verdict("comparative:" + orbit_scan_to_json(*row.comparative)["outcome"]
                                             .get<std::string>());
        }
        if (row.generalized) {
            add_verdict("generalized:" + certificate_to_json(*row.generalized)["verdict"]
                                             .get<std::string>());
        }
        text += std::to_string(row.n) + "," + r0_iters + "," + r1_iters + "," + verdicts;
        if (timings) {
            text += "," + fmt_double(row.wall_ms);
        }
        text += "\n";
    }
    return text;
}

int do_pascal_verify(const PascalOpts& o, std::ostream& out) {
    RowMode mode = RowMode::both;
    if (o.mode == "r0") {
        mode = RowMode::r0;
    } else if (o.mode == "r1") {
        mode = RowMode::r1;
    }
    const RangeReport rep = verify_range(o.from, o.to, mode, o.max_iters);

    std::string payload;
    if (o.csv) {
        payload = pascal_csv(rep, o.timings);
    } else {
        Json arr = Json::array();
        for (const RowReport& row : rep.rows) {
            arr.push_back(row_report_to_json(row, o.timings));
        }
        payload = arr.dump() + "\n";
    }
    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path);
        if (!file) {
            throw UsageFailure{"--out: cannot open \"" + o.out_path + "\" for writing"};
        }
        file << payload;
        out << "wrote " << rep.rows.size() << " row reports to " << o.out_path;
        if (o.timings) {
            out << " (" << fmt_double(rep.total_ms) << " ms)";
        }
        out << "\n";
    } else {
        out << payload;
    }

    bool any_refuted = false;
    bool any_unfinished = false;
    for (const RowReport& row : rep.rows) {
        if (row.classic) {
            any_refuted |= row.classic->verdict == Verdict::refuted;
            any_unfinished |= row.classic->verdict == Verdict::inconclusive;
        }
        if (row.comparative) {
            any_refuted |= row.comparative->outcome == OrbitScan::Outcome::refuted;
            any_unfinished |= row.comparative->outcome == OrbitScan::Outcome::not_reached;
        }
        // The generalized component is informational: its refutations past
        // row three are the expected recorded outcome, not a failure of the
        // batch claim.
    }
    if (any_refuted) {
        return 1;
    }
    return any_unfinished ? 2 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for generalized factor-r log-concavity"};
    app.name("logcave");
    app.require_subcommand(1);

    ApplyOpts apply_opts;
    CLI::App* apply_cmd =
        app.add_subcommand("apply", "Apply the step operator to a sequence");
    apply_cmd->add_option("--seq", apply_opts.seq, "comma-separated sequence")->required();
    apply_cmd->add_option("--r", apply_opts.r, "step factor (default 1)");
    apply_cmd->add_option("--iters", apply_opts.iters, "number of applications")
        ->check(CLI::NonNegativeNumber);
    apply_cmd->add_option("--format", apply_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CheckOpts check_opts;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Exact factor-r log-concavity predicate");
    check_cmd->add_option("--seq", check_opts.seq, "comma-separated sequence")->required();
    check_cmd->add_option("--r", check_opts.r, "factor (default 1)");
    check_cmd->add_option("--folds", check_opts.folds,
                          "instead check nonnegativity through this many folds")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--format", check_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CertifyOpts certify_opts;
    certify_opts.max_iters = default_max_iters();
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "Certify infinite log-concavity via a criterion");
    certify_cmd->add_option("--seq", certify_opts.seq, "comma-separated sequence")
        ->required();
    certify_cmd->add_option("--criterion", certify_opts.criterion, "r0 or r1")
        ->check(CLI::IsMember({"r0", "r1"}));
    certify_cmd
        ->add_option("--step", certify_opts.step,
                     "orbit step: classic (factor 1) or generalized (the criterion factor)")
        ->check(CLI::IsMember({"classic", "generalized"}));
    certify_cmd->add_option("--max-iters", certify_opts.max_iters, "iteration budget")
        ->check(CLI::NonNegativeNumber);

    CompareOpts compare_opts;
    compare_opts.max_iters = default_max_iters();
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Scan one classic orbit against both criteria");
    compare_cmd->add_option("--seq", compare_opts.seq, "comma-separated sequence")
        ->required();
    compare_cmd->add_option("--max-iters", compare_opts.max_iters, "iteration budget")
        ->check(CLI::NonNegativeNumber);

    CLI::App* region_cmd = app.add_subcommand("region", "Region membership and boundary");
    region_cmd->require_subcommand(1);

    RegionCheckOpts region_check_opts;
    CLI::App* region_check_cmd =
        region_cmd->add_subcommand("check", "Membership of a core point");
    region_check_cmd->add_option("--r", region_check_opts.r, "factor r")->required();
    region_check_cmd->add_option("--parity", region_check_opts.parity, "even or odd")
        ->check(CLI::IsMember({"even", "odd"}));
    region_check_cmd->add_option("--point", region_check_opts.point, "core x_0,...,x_n")
        ->required();
    region_check_cmd->add_option("--format", region_check_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    BoundaryOpts boundary_opts;
    CLI::App* region_boundary_cmd =
        region_cmd->add_subcommand("boundary", "Sample planar boundary points as CSV");
    BoundaryOpts boundary_alias_opts;
    CLI::App* boundary_cmd =
        app.add_subcommand("boundary", "Alias for \"region boundary\"");
    for (auto [cmd, opts] : {std::pair{region_boundary_cmd, &boundary_opts},
                             std::pair{boundary_cmd, &boundary_alias_opts}}) {
        cmd->add_option("--r", opts->r, "rational factor r")->required();
        cmd->add_option("--n", opts->n, "core dimension (planar case: 1)");
        cmd->add_option("--samples", opts->samples, "number of CSV rows")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--parity", opts->parity, "even or odd")
            ->check(CLI::IsMember({"even", "odd"}));
        cmd->add_option("--seed", opts->seed, "sampling seed (default 0)");
    }

    CLI::App* witness_cmd = app.add_subcommand("witness", "Witness construction");
    witness_cmd->require_subcommand(1);
    WitnessOpts witness_opts;
    CLI::App* witness_build_cmd =
        witness_cmd->add_subcommand("build", "Build a region witness core");
    witness_build_cmd->add_option("--scheme", witness_opts.scheme,
                                  "pentagonal or triangular exponents")
        ->check(CLI::IsMember({"pentagonal", "triangular"}));
    witness_build_cmd->add_option("--r", witness_opts.r, "rational factor r")->required();
    witness_build_cmd->add_option("--C", witness_opts.c, "rational damping constant")
        ->required();
    witness_build_cmd->add_option("--n", witness_opts.n, "core dimension (>= 1)")
        ->required();
    witness_build_cmd->add_option("--parity", witness_opts.parity, "even or odd")
        ->check(CLI::IsMember({"even", "odd"}));
    witness_build_cmd->add_option(
        "--a", witness_opts.a, "scale factor (default: rounded lower bound plus one)");

    CLI::App* pascal_cmd = app.add_subcommand("pascal", "Binomial-row verification");
    pascal_cmd->require_subcommand(1);
    PascalOpts pascal_opts;
    pascal_opts.max_iters = default_max_iters();
    CLI::App* pascal_verify_cmd =
        pascal_cmd->add_subcommand("verify", "Verify a range of binomial rows");
    pascal_verify_cmd->add_option("--from", pascal_opts.from, "first row")
        ->check(CLI::NonNegativeNumber);
    pascal_verify_cmd->add_option("--to", pascal_opts.to, "last row")
        ->required()
        ->check(CLI::NonNegativeNumber);
    pascal_verify_cmd->add_option("--mode", pascal_opts.mode, "r0, r1, or both")
        ->check(CLI::IsMember({"r0", "r1", "both"}));
    pascal_verify_cmd->add_option("--max-iters", pascal_opts.max_iters, "iteration budget")
        ->check(CLI::NonNegativeNumber);
    pascal_verify_cmd->add_option("--out", pascal_opts.out_path,
                                  "write the report to this file instead of stdout");
    pascal_verify_cmd->add_flag("--csv", pascal_opts.csv, "emit CSV instead of JSON");
    pascal_verify_cmd->add_flag("--timings", pascal_opts.timings,
                                "include wall-clock timings (non-reproducible)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("logcave");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "usage error: " << e.what() << "\n";
        return 64;
    }

    try {
        if (apply_cmd->parsed()) {
            return do_apply(apply_opts, out);
        }
        if (check_cmd->parsed()) {
            return do_check(check_opts, out);
        }
        if (certify_cmd->parsed()) {
            return do_certify(certify_opts, out);
        }
        if (compare_cmd->parsed()) {
            return do_compare(compare_opts, out);
        }
        if (region_check_cmd->parsed()) {
            return do_region_check(region_check_opts, out);
        }
        if (region_boundary_cmd->parsed()) {
            return do_boundary(boundary_opts, out);
        }
        if (boundary_cmd->parsed()) {
            return do_boundary(boundary_alias_opts, out);
        }
        if (witness_build_cmd->parsed()) {
            return do_witness_build(witness_opts, out);
        }
        if (pascal_verify_cmd->parsed()) {
            return do_pascal_verify(pascal_opts, out);
        }
        err << "usage error: missing subcommand\n";
        return 64;
    } catch (const UsageFailure& u) {
        err << "usage error: " << u.message << "\n";
        return 64;
    } catch (const parse_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
}

}  // namespace logcave

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "catalan/exact.hpp"
#include "catalan/quadrature.hpp"
#include "catalan/representations.hpp"
#include "output.hpp"

namespace catalan::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string format;
    std::string out_path;
    double tol_abs = ToleranceSpec{}.abs_tol;
    double tol_rel = ToleranceSpec{}.rel_tol;
    std::int64_t max_evals = ToleranceSpec{}.max_evaluations;

    [[nodiscard]] ToleranceSpec tolerance() const { return {tol_abs, tol_rel, max_evals}; }

    // table on stdout unless asked otherwise; csv when writing to a file
    [[nodiscard]] Format resolved_format() const {
        if (!format.empty()) {
            return parse_format(format);
        }
        return out_path.empty() ? Format::table : Format::csv;
    }
};

std::pair<double, double> parse_real_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("range must look like lo:hi, got '" + text + "'");
    }
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo_text = text.substr(0, colon);
        const std::string hi_text = text.substr(colon + 1);
        const double lo = std::stod(lo_text, &used_lo);
        const double hi = std::stod(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        if (!(lo < hi)) {
            throw UsageError("range requires lo < hi, got '" + text + "'");
        }
        return {lo, hi};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("range must look like lo:hi, got '" + text + "'");
    }
}

std::pair<int, int> parse_int_range(const std::string& text) {
    auto parse_int = [&text](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) {
            throw UsageError("--n must be an integer or lo:hi, got '" + text + "'");
        }
        return v;
    };
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int n = parse_int(text);
        return {n, n};
    }
    const int lo = parse_int(text.substr(0, colon));
    const int hi = parse_int(text.substr(colon + 1));
    if (lo > hi) {
        throw UsageError("--n range requires lo <= hi, got '" + text + "'");
    }
    return {lo, hi};
}

std::vector<RepresentationId> parse_rep_list(const std::string& text) {
    if (text == "all") {
        return {kAllRepresentations.begin(), kAllRepresentations.end()};
    }
    std::vector<RepresentationId> reps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        reps.push_back(parse_representation(item));
    }
    if (reps.empty()) {
        throw UsageError("--reps needs at least one representation");
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

void emit(const CommonOptions& opts, const Rows& rows, std::ostream& out) {
    const Format format = opts.resolved_format();
    if (opts.out_path.empty()) {
        write_rows(out, rows, format);
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open output file '" + opts.out_path + "'");
    }
    write_rows(file, rows, format);
    file.flush();
    if (!file) {
        throw IoError("failed writing output file '" + opts.out_path + "'");
    }
}

void add_format_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: table, csv or jsonl")
        ->check(CLI::IsMember({"table", "csv", "jsonl"}));
    cmd->add_option("--out", opts.out_path, "Write output to PATH instead of standard output");
}

void add_tolerance_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--tol-abs", opts.tol_abs, "Absolute quadrature tolerance")->capture_default_str();
    cmd->add_option("--tol-rel", opts.tol_rel, "Relative quadrature tolerance")->capture_default_str();
    cmd->add_option("--max-evals", opts.max_evals, "Integrand evaluation budget")->capture_default_str();
}

// verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string identity;
    std::int64_t max_n = 500;
    std::optional<std::int64_t> min_n;
    unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& args, const CommonOptions& opts, std::ostream& out) {
    const Identity identity = parse_identity(args.identity);
    const std::int64_t n_min = args.min_n.value_or(identity == Identity::callan ? 2 : 0);
    if (identity == Identity::callan && (n_min <= 1 || args.max_n <= 1)) {
        throw UsageError("callan identity requires n > 1 (use --max-n >= 2)");
    }
    if (n_min < 0 || n_min > args.max_n) {
        throw UsageError("invalid range " + std::to_string(n_min) + ".." + std::to_string(args.max_n));
    }
    unsigned workers = args.workers;
    if (workers == 0) {
        workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
    }

    const auto start = std::chrono::steady_clock::now();
    const IdentityReport report = verify_identity(identity, n_min, args.max_n, workers);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Rows rows;
    rows.header = {"identity", "n_min", "n_max", "checked", "failures", "all_integral", "all_passed"};
    rows.rows.push_back({Text{std::string(to_string(identity))}, report.n_min, report.n_max,
                         report.n_max - report.n_min + 1, static_cast<std::int64_t>(report.failures.size()),
                         report.all_integral, report.all_passed});
    emit(opts, rows, out);

    if (opts.resolved_format() == Format::table && opts.out_path.empty()) {
        for (const auto& f : report.failures) {
            out << "mismatch at n=" << f.n << ": lhs=" << f.lhs.get_str() << " rhs=" << f.rhs.get_str() << '\n';
        }
        out << "elapsed " << format_double(elapsed) << " s\n";
    }
    return report.all_passed && report.all_integral ? kSuccess : kCheckFailed;
}

// eval / compare ---------------------------------------------------------

void check_rep_n(RepresentationId id, int n) {
    const int n_min = representation_spec(id).n_min;
    if (n < n_min) {
        throw UsageError(std::string(to_string(id)) + " requires n >= " + std::to_string(n_min) + ", got " +
                         std::to_string(n));
    }
    if (n > kDefaultMaxN) {
        throw UsageError(std::string(to_string(id)) + " is supported up to n = " + std::to_string(kDefaultMaxN));
    }
}

int cmd_eval(const std::string& rep_name, const std::string& n_text, const CommonOptions& opts, std::ostream& out) {
    const RepresentationId id = parse_representation(rep_name);
    const auto [lo, hi] = parse_int_range(n_text);
    check_rep_n(id, lo);
    check_rep_n(id, hi);

    Rows rows;
    rows.header = {"rep", "n", "exact", "estimate", "rel_error", "abs_error_estimate", "evaluations", "converged"};
    bool all_converged = true;
    for (int n = lo; n <= hi; ++n) {
        const auto rec = evaluate_representation(id, n, opts.tolerance());
        all_converged = all_converged && rec.quadrature.converged;
        rows.rows.push_back({Text{std::string(rec.label)}, std::int64_t{n}, Text{rec.exact.get_str()}, rec.estimate,
                             rec.rel_error, rec.estimate_error, rec.quadrature.evaluations,
                             rec.quadrature.converged});
    }
    emit(opts, rows, out);
    return all_converged ? kSuccess : kCheckFailed;
}

int cmd_compare(int n, const std::string& reps_text, bool timing, const CommonOptions& opts, std::ostream& out) {
    const auto reps = parse_rep_list(reps_text);
    for (auto id : reps) {
        check_rep_n(id, n);
    }
    const Format format = opts.resolved_format();
    const bool show_time = timing || format == Format::table;

    Rows rows;
    rows.header = {"rep", "n", "exact", "estimate", "rel_error", "evaluations", "converged"};
    if (show_time) {
        rows.header.emplace_back("wall_ms");
    }
    bool all_converged = true;
    for (auto id : reps) {
        const auto start = std::chrono::steady_clock::now();
        const auto rec = evaluate_representation(id, n, opts.tolerance());
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        all_converged = all_converged && rec.quadrature.converged;
        std::vector<Cell> row = {Text{std::string(rec.label)}, std::int64_t{n}, Text{rec.exact.get_str()},
                                 rec.estimate, rec.rel_error, rec.quadrature.evaluations,
                                 rec.quadrature.converged};
        if (show_time) {
            row.emplace_back(ms);
        }
        rows.rows.push_back(std::move(row));
    }
    emit(opts, rows, out);
    return all_converged ? kSuccess : kCheckFailed;
}

// weights ----------------------------------------------------------------

int cmd_weights(const std::string& family_name, int n, int samples, const std::string& range_text,
                const CommonOptions& opts, std::ostream& out) {
    const WeightFamily family = parse_family(family_name);
    if (n < 2) {
        throw UsageError("weights family " + family_name + " includes the index-3 member, which needs n >= 2");
    }
    if (samples < 2) {
        throw UsageError("--samples must be at least 2");
    }
    double lo = 0.0;
    double hi = 3.0;
    if (family == WeightFamily::g) {
        lo = -1.0;
        hi = 1.0;
        if (!range_text.empty()) {
            const auto r = parse_real_range(range_text);
            if (r.first != -1.0 || r.second != 1.0) {
                throw UsageError("the g family is sampled on the fixed range -1:1");
            }
        }
    } else if (!range_text.empty()) {
        std::tie(lo, hi) = parse_real_range(range_text);
    }

    const auto samples_out = sample_weights(family, n, lo, hi, samples);
    Rows rows;
    rows.header = {"t", "w1", "w2", "w3"};
    for (const auto& s : samples_out) {
        rows.rows.push_back({s.t, s.w[0], s.w[1], s.w[2]});
    }
    emit(opts, rows, out);
    return kSuccess;
}

// intersect --------------------------------------------------------------

int cmd_intersect(int n, const std::string& range_text, double tol, const CommonOptions& opts, std::ostream& out) {
    if (n < 2) {
        throw UsageError("intersect requires n >= 2, got " + std::to_string(n));
    }
    double lo = kDefaultBracketLo;
    double hi = kDefaultBracketHi;
    if (!range_text.empty()) {
        std::tie(lo, hi) = parse_real_range(range_text);
    }
    const auto report = find_f_intersection(n, lo, hi, tol);

    Rows rows;
    rows.header = {"n", "root", "t", "residual", "converged", "sign_changes"};
    bool all_converged = true;
    for (std::size_t i = 0; i < report.roots.size(); ++i) {
        const auto& r = report.roots[i];
        all_converged = all_converged && r.converged;
        rows.rows.push_back({std::int64_t{n}, static_cast<std::int64_t>(i), r.t, r.residual, r.converged,
                             std::int64_t{report.sign_changes}});
    }
    emit(opts, rows, out);
    return all_converged ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Catalan number identities and integral representations"};
    app.name("catalan-tool");
    app.require_subcommand(1);

    CommonOptions opts;

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Exact sweep of the Touchard or Callan identity");
    verify->add_option("--identity", verify_args.identity, "touchard or callan")
        ->required()
        ->check(CLI::IsMember({"touchard", "callan"}));
    verify->add_option("--max-n", verify_args.max_n, "Largest n checked")->capture_default_str();
    verify->add_option("--min-n", verify_args.min_n, "Smallest n checked (default 0, or 2 for callan)");
    verify->add_option("--workers", verify_args.workers, "Worker threads (0 = hardware, capped at 8)");
    add_format_options(verify, opts);

    std::string eval_rep;
    std::string eval_n;
    auto* eval = app.add_subcommand("eval", "Evaluate one representation against the exact C_n");
    eval->add_option("--rep", eval_rep, "R0, R1, R2, B0, B1 or B2")->required();
    eval->add_option("--n", eval_n, "n, or an inclusive range lo:hi")->required();
    add_tolerance_options(eval, opts);
    add_format_options(eval, opts);

    int compare_n = 0;
    std::string compare_reps = "all";
    bool compare_timing = false;
    auto* compare = app.add_subcommand("compare", "Compare representations at one n");
    compare->add_option("--n", compare_n, "n")->required();
    compare->add_option("--reps", compare_reps, "Comma-separated ids or 'all'")->capture_default_str();
    compare->add_flag("--timing", compare_timing, "Include wall_ms in csv/jsonl output");
    add_tolerance_options(compare, opts);
    add_format_options(compare, opts);

    std::string weights_family;
    int weights_n = 0;
    int weights_samples = 200;
    std::string weights_range;
    auto* weights = app.add_subcommand("weights", "Sample the weight functions of one family");
    weights->add_option("--family", weights_family, "f or g")->required()->check(CLI::IsMember({"f", "g"}));
    weights->add_option("--n", weights_n, "n")->required();
    weights->add_option("--samples", weights_samples, "Number of sample points")->capture_default_str();
    weights->add_option("--range", weights_range, "lo:hi (f family, default 0:3; g family fixed at -1:1)");
    add_format_options(weights, opts);

    int intersect_n = 0;
    std::string intersect_range;
    double intersect_tol = 1e-10;
    auto* intersect = app.add_subcommand("intersect", "Locate the crossings of f1 and f2");
    intersect->add_option("--n", intersect_n, "n")->required();
    intersect->add_option("--range", intersect_range, "Bracket lo:hi (default 1e-6:10)");
    intersect->add_option("--tol", intersect_tol, "Residual target |f1 - f2|")->capture_default_str();
    add_format_options(intersect, opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*verify) {
            return cmd_verify(verify_args, opts, out);
        }
        if (*eval) {
            return cmd_eval(eval_rep, eval_n, opts, out);
        }
        if (*compare) {
            return cmd_compare(compare_n, compare_reps, compare_timing, opts, out);
        }
        if (*weights) {
            return cmd_weights(weights_family, weights_n, weights_samples, weights_range, opts, out);
        }
        if (*intersect) {
            return cmd_intersect(intersect_n, intersect_range, intersect_tol, opts, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const NoBracket& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const NonFiniteSample& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {  // UsageError, InvalidInterval, InvalidTolerance
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsageError;
}

}  // namespace catalan::cli

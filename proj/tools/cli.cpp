// Copyright 2026 The povm-tradeoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "tradeoff/tradeoff.hpp"

namespace tradeoff::cli {

namespace {

constexpr double kVerifyTol = 1e-10;
constexpr std::size_t kMaxReportedFailures = 10;

using Cell = std::variant<double, std::string, bool, std::uint64_t>;

std::string json_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

/// Emits rows either as CSV (header first) or as one JSON object per line.
class Table {
  public:
    Table(std::ostream &out, Format format, std::vector<std::string> columns, std::string record = {})
        : out_(out), format_(format), columns_(std::move(columns)), record_(std::move(record)) {
        if (format_ == Format::Csv) {
            for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
            out_ << '\n';
        }
    }

    void row(const std::vector<Cell> &cells) {
        if (format_ == Format::Csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << render(cells[i], false);
        } else {
            out_ << '{';
            bool first = true;
            if (!record_.empty()) {
                out_ << "\"record\":\"" << json_escape(record_) << '"';
                first = false;
            }
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out_ << (first ? "" : ",") << '"' << json_escape(columns_[i]) << "\":" << render(cells[i], true);
                first = false;
            }
            out_ << '}';
        }
        out_ << '\n';
    }

  private:
    static std::string render(const Cell &cell, bool json) {
        if (const double *d = std::get_if<double>(&cell)) {
            if (json && !std::isfinite(*d)) return "null";
            return format_number(*d);
        }
        if (const bool *b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
        if (const std::uint64_t *u = std::get_if<std::uint64_t>(&cell)) return std::to_string(*u);
        const std::string &s = std::get<std::string>(cell);
        return json ? '"' + json_escape(s) + '"' : s;
    }

    std::ostream &out_;
    Format format_;
    std::vector<std::string> columns_;
    std::string record_;
};

std::uint64_t as_u64(std::size_t v) { return static_cast<std::uint64_t>(v); }

double worst_functional_violation(const DensityOperator &rho, const EfficientMeasurement &m, bool inside) {
    double worst = 0.0;
    for (Functional f : {Functional::Impurity, Functional::VonNeumann, Functional::Subentropy}) {
        const double delta = inside ? delta_in(rho, m, f) : delta_out(rho, m, f);
        worst = std::max(worst, -delta);
    }
    return worst;
}

/// Violation measure for one instance; > kVerifyTol is a failure.
double run_instance(Suite suite, std::size_t dim, std::size_t index, Rng &rng) {
    switch (suite) {
        case Suite::Majorization: {
            const FeedbackMode mode = index % 2 == 0 ? FeedbackMode::None : FeedbackMode::Haar;
            const DensityOperator rho = random_density(dim, rng);
            const EfficientMeasurement m = random_efficient_measurement(dim, mode, rng);
            const MajorizationVerdict v = check_majorization_theorem(rho, m);
            if (!v.routes_agree()) return std::max({v.omega_violation, v.direct_violation, 1.0});
            return std::max({v.omega_violation, v.direct_violation, worst_functional_violation(rho, m, true)});
        }
        case Suite::Concavity: {
            const DensityOperator rho0 = random_density(dim, rng);
            const DensityOperator rho1 = random_density(dim, rng);
            double worst = 0.0;
            for (int step = 1; step < 10; ++step) {
                const double p = 0.1 * step;
                const DensityOperator mix =
                    DensityOperator::from_psd(p * rho0.matrix() + (1.0 - p) * rho1.matrix());
                for (Functional f : {Functional::Impurity, Functional::VonNeumann, Functional::Subentropy}) {
                    const double chord = p * evaluate(f, rho0) + (1.0 - p) * evaluate(f, rho1);
                    worst = std::max(worst, chord - evaluate(f, mix));
                }
            }
            return worst;
        }
        case Suite::ClosedForm: {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            QubitProblem p;
            p.a = unit(rng);
            p.b = unit(rng);
            p.alpha = unit(rng) * alpha_cap(p.b);
            p.z = 2.0 * unit(rng) - 1.0;
            const DensityOperator rho = qubit_state(p.a);
            const EfficientMeasurement m = qubit_measurement(p);
            const double in_err = std::abs(delta_in_closed(p) - delta_in(rho, m, Functional::Impurity));
            const double out_err = std::abs(delta_out_closed(p) - delta_out(rho, m, Functional::Impurity));
            return std::max(in_err, out_err);
        }
        case Suite::NoFeedback: {
            const DensityOperator rho = random_density(dim, rng);
            const EfficientMeasurement m = random_efficient_measurement(dim, FeedbackMode::None, rng);
            return worst_functional_violation(rho, m, false);
        }
    }
    return 0.0;
}

std::string usage_error(std::ostream &err, const std::string &msg) {
    err << "error: " << msg << '\n';
    return msg;
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "majorization") return Suite::Majorization;
    if (name == "concavity") return Suite::Concavity;
    if (name == "closedform") return Suite::ClosedForm;
    if (name == "nofeedback") return Suite::NoFeedback;
    return std::nullopt;
}

std::string_view to_string(Suite suite) {
    switch (suite) {
        case Suite::Majorization: return "majorization";
        case Suite::Concavity: return "concavity";
        case Suite::ClosedForm: return "closedform";
        case Suite::NoFeedback: return "nofeedback";
    }
    return "?";
}

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    std::string s(buf, res.ptr);
    // to_chars keeps trailing zeros in the mantissa for %g-style output; trim them.
    const auto exp_pos = s.find('e');
    std::string mantissa = s.substr(0, exp_pos);
    const std::string exponent = exp_pos == std::string::npos ? "" : s.substr(exp_pos);
    if (mantissa.find('.') != std::string::npos) {
        while (mantissa.back() == '0') mantissa.pop_back();
        if (mantissa.back() == '.') mantissa.pop_back();
    }
    return mantissa + exponent;
}

VerifySummary run_suite(const VerifyOptions &opts, std::ostream &failures) {
    VerifySummary summary;
    summary.samples = opts.samples;
    std::size_t reported = 0;
    for (std::size_t i = 0; i < opts.samples; ++i) {
        Rng rng(instance_seed(opts.seed, i));
        const std::size_t dim = opts.dims[i % opts.dims.size()];
        double violation = 0.0;
        std::string error;
        try {
            violation = run_instance(opts.suite, dim, i, rng);
        } catch (const Error &e) {
            violation = INFINITY;
            error = e.what();
        }
        summary.max_violation = std::max(summary.max_violation, violation);
        if (violation <= kVerifyTol) {
            ++summary.passed;
            continue;
        }
        ++summary.failed;
        if (!summary.first_failure) summary.first_failure = i;
        if (reported++ < kMaxReportedFailures) {
            failures << "failure: suite=" << to_string(opts.suite) << " seed=" << opts.seed << " instance=" << i
                     << " dim=" << dim << " violation=" << format_number(violation);
            if (!error.empty()) failures << " error=\"" << error << '"';
            failures << '\n';
        }
    }
    return summary;
}

int cmd_curve(const CurveOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const std::vector<TradeoffPoint> points = sample_z_grid(opts.a, opts.b, opts.alpha, opts.n);
        Table table(out, opts.format, {"z", "delta_in", "delta_out"});
        for (const TradeoffPoint &p : points) table.row({p.z, p.delta_in, p.delta_out});
    } catch (const Error &e) {
        usage_error(err, e.what());
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err) {
    if (opts.samples < 1) {
        usage_error(err, "--samples must be at least 1");
        return kExitUsage;
    }
    if (opts.dims.empty()) {
        usage_error(err, "--dims must list at least one dimension");
        return kExitUsage;
    }
    for (std::size_t d : opts.dims) {
        if (d < kMinDim || d > kMaxDim) {
            usage_error(err, "dimension " + std::to_string(d) + " outside supported range 2..8");
            return kExitUsage;
        }
    }
    const VerifySummary s = run_suite(opts, err);
    Table table(out, opts.format, {"suite", "seed", "samples", "passed", "failed", "max_violation", "first_failure"});
    table.row({std::string(to_string(opts.suite)), opts.seed, as_u64(s.samples), as_u64(s.passed),
               as_u64(s.failed), s.max_violation,
               s.first_failure ? Cell(as_u64(*s.first_failure)) : Cell(std::string("none"))});
    return s.failed == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_classify(const ClassifyOptions &opts, std::ostream &out, std::ostream &err) {
    if (!(opts.a > 0.0 && opts.a < 1.0 && opts.b > 0.0 && opts.b < 1.0)) {
        usage_error(err, "classify needs 0 < a < 1 and 0 < b < 1");
        return kExitUsage;
    }
    if (opts.grid < 2) {
        usage_error(err, "--grid must be at least 2");
        return kExitUsage;
    }
    const RegimeReport r = classify_regime(opts.a, opts.b);
    {
        Table summary(out, opts.format,
                      {"a", "b", "alpha_max", "alpha_lo", "alpha_hi", "formula_alpha_plus", "formula_alpha_minus",
                       "lo_matches_formula", "hi_matches_formula", "formula_ranges_match", "discrepancy"},
                      "summary");
        summary.row({r.a, r.b, r.alpha_max, r.alpha_lo, r.alpha_hi, r.formula_alpha_plus, r.formula_alpha_minus,
                     r.lo_matches_formula, r.hi_matches_formula, r.formula_ranges_match, r.discrepancy()});
    }
    if (opts.format == Format::Csv) out << '\n';
    Table grid(out, opts.format, {"alpha", "z_star", "has_tradeoff"}, "alpha");
    for (std::size_t i = 0; i < opts.grid; ++i) {
        const double alpha = i + 1 == opts.grid
                                 ? r.alpha_max
                                 : r.alpha_max * static_cast<double>(i) / static_cast<double>(opts.grid - 1);
        grid.row({alpha, r.z_star(alpha), r.has_tradeoff(alpha)});
    }
    for (const std::string &w : r.warnings) err << "warning: " << w << '\n';
    return kExitOk;
}

int cmd_strength(const StrengthOptions &opts, std::ostream &out, std::ostream &err) {
    if (!in_unit(opts.k) || !in_unit(opts.a)) {
        usage_error(err, "strength needs k and a in [0, 1]");
        return kExitUsage;
    }
    const StrengthMaximum closed = max_delta_in(opts.k, opts.a);
    const StrengthSearch search = search_max_delta_in(opts.k, opts.a);
    Table table(out, opts.format,
                {"k", "a", "delta_in_max_closed", "delta_in_max_search", "abs_difference", "z_star", "b_star",
                 "delta_out_at_max"});
    table.row({opts.k, opts.a, closed.value, search.value, std::abs(closed.value - search.value), closed.z_star,
               closed.b_star, closed.delta_out_at_max});
    return kExitOk;
}

int cmd_entropy(const EntropyOptions &opts, std::ostream &out, std::ostream &err) {
    std::vector<double> values;
    if (opts.a && !opts.spectrum.empty()) {
        usage_error(err, "give either --a or --spectrum, not both");
        return kExitUsage;
    }
    if (opts.a) {
        if (!in_unit(*opts.a)) {
            usage_error(err, "--a must lie in [0, 1]");
            return kExitUsage;
        }
        values = {0.5 * (1.0 + *opts.a), 0.5 * (1.0 - *opts.a)};
    } else {
        values = opts.spectrum;
    }
    if (values.size() < kMinDim || values.size() > kMaxDim) {
        usage_error(err, "the spectrum needs 2..8 entries");
        return kExitUsage;
    }
    double total = 0.0;
    for (double v : values) {
        if (!(v >= -1e-12)) {
            usage_error(err, "spectrum entries must be non-negative");
            return kExitUsage;
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        usage_error(err, "spectrum must sum to 1");
        return kExitUsage;
    }
    for (double &v : values) v = std::max(0.0, v) / total;
    const Spectrum s(values);
    Table table(out, opts.format, {"measure", "value"});
    table.row({std::string(to_string(opts.measure)), evaluate(opts.measure, s)});
    return kExitOk;
}

namespace {

Format parse_format(const std::string &name) { return name == "jsonl" ? Format::JsonLines : Format::Csv; }

std::optional<std::uint64_t> parse_seed(const std::string &text) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used, 0);
        if (used != text.size()) return std::nullopt;
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err, std::optional<std::string> env_seed) {
    CLI::App app{"Information-disturbance tradeoff for finite-strength quantum measurements", "povm_tradeoff"};
    app.require_subcommand(1);

    std::string format_name = "csv";
    std::string output_path;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
        sub->add_option("--output", output_path, "Write the report to this file instead of stdout");
    };

    CurveOptions curve;
    CLI::App *curve_cmd = app.add_subcommand("curve", "Delta_in and Delta_out over a uniform z grid in [-1, 1]");
    curve_cmd->add_option("--a", curve.a, "Bloch modulus of the state")->required();
    curve_cmd->add_option("--b", curve.b, "Bloch modulus of the effect direction")->required();
    curve_cmd->add_option("--alpha", curve.alpha, "Trace of the effect");
    curve_cmd->add_option("--n", curve.n, "Number of z points");
    add_common(curve_cmd);

    VerifyOptions verify;
    std::string suite_name;
    std::optional<std::string> seed_text;
    CLI::App *verify_cmd = app.add_subcommand("verify", "Run a seeded property-verification suite");
    verify_cmd->add_option("--suite", suite_name, "majorization | concavity | closedform | nofeedback")
        ->required()
        ->check(CLI::IsMember({"majorization", "concavity", "closedform", "nofeedback"}));
    verify_cmd->add_option("--samples", verify.samples, "Number of random instances");
    verify_cmd->add_option("--seed", seed_text, "64-bit seed (decimal or 0x-prefixed hex)");
    verify_cmd->add_option("--dims", verify.dims, "Comma-separated Hilbert-space dimensions")->delimiter(',');
    add_common(verify_cmd);

    ClassifyOptions classify;
    CLI::App *classify_cmd = app.add_subcommand("classify", "Locate the alpha interval with a nontrivial tradeoff");
    classify_cmd->add_option("--a", classify.a, "Bloch modulus of the state")->required();
    classify_cmd->add_option("--b", classify.b, "Bloch modulus of the effect direction")->required();
    classify_cmd->add_option("--grid", classify.grid, "Number of alpha samples in the grid table");
    add_common(classify_cmd);

    StrengthOptions strength;
    CLI::App *strength_cmd = app.add_subcommand("strength", "Largest Delta_in at fixed measurement strength");
    strength_cmd->add_option("--k", strength.k, "Measurement strength")->required();
    strength_cmd->add_option("--a", strength.a, "Bloch modulus of the state")->required();
    add_common(strength_cmd);

    EntropyOptions entropy;
    double entropy_a = 0.0;
    std::string measure_name = "S";
    CLI::App *entropy_cmd = app.add_subcommand("entropy", "Evaluate P, S, Q or Hbar on a spectrum");
    CLI::Option *entropy_a_opt = entropy_cmd->add_option("--a", entropy_a, "Qubit Bloch modulus");
    entropy_cmd->add_option("--spectrum", entropy.spectrum, "Comma-separated eigenvalues")->delimiter(',');
    entropy_cmd->add_option("--measure", measure_name, "P | S | Q | Hbar")
        ->check(CLI::IsMember({"P", "S", "Q", "Hbar"}));
    add_common(entropy_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    if (!output_path.empty()) {
        file.open(output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << output_path << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream &sink = output_path.empty() ? out : file;
    const Format format = parse_format(format_name);

    if (*curve_cmd) {
        curve.format = format;
        return cmd_curve(curve, sink, err);
    }
    if (*verify_cmd) {
        verify.suite = *parse_suite(suite_name);
        verify.format = format;
        verify.seed = kDefaultSeed;
        const std::optional<std::string> chosen = seed_text ? seed_text : env_seed;
        if (chosen) {
            const std::optional<std::uint64_t> parsed = parse_seed(*chosen);
            if (!parsed) {
                err << "error: invalid seed '" << *chosen << "'\n";
                return kExitUsage;
            }
            verify.seed = *parsed;
        }
        return cmd_verify(verify, sink, err);
    }
    if (*classify_cmd) {
        classify.format = format;
        return cmd_classify(classify, sink, err);
    }
    if (*strength_cmd) {
        strength.format = format;
        return cmd_strength(strength, sink, err);
    }
    entropy.format = format;
    entropy.measure = *parse_functional(measure_name);
    if (entropy_a_opt->count() > 0) entropy.a = entropy_a;
    return cmd_entropy(entropy, sink, err);
}

}  // namespace tradeoff::cli

// juntalab: sample single-query runs of a Boolean function, amplify the
// high-weight outcomes, and print what the outcomes reveal about which
// variables the function actually reads.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "juntalab/amplify.hpp"
#include "juntalab/analytics.hpp"
#include "juntalab/boolfn.hpp"
#include "juntalab/bv_sampler.hpp"
#include "juntalab/report.hpp"
#include "juntalab/spectrum.hpp"

namespace {

using namespace juntalab;

// Stream id reserved for the side-channel gamma estimator; trial blocks use
// ids 0..trials/8192, so the two never collide.
constexpr std::uint64_t kGammaEstimateStream = ~std::uint64_t{0};

struct FunctionArgs {
    std::string anf;
    std::string table_path;
    int n = 0;
    bool force_large = false;
};

struct OutputArgs {
    std::string path;
    std::string format;
};

void add_function_options(CLI::App* cmd, FunctionArgs& args) {
    auto* anf = cmd->add_option("--anf", args.anf,
                                "Function as ANF text, e.g. \"x1*x2 + x3\" ('+' is XOR)");
    auto* table =
        cmd->add_option("--table", args.table_path, "Truth-table file: n=<int>, then 2^n bits");
    auto* n = cmd->add_option("--n", args.n, "Variable count (with --anf)");
    cmd->add_flag("--force-large", args.force_large,
                  "Allow n above 20 (dense 2^n-sized work, use with care)");
    anf->excludes(table);
    table->excludes(anf);
    table->excludes(n);
    n->needs(anf);
    anf->needs(n);
}

void add_output_options(CLI::App* cmd, OutputArgs& args, const std::string& default_format) {
    cmd->add_option("--out", args.path, "Write output to a file instead of stdout");
    args.format = default_format;
    cmd->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

BooleanFunction load_function(const FunctionArgs& args, FunctionSpec& spec) {
    if (args.anf.empty() && args.table_path.empty()) {
        throw std::invalid_argument("provide a function: --anf with --n, or --table");
    }
    if (!args.anf.empty()) {
        BooleanFunction f = parse_anf(args.anf, args.n);
        spec = FunctionSpec{"anf", args.anf, "", args.n};
        if (f.var_count() > 20 && !args.force_large) {
            throw DomainError("n = " + std::to_string(f.var_count()) +
                              " allocates 2^n doubles; pass --force-large to proceed");
        }
        return f;
    }
    BooleanFunction f = read_truth_table_file(args.table_path);
    spec = FunctionSpec{"table", "", args.table_path, f.var_count()};
    if (f.var_count() > 20 && !args.force_large) {
        throw DomainError("n = " + std::to_string(f.var_count()) +
                          " allocates 2^n doubles; pass --force-large to proceed");
    }
    return f;
}

int env_threads() {
    const char* value = std::getenv("JUNTALAB_THREADS");
    if (value == nullptr || *value == '\0') return 1;
    char* end = nullptr;
    const long parsed = std::strtol(value, &end, 10);
    if (end == value || *end != '\0' || parsed < 1 || parsed > 1024) {
        throw std::invalid_argument("JUNTALAB_THREADS must be a positive integer");
    }
    return static_cast<int>(parsed);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string histogram_csv(const LearningResult& r) {
    std::ostringstream out;
    out << "y,count,frequency\n";
    char buf[48];
    for (const auto& [outcome, count] : r.outcome_histogram) {
        std::snprintf(buf, sizeof buf, ",%llu,%.17g", static_cast<unsigned long long>(count),
                      static_cast<double>(count) / static_cast<double>(r.trials));
        out << bit_string(outcome, r.n) << buf << "\n";
    }
    return out.str();
}

int run_spectrum(const FunctionArgs& fn_args, const OutputArgs& out_args) {
    FunctionSpec spec;
    const BooleanFunction f = load_function(fn_args, spec);
    const Spectrum s = spectrum_fast(f);
    if (out_args.format == "json") {
        write_output(out_args.path,
                     json_text(report_envelope("spectrum", spectrum_result_json(spec, s))));
    } else {
        std::ostringstream csv;
        write_spectrum_csv(csv, s);
        write_output(out_args.path, csv.str());
    }
    return 0;
}

int run_bv(const FunctionArgs& fn_args, const OutputArgs& out_args, std::uint64_t trials,
           std::uint64_t seed) {
    FunctionSpec spec;
    const BooleanFunction f = load_function(fn_args, spec);
    const int threads = env_threads();

    const BvSampler sampler(f);
    const LearningResult result = run_trials_seeded(sampler.sampler(), trials, seed, threads, 1);

    if (out_args.format == "csv") {
        write_output(out_args.path, histogram_csv(result));
        return 0;
    }
    const RunParameters params{trials, seed, threads};
    write_output(out_args.path,
                 json_text(report_envelope(
                     "bv", bv_result_json(spec, params, f, sampler.distribution(), result))));
    return 0;
}

int run_amplify(const FunctionArgs& fn_args, const OutputArgs& out_args, int k,
                std::optional<int> iterations, std::uint64_t trials, std::uint64_t seed,
                std::optional<std::uint64_t> estimate_samples) {
    FunctionSpec spec;
    const BooleanFunction f = load_function(fn_args, spec);
    const int threads = env_threads();
    const bool auto_iterations = !iterations.has_value();

    const AmplifierPlan plan = make_plan(spectrum_fast(f), k);
    if (auto_iterations && !plan.amplifiable) {
        const Json err = error_envelope(
            "amplify", "unamplifiable",
            "no outcome weight at or above the threshold; nothing to amplify",
            Json{{"k", k}, {"gamma", plan.gamma}});
        write_output(out_args.path, json_text(err));
        return 2;
    }
    const int rounds = auto_iterations ? plan.optimal_iterations : *iterations;

    const StateVector state = grover_statevector(f, k, rounds);
    if (out_args.format == "csv") {
        std::ostringstream csv;
        write_statevector_csv(csv, state);
        write_output(out_args.path, csv.str());
        return 0;
    }

    const OutcomeSampler sampler(measurement_distribution(state));
    const LearningResult result = run_trials_seeded(
        sampler, trials, seed, threads, 1 + 2 * static_cast<std::uint64_t>(rounds));

    std::optional<GammaEstimate> estimate;
    if (estimate_samples) {
        Rng rng = make_block_rng(seed, kGammaEstimateStream);
        estimate = estimate_gamma(f, k, *estimate_samples, rng);
    }

    const RunParameters params{trials, seed, threads};
    write_output(out_args.path,
                 json_text(report_envelope(
                     "amplify", amplify_result_json(spec, params, f, plan, rounds,
                                                    auto_iterations, state, result, estimate))));
    return 0;
}

int run_predict(const OutputArgs& out_args, int m_min, int m_max) {
    if (m_min < 1) {
        throw std::invalid_argument("--m-min must be at least 1");
    }
    if (out_args.format == "json") {
        write_output(out_args.path,
                     json_text(report_envelope("predict", predict_result_json(m_min, m_max))));
        return 0;
    }
    std::vector<ProductFamilyPrediction> rows;
    for (int m = m_min; m <= m_max; ++m) rows.push_back(product_prediction(m));
    std::ostringstream csv;
    write_predictions_csv(csv, rows);
    write_output(out_args.path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean function spectra, single-query sampling, and amplified runs"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    FunctionArgs fn_args;
    OutputArgs out_args;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Print overlap coefficients");
    add_function_options(spectrum_cmd, fn_args);
    OutputArgs spectrum_out;
    add_output_options(spectrum_cmd, spectrum_out, "csv");

    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    auto* bv_cmd = app.add_subcommand("bv", "Run single-query sampling trials");
    add_function_options(bv_cmd, fn_args);
    add_output_options(bv_cmd, out_args, "json");
    bv_cmd->add_option("--trials", trials, "Number of runs")
        ->required()
        ->check(CLI::PositiveNumber);
    bv_cmd->add_option("--seed", seed, "RNG seed (default 0)");

    int k = 0;
    int iterations_flag = 0;
    bool auto_flag = false;
    std::uint64_t estimate_samples = 0;
    auto* amplify_cmd = app.add_subcommand("amplify", "Amplify outcomes with popcount >= k");
    add_function_options(amplify_cmd, fn_args);
    add_output_options(amplify_cmd, out_args, "json");
    amplify_cmd->add_option("--k", k, "Target popcount threshold")->required();
    auto* iter_opt =
        amplify_cmd->add_option("--iterations", iterations_flag, "Fixed amplification rounds")
            ->check(CLI::NonNegativeNumber);
    auto* auto_opt = amplify_cmd->add_flag(
        "--auto", auto_flag, "Use the plan's optimal round count (default when omitted)");
    iter_opt->excludes(auto_opt);
    auto_opt->excludes(iter_opt);
    amplify_cmd->add_option("--trials", trials, "Number of runs")
        ->required()
        ->check(CLI::PositiveNumber);
    amplify_cmd->add_option("--seed", seed, "RNG seed (default 0)");
    auto* est_opt = amplify_cmd->add_option(
        "--estimate-gamma", estimate_samples,
        "Also estimate gamma from this many unamplified samples");
    est_opt->check(CLI::PositiveNumber);

    int m_min = 2;
    int m_max = 30;
    auto* predict_cmd =
        app.add_subcommand("predict", "Closed-form table for the product worst case");
    OutputArgs predict_out;
    add_output_options(predict_cmd, predict_out, "csv");
    predict_cmd->add_option("--m-min", m_min, "First m (default 2)");
    predict_cmd->add_option("--m-max", m_max, "Last m (default 30)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (spectrum_cmd->parsed()) {
            return run_spectrum(fn_args, spectrum_out);
        }
        if (bv_cmd->parsed()) {
            return run_bv(fn_args, out_args, trials, seed);
        }
        if (amplify_cmd->parsed()) {
            std::optional<int> iterations;
            if (iter_opt->count() > 0) iterations = iterations_flag;
            std::optional<std::uint64_t> estimate;
            if (est_opt->count() > 0) estimate = estimate_samples;
            return run_amplify(fn_args, out_args, k, iterations, trials, seed, estimate);
        }
        return run_predict(predict_out, m_min, m_max);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (offset " << e.position() << ")\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

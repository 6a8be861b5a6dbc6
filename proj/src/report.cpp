#include "juntalab/report.hpp"

#include <bit>
#include <cmath>
#include <ctime>

namespace juntalab {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json function_json(const FunctionSpec& fn) {
    Json j;
    j["source"] = fn.source;
    if (fn.source == "anf") {
        j["anf"] = fn.anf;
    } else {
        j["table_file"] = fn.table_file;
    }
    j["n"] = fn.n;
    return j;
}

Json empirical_json(const LearningResult& r, std::optional<int> success_threshold) {
    Json j;
    j["trials"] = r.trials;
    j["oracle_queries"] = r.oracle_queries;
    j["failures"] = r.failures;
    j["learn_at_least_one_frequency"] =
        static_cast<double>(r.trials - r.failures) / static_cast<double>(r.trials);
    if (success_threshold) {
        std::uint64_t hits = 0;
        for (const auto& [outcome, count] : r.outcome_histogram) {
            if (std::popcount(outcome) >= *success_threshold) hits += count;
        }
        j["weight_at_least_k_frequency"] =
            static_cast<double>(hits) / static_cast<double>(r.trials);
    }
    j["union_learned"] = r.union_learned.members();
    Json hits = Json::object();
    for (std::size_t i = 0; i < r.per_variable_hits.size(); ++i) {
        if (r.per_variable_hits[i] > 0) {
            hits[std::to_string(i + 1)] = r.per_variable_hits[i];
        }
    }
    j["per_variable_hit_counts"] = std::move(hits);
    Json histogram = Json::object();
    for (const auto& [outcome, count] : r.outcome_histogram) {
        histogram[bit_string(outcome, r.n)] = count;
    }
    j["outcome_histogram"] = std::move(histogram);
    return j;
}

namespace {

Json relevant_variables_json(const BooleanFunction& f) {
    return Json(relevant_variables_bruteforce(f).members());
}

}  // namespace

Json bv_result_json(const FunctionSpec& fn, const RunParameters& params,
                    const BooleanFunction& f, const OutcomeDistribution& dist,
                    const LearningResult& r) {
    Json result;
    result["function"] = function_json(fn);
    result["parameters"] = {{"trials", params.trials},
                            {"seed", params.seed},
                            {"rng", kRngAlgorithm},
                            {"threads", params.threads}};

    const double p0 = dist.probs[0];
    Json analytic;
    analytic["relevant_variables"] = relevant_variables_json(f);
    analytic["failure_probability_per_run"] = p0;
    analytic["learn_at_least_one_per_run"] = 1.0 - p0;
    analytic["all_trials_failure_probability"] =
        std::pow(p0, static_cast<double>(params.trials));
    Json per_var = Json::object();
    for (int j = 1; j <= dist.n; ++j) {
        const std::uint32_t bit = var_bit(dist.n, j);
        double q = 0.0;
        for (std::uint32_t y = 0; y < dist.probs.size(); ++y) {
            if (y & bit) q += dist.probs[y];
        }
        if (q > 0.0) per_var[std::to_string(j)] = q;
    }
    analytic["per_variable_learn_probability"] = std::move(per_var);

    result["analytic"] = std::move(analytic);
    result["empirical"] = empirical_json(r);
    return result;
}

Json amplify_result_json(const FunctionSpec& fn, const RunParameters& params,
                         const BooleanFunction& f, const AmplifierPlan& plan,
                         int iterations_used, bool auto_iterations, const StateVector& state,
                         const LearningResult& r, const std::optional<GammaEstimate>& estimate) {
    Json result;
    result["function"] = function_json(fn);
    result["parameters"] = {{"trials", params.trials}, {"seed", params.seed},
                            {"rng", kRngAlgorithm},    {"threads", params.threads},
                            {"k", plan.k},             {"iterations", iterations_used},
                            {"auto_iterations", auto_iterations}};

    Json plan_json;
    plan_json["gamma"] = plan.gamma;
    plan_json["theta"] = plan.theta;
    plan_json["exact_iterations"] =
        std::isfinite(plan.exact_iterations) ? Json(plan.exact_iterations) : Json(nullptr);
    plan_json["optimal_iterations"] = plan.optimal_iterations;
    plan_json["amplifiable"] = plan.amplifiable;
    if (plan.gamma > 0.0 && plan.gamma < 1.0) {
        plan_json["iteration_upper_bound"] = iteration_bound_check(plan.gamma).bound;
    }
    result["plan"] = std::move(plan_json);

    Json analytic;
    analytic["relevant_variables"] = relevant_variables_json(f);
    analytic["success_probability_per_trial"] =
        amplified_success_probability(plan, iterations_used);
    analytic["state_target_mass"] = weight_mass(state, plan.k);
    Json curve = Json::array();
    for (int l = 0; l <= iterations_used; ++l) {
        curve.push_back({{"iterations", l},
                         {"probability", amplified_success_probability(plan, l)}});
    }
    analytic["success_curve"] = std::move(curve);
    analytic["oracle_queries_per_trial"] = 1 + 2 * static_cast<std::uint64_t>(iterations_used);
    result["analytic"] = std::move(analytic);

    result["empirical"] = empirical_json(r, plan.k);

    if (estimate) {
        result["gamma_estimate"] = {{"samples", estimate->samples},
                                    {"gamma_hat", estimate->gamma_hat},
                                    {"oracle_queries", estimate->oracle_queries}};
    }
    return result;
}

Json spectrum_result_json(const FunctionSpec& fn, const Spectrum& s) {
    Json rows = Json::array();
    for (std::uint32_t y = 0; y < s.coeffs.size(); ++y) {
        const double c = s.coeffs[y];
        rows.push_back({{"y", bit_string(y, s.n)}, {"c", c}, {"p", c * c}});
    }
    Json result;
    result["function"] = function_json(fn);
    result["spectrum"] = std::move(rows);
    return result;
}

Json predict_result_json(int m_min, int m_max) {
    Json rows = Json::array();
    for (int m = m_min; m <= m_max; ++m) {
        const ProductFamilyPrediction p = product_prediction(m);
        rows.push_back({{"m", p.m},
                        {"c0", p.c0},
                        {"supported_magnitude", p.supported_magnitude},
                        {"gamma_full_weight", p.gamma_full_weight},
                        {"rounds_2r", p.rounds_2r},
                        {"p_fail_all", p.p_fail_all},
                        {"p_not_learn_one", p.p_not_learn_one}});
    }
    Json result;
    result["m_min"] = m_min;
    result["m_max"] = m_max;
    result["rows"] = std::move(rows);
    return result;
}

Json report_envelope(const std::string& command, Json result) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["created_utc"] = utc_timestamp();
    j["result"] = std::move(result);
    return j;
}

Json error_envelope(const std::string& command, const std::string& code,
                    const std::string& message, Json context) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["created_utc"] = utc_timestamp();
    Json error;
    error["code"] = code;
    error["message"] = message;
    if (!context.empty()) error["context"] = std::move(context);
    j["error"] = std::move(error);
    return j;
}

}  // namespace juntalab

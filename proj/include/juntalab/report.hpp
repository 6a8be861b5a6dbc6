#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "juntalab/amplify.hpp"
#include "juntalab/analytics.hpp"
#include "juntalab/boolfn.hpp"
#include "juntalab/bv_sampler.hpp"
#include "juntalab/spectrum.hpp"

namespace juntalab {

// Ordered JSON keeps key insertion order, so report bodies built from the
// same inputs serialize byte-for-byte identically.
using Json = nlohmann::ordered_json;

inline constexpr char kToolName[] = "juntalab";
inline constexpr char kToolVersion[] = "0.1.0";

struct FunctionSpec {
    std::string source;      // "anf" or "table"
    std::string anf;         // when source == "anf"
    std::string table_file;  // when source == "table"
    int n = 0;
};

struct RunParameters {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int threads = 1;
};

std::string utc_timestamp();

Json function_json(const FunctionSpec& fn);

// Empirical block shared by both run commands. When success_threshold is
// set, the fraction of outcomes with popcount >= k is reported as well.
Json empirical_json(const LearningResult& r, std::optional<int> success_threshold = {});

// Report bodies are pure functions of their inputs; the envelope adds tool
// identity and the one non-reproducible field, a creation timestamp.
Json bv_result_json(const FunctionSpec& fn, const RunParameters& params,
                    const BooleanFunction& f, const OutcomeDistribution& dist,
                    const LearningResult& r);
Json amplify_result_json(const FunctionSpec& fn, const RunParameters& params,
                         const BooleanFunction& f, const AmplifierPlan& plan,
                         int iterations_used, bool auto_iterations, const StateVector& state,
                         const LearningResult& r, const std::optional<GammaEstimate>& estimate);
Json spectrum_result_json(const FunctionSpec& fn, const Spectrum& s);
Json predict_result_json(int m_min, int m_max);

Json report_envelope(const std::string& command, Json result);
Json error_envelope(const std::string& command, const std::string& code,
                    const std::string& message, Json context = Json::object());

}  // namespace juntalab

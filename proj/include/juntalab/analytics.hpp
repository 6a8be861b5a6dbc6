#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "juntalab/boolfn.hpp"

namespace juntalab {

// Closed forms for the worst-case family f = x1 * ... * xm (embedded in any
// n >= m): the all-zero outcome keeps weight c0^2 per run, every other
// supported outcome has coefficient magnitude 2^{1-m}, and the full-weight
// outcome (all m positions set) carries gamma = 2^{2-2m}.
struct ProductFamilyPrediction {
    int m = 0;
    double c0 = 0.0;                  // 1 - 2^{1-m}
    double supported_magnitude = 0.0; // 2^{1-m}
    double gamma_full_weight = 0.0;   // 2^{2-2m}, the k = m amplification weight
    long long rounds_2r = 0;          // nearest integer to pi 2^{m-2}
    double p_fail_all = 0.0;          // (1 - 2^{1-m})^(pi 2^{m-1})
    double p_not_learn_one = 0.0;     // (1 - 2^{1-m})^(pi 2^{m-2})
};

ProductFamilyPrediction product_prediction(int m);

// Rows for m = 2..30. The last row must sit within 0.01 of the limiting
// values e^{-pi} (fail everywhere) and e^{-pi/2} (miss a fixed variable);
// a violation throws, since it would mean the closed forms are wrong.
std::vector<ProductFamilyPrediction> limit_checks();

inline constexpr double kLimitFailAll = 0.04321391826377226;      // e^{-pi}
inline constexpr double kLimitNotLearnOne = 0.20787957635076193;  // e^{-pi/2}

// Deterministic n+1-query baseline: read f at the all-ones input, then flip
// one variable at a time and report every position that changes the output.
// Sound (never reports an irrelevant variable) but incomplete in general.
struct ClassicalProbeResult {
    VariableSet variables;
    std::uint64_t oracle_queries = 0;
};
ClassicalProbeResult classical_probe(const BooleanFunction& f);

void write_predictions_csv(std::ostream& out,
                           const std::vector<ProductFamilyPrediction>& rows);

}  // namespace juntalab

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "juntalab/boolfn.hpp"
#include "juntalab/bv_sampler.hpp"
#include "juntalab/spectrum.hpp"

namespace juntalab {

// Amplification setup for boosting the total outcome weight on |y| >= k.
// gamma is that weight before amplification; theta = 2 asin(sqrt(gamma)) is
// the rotation angle one amplification round applies, so after l rounds the
// captured weight is sin^2((2l+1) theta / 2).
struct AmplifierPlan {
    int n = 0;
    int k = 0;
    double gamma = 0.0;
    double theta = 0.0;
    double exact_iterations = 0.0;  // R(gamma); +infinity when gamma == 0
    int optimal_iterations = 0;     // nearest integer, halves away from zero
    bool amplifiable = false;       // gamma > 0
};

AmplifierPlan make_plan(const Spectrum& s, int k);

// R(gamma) = arccos(sqrt(gamma)) / (2 arcsin(sqrt(gamma))), the real-valued
// round count that would rotate the state exactly onto the target subspace.
// Defined for gamma in (0,1]; R(1) = 0.
double optimal_iterations_exact(double gamma);

// Captured weight after `iterations` rounds, sin^2((2l+1) theta / 2).
double amplified_success_probability(const AmplifierPlan& plan, int iterations);

// Exact round count next to its closed-form ceiling pi / (4 sqrt(gamma)).
// exact < bound everywhere on (0,1), with the gap closing as gamma -> 0.
struct IterationBound {
    double exact = 0.0;
    double bound = 0.0;
};
IterationBound iteration_bound_check(double gamma);

// Full 2^n-amplitude state. Real throughout: the starting overlap vector is
// real and every amplification factor is a signed permutation-free real
// orthogonal map, so no imaginary parts ever appear.
struct StateVector {
    int n = 0;
    std::vector<double> amplitudes;
};

// State after `iterations` amplification rounds applied to the overlap state
// of f, with the popcount >= k component as the target. Dense simulation,
// capped at n <= 20.
StateVector grover_statevector(const BooleanFunction& f, int k, int iterations);

double state_norm(const StateVector& v);
double weight_mass(const StateVector& v, int k);  // total probability on |y| >= k
OutcomeDistribution measurement_distribution(const StateVector& v);

// Trial batches drawn from the amplified state. Auto mode uses the plan's
// optimal round count and refuses unamplifiable setups; an explicit
// `iterations` overrides it. Each trial costs 1 + 2 * iterations queries.
LearningResult amplified_learning_run(const BooleanFunction& f, int k, std::uint64_t trials,
                                      Rng& rng, std::optional<int> iterations = std::nullopt);
LearningResult amplified_learning_run_seeded(const BooleanFunction& f, int k,
                                             std::uint64_t trials, std::uint64_t seed,
                                             std::optional<int> iterations = std::nullopt,
                                             int threads = 1);

// Plain sampling estimate of gamma from unamplified runs: the fraction of
// outcomes with popcount >= k. Costs exactly `samples` oracle queries.
struct GammaEstimate {
    double gamma_hat = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t oracle_queries = 0;
};
GammaEstimate estimate_gamma(const BooleanFunction& f, int k, std::uint64_t samples, Rng& rng);

// Rows "y,amplitude,probability,popcount".
void write_statevector_csv(std::ostream& out, const StateVector& v);

}  // namespace juntalab

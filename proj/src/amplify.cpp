#include "juntalab/amplify.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace juntalab {

AmplifierPlan make_plan(const Spectrum& s, int k) {
    if (k < 0 || k > s.n) {
        throw std::invalid_argument("threshold k must be in 0..n");
    }
    AmplifierPlan plan;
    plan.n = s.n;
    plan.k = k;

    // Dyadic squares summed in index order: exact up to the n <= 24 cap.
    double gamma = 0.0;
    for (std::size_t y = 0; y < s.coeffs.size(); ++y) {
        if (std::popcount(static_cast<std::uint32_t>(y)) >= k) {
            gamma += s.coeffs[y] * s.coeffs[y];
        }
    }
    plan.gamma = gamma;
    plan.amplifiable = gamma > 0.0;
    if (!plan.amplifiable) {
        plan.theta = 0.0;
        plan.exact_iterations = std::numeric_limits<double>::infinity();
        plan.optimal_iterations = 0;
        return plan;
    }
    plan.theta = 2.0 * std::asin(std::sqrt(gamma));
    plan.exact_iterations = optimal_iterations_exact(gamma);
    plan.optimal_iterations = static_cast<int>(std::llround(plan.exact_iterations));
    return plan;
}

double optimal_iterations_exact(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0) {
        throw DomainError("exact round count needs gamma in (0,1]");
    }
    const double root = std::sqrt(gamma);
    return std::acos(root) / (2.0 * std::asin(root));
}

double amplified_success_probability(const AmplifierPlan& plan, int iterations) {
    if (iterations < 0) {
        throw std::invalid_argument("iteration count must be >= 0");
    }
    if (!plan.amplifiable) return 0.0;  // nothing to rotate toward
    const double s = std::sin((2.0 * iterations + 1.0) * plan.theta / 2.0);
    return s * s;
}

IterationBound iteration_bound_check(double gamma) {
    if (!(gamma > 0.0) || !(gamma < 1.0)) {
        throw DomainError("iteration bound is stated for gamma strictly inside (0,1)");
    }
    return IterationBound{optimal_iterations_exact(gamma),
                          std::numbers::pi / (4.0 * std::sqrt(gamma))};
}

StateVector grover_statevector(const BooleanFunction& f, int k, int iterations) {
    const int n = f.var_count();
    if (n > 20) {
        throw DomainError("dense state simulation is capped at n = 20");
    }
    if (k < 0 || k > n) {
        throw std::invalid_argument("threshold k must be in 0..n");
    }
    if (iterations < 0) {
        throw std::invalid_argument("iteration count must be >= 0");
    }

    Spectrum s = spectrum_fast(f);
    StateVector v{n, std::move(s.coeffs)};
    auto& amp = v.amplitudes;
    const std::size_t size = amp.size();

    // One round, rightmost factor first: target-phase flip, then the
    // conjugated phase oracle, the reflection about the all-zero outcome, and
    // the conjugated phase oracle again. Each Hadamard layer is applied as an
    // unnormalised butterfly; the four 2^{-n/2} factors of a round commute
    // with every sign flip, so they collapse into one 2^{-2n} scaling pass.
    const double round_scale = std::ldexp(1.0, -2 * n);
    for (int round = 0; round < iterations; ++round) {
        for (std::size_t y = 0; y < size; ++y) {
            if (std::popcount(static_cast<std::uint32_t>(y)) >= k) amp[y] = -amp[y];
        }
        walsh_butterfly(amp);
        for (std::size_t x = 0; x < size; ++x) {
            if (f.value(static_cast<std::uint32_t>(x))) amp[x] = -amp[x];
        }
        walsh_butterfly(amp);
        for (std::size_t y = 1; y < size; ++y) amp[y] = -amp[y];
        walsh_butterfly(amp);
        for (std::size_t x = 0; x < size; ++x) {
            if (f.value(static_cast<std::uint32_t>(x))) amp[x] = -amp[x];
        }
        walsh_butterfly(amp);
        for (double& a : amp) a *= round_scale;
    }
    return v;
}

double state_norm(const StateVector& v) {
    double sum = 0.0;
    for (double a : v.amplitudes) sum += a * a;
    return std::sqrt(sum);
}

double weight_mass(const StateVector& v, int k) {
    double mass = 0.0;
    for (std::size_t y = 0; y < v.amplitudes.size(); ++y) {
        if (std::popcount(static_cast<std::uint32_t>(y)) >= k) {
            mass += v.amplitudes[y] * v.amplitudes[y];
        }
    }
    return mass;
}

OutcomeDistribution measurement_distribution(const StateVector& v) {
    OutcomeDistribution d{v.n, std::vector<double>(v.amplitudes.size())};
    for (std::size_t y = 0; y < v.amplitudes.size(); ++y) {
        d.probs[y] = v.amplitudes[y] * v.amplitudes[y];
    }
    return d;
}

namespace {

int resolve_iterations(const AmplifierPlan& plan, std::optional<int> iterations) {
    if (iterations) {
        if (*iterations < 0) throw std::invalid_argument("iteration count must be >= 0");
        return *iterations;
    }
    if (!plan.amplifiable) {
        throw DomainError("unamplifiable: no outcome weight at or above the threshold");
    }
    return plan.optimal_iterations;
}

}  // namespace

LearningResult amplified_learning_run(const BooleanFunction& f, int k, std::uint64_t trials,
                                      Rng& rng, std::optional<int> iterations) {
    const AmplifierPlan plan = make_plan(spectrum_fast(f), k);
    const int rounds = resolve_iterations(plan, iterations);
    const OutcomeSampler sampler(measurement_distribution(grover_statevector(f, k, rounds)));
    return run_trials(sampler, trials, rng, 1 + 2 * static_cast<std::uint64_t>(rounds));
}

LearningResult amplified_learning_run_seeded(const BooleanFunction& f, int k,
                                             std::uint64_t trials, std::uint64_t seed,
                                             std::optional<int> iterations, int threads) {
    const AmplifierPlan plan = make_plan(spectrum_fast(f), k);
    const int rounds = resolve_iterations(plan, iterations);
    const OutcomeSampler sampler(measurement_distribution(grover_statevector(f, k, rounds)));
    return run_trials_seeded(sampler, trials, seed, threads,
                             1 + 2 * static_cast<std::uint64_t>(rounds));
}

GammaEstimate estimate_gamma(const BooleanFunction& f, int k, std::uint64_t samples, Rng& rng) {
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    const int n = f.var_count();
    if (k < 0 || k > n) throw std::invalid_argument("threshold k must be in 0..n");
    const BvSampler sampler(f);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (std::popcount(sampler.sampler().sample(rng)) >= k) ++hits;
    }
    return GammaEstimate{static_cast<double>(hits) / static_cast<double>(samples), samples,
                         samples};
}

void write_statevector_csv(std::ostream& out, const StateVector& v) {
    out << "y,amplitude,probability,popcount\n";
    char buf[80];
    for (std::uint32_t y = 0; y < v.amplitudes.size(); ++y) {
        const double a = v.amplitudes[y];
        out << bit_string(y, v.n);
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%d", a, a * a, std::popcount(y));
        out << buf << "\n";
    }
}

}  // namespace juntalab

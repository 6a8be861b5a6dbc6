#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "juntalab/boolfn.hpp"
#include "juntalab/spectrum.hpp"

namespace juntalab {

// One engine everywhere, recorded by name in reports so a run can be audited.
using Rng = std::mt19937_64;
inline constexpr char kRngAlgorithm[] = "mt19937_64";

// 53-bit uniform draw in [0,1). Built by hand from the raw 64-bit output so
// results do not depend on a standard library's distribution internals.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// Stream used for trial block `block` of a run seeded with `seed`. Blocks get
// independent, platform-stable streams, which is what makes the parallel
// driver reproducible.
Rng make_block_rng(std::uint64_t seed, std::uint64_t block);

struct BvRunRecord {
    std::uint64_t trial_index = 0;
    std::uint32_t outcome = 0;       // index-space bits, x1 first when printed
    VariableSet learned_positions;   // variables marked by the outcome
};

// Tally of a batch of single-query runs. merge() is commutative and
// associative over disjoint batches, so block results can be combined in any
// grouping without changing the totals.
struct LearningResult {
    int n = 0;
    std::uint64_t trials = 0;
    VariableSet union_learned;
    std::vector<std::uint64_t> per_variable_hits;  // index j-1 counts runs marking x_j
    std::uint64_t failures = 0;                    // all-zero outcomes
    std::uint64_t oracle_queries = 0;
    std::map<std::uint32_t, std::uint64_t> outcome_histogram;

    void record(std::uint32_t outcome);
    void merge(const LearningResult& other);

    friend bool operator==(const LearningResult&, const LearningResult&) = default;
};

inline std::uint64_t query_count(const LearningResult& r) { return r.oracle_queries; }

// Inverse-CDF sampling over a fixed outcome distribution. The prefix sums of
// the squared coefficients are exact dyadics for n <= 24, so outcomes with
// probability exactly zero are never produced.
class OutcomeSampler {
public:
    explicit OutcomeSampler(const OutcomeDistribution& dist);

    std::uint32_t sample(Rng& rng) const;
    int var_count() const { return n_; }

private:
    int n_ = 0;
    std::vector<double> cdf_;
    std::uint32_t last_supported_ = 0;
};

// Caches the spectrum-derived distribution for a function once; each run is
// then a single O(n) draw standing in for one oracle query.
class BvSampler {
public:
    explicit BvSampler(const BooleanFunction& f);

    BvRunRecord run_once(Rng& rng, std::uint64_t trial_index = 0) const;
    const OutcomeDistribution& distribution() const { return dist_; }
    const OutcomeSampler& sampler() const { return sampler_; }
    int var_count() const { return dist_.n; }

private:
    OutcomeDistribution dist_;
    OutcomeSampler sampler_;
};

BvRunRecord run_bv_once(const BooleanFunction& f, Rng& rng);

// Sequential trial loop on a caller-owned stream. queries_per_trial is the
// oracle cost a single draw stands for (1 for a plain run).
LearningResult run_trials(const OutcomeSampler& sampler, std::uint64_t trials, Rng& rng,
                          std::uint64_t queries_per_trial = 1);

// Deterministic parallel driver: trials are split into fixed blocks of 8192,
// block b draws from make_block_rng(seed, b), and blocks merge in index
// order. The outcome is a pure function of (distribution, trials, seed),
// whatever the thread count.
LearningResult run_trials_seeded(const OutcomeSampler& sampler, std::uint64_t trials,
                                 std::uint64_t seed, int threads = 1,
                                 std::uint64_t queries_per_trial = 1);

LearningResult learn_variables(const BooleanFunction& f, std::uint64_t trials, Rng& rng);
LearningResult learn_variables_seeded(const BooleanFunction& f, std::uint64_t trials,
                                      std::uint64_t seed, int threads = 1);

}  // namespace juntalab

#include "juntalab/bv_sampler.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace juntalab {

namespace {

constexpr std::uint64_t kTrialBlock = 8192;

}  // namespace

Rng make_block_rng(std::uint64_t seed, std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return Rng(seq);
}

void LearningResult::record(std::uint32_t outcome) {
    ++trials;
    ++outcome_histogram[outcome];
    if (outcome == 0) {
        ++failures;
        return;
    }
    for (int j = 1; j <= n; ++j) {
        if (outcome & var_bit(n, j)) {
            union_learned.add(j);
            ++per_variable_hits[static_cast<std::size_t>(j - 1)];
        }
    }
}

void LearningResult::merge(const LearningResult& other) {
    if (other.trials == 0) return;
    if (trials == 0) {
        *this = other;
        return;
    }
    if (n != other.n) {
        throw std::invalid_argument("merge: variable counts differ");
    }
    trials += other.trials;
    union_learned |= other.union_learned;
    for (std::size_t i = 0; i < per_variable_hits.size(); ++i) {
        per_variable_hits[i] += other.per_variable_hits[i];
    }
    failures += other.failures;
    oracle_queries += other.oracle_queries;
    for (const auto& [outcome, count] : other.outcome_histogram) {
        outcome_histogram[outcome] += count;
    }
}

OutcomeSampler::OutcomeSampler(const OutcomeDistribution& dist)
    : n_(dist.n), cdf_(dist.probs.size()) {
    double total = 0.0;
    for (std::size_t y = 0; y < dist.probs.size(); ++y) {
        const double p = dist.probs[y];
        if (p < 0.0) throw std::invalid_argument("negative probability");
        if (p > 0.0) last_supported_ = static_cast<std::uint32_t>(y);
        total += p;
        cdf_[y] = total;
    }
    if (total <= 0.0) throw std::invalid_argument("distribution has no mass");
}

std::uint32_t OutcomeSampler::sample(Rng& rng) const {
    const double u = uniform_unit(rng);
    // First index with cdf > u. Zero-probability outcomes have an empty
    // half-open slot and are skipped, which keeps them impossible exactly.
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) return last_supported_;  // u above total (rounding slack)
    return static_cast<std::uint32_t>(it - cdf_.begin());
}

BvSampler::BvSampler(const BooleanFunction& f)
    : dist_(outcome_distribution(spectrum_fast(f))), sampler_(dist_) {}

BvRunRecord BvSampler::run_once(Rng& rng, std::uint64_t trial_index) const {
    const std::uint32_t outcome = sampler_.sample(rng);
    return BvRunRecord{trial_index, outcome, VariableSet::from_outcome(outcome, dist_.n)};
}

BvRunRecord run_bv_once(const BooleanFunction& f, Rng& rng) {
    return BvSampler(f).run_once(rng);
}

LearningResult run_trials(const OutcomeSampler& sampler, std::uint64_t trials, Rng& rng,
                          std::uint64_t queries_per_trial) {
    if (trials == 0) throw std::invalid_argument("trial count must be positive");
    LearningResult result;
    result.n = sampler.var_count();
    result.per_variable_hits.assign(static_cast<std::size_t>(result.n), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        result.record(sampler.sample(rng));
    }
    result.oracle_queries = trials * queries_per_trial;
    return result;
}

LearningResult run_trials_seeded(const OutcomeSampler& sampler, std::uint64_t trials,
                                 std::uint64_t seed, int threads,
                                 std::uint64_t queries_per_trial) {
    if (trials == 0) throw std::invalid_argument("trial count must be positive");

    const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<LearningResult> block_results(static_cast<std::size_t>(blocks));

    auto run_block = [&](std::uint64_t b) {
        const std::uint64_t count =
            std::min(kTrialBlock, trials - b * kTrialBlock);
        Rng rng = make_block_rng(seed, b);
        block_results[static_cast<std::size_t>(b)] =
            run_trials(sampler, count, rng, queries_per_trial);
    };

    int workers = threads < 1 ? 1 : threads;
    workers = static_cast<int>(std::min<std::uint64_t>(workers, blocks));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
                    run_block(b);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    LearningResult merged;
    for (const auto& r : block_results) merged.merge(r);
    return merged;
}

LearningResult learn_variables(const BooleanFunction& f, std::uint64_t trials, Rng& rng) {
    return run_trials(BvSampler(f).sampler(), trials, rng, 1);
}

LearningResult learn_variables_seeded(const BooleanFunction& f, std::uint64_t trials,
                                      std::uint64_t seed, int threads) {
    return run_trials_seeded(BvSampler(f).sampler(), trials, seed, threads, 1);
}

}  // namespace juntalab

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "juntalab/amplify.hpp"
#include "juntalab/analytics.hpp"
#include "juntalab/bv_sampler.hpp"
#include "juntalab/spectrum.hpp"
#include "test_util.hpp"

using namespace juntalab;

namespace {

BooleanFunction top_product(int n, int m) {
    std::uint32_t support = 0;
    for (int j = 1; j <= m; ++j) support |= var_bit(n, j);
    return BooleanFunction::product(n, support);
}

}  // namespace

TEST_CASE("closed forms for small product families") {
    const ProductFamilyPrediction p2 = product_prediction(2);
    CHECK(p2.c0 == 0.5);
    CHECK(p2.supported_magnitude == 0.5);
    CHECK(p2.gamma_full_weight == 0.25);
    CHECK(p2.rounds_2r == 3);
    CHECK(std::abs(p2.p_fail_all - 0.012840228555486584) <= 1e-15);
    CHECK(std::abs(p2.p_not_learn_one - 0.11331473229676088) <= 1e-15);
    CHECK(p2.p_not_learn_one == std::pow(0.5, std::numbers::pi));

    const ProductFamilyPrediction p1 = product_prediction(1);
    CHECK(p1.c0 == 0.0);
    CHECK(p1.supported_magnitude == 1.0);
    CHECK(p1.gamma_full_weight == 1.0);
    CHECK(p1.rounds_2r == 2);
    CHECK(p1.p_fail_all == 0.0);
    CHECK(p1.p_not_learn_one == 0.0);

    const long long expect_rounds[] = {3, 6, 13, 25, 50};
    for (int m = 2; m <= 6; ++m) {
        CHECK(product_prediction(m).rounds_2r == expect_rounds[m - 2]);
    }
    CHECK_THROWS_AS(product_prediction(0), std::invalid_argument);
}

TEST_CASE("predictions agree exactly with computed spectra") {
    for (int m = 1; m <= 10; ++m) {
        const ProductFamilyPrediction pred = product_prediction(m);
        const int n = std::min(14, m + 2);
        const Spectrum s = spectrum_fast(top_product(n, m));
        CHECK(s.coeffs[0] == pred.c0);
        for (std::uint32_t y = 1; y < s.coeffs.size(); ++y) {
            if (s.coeffs[y] != 0.0) {
                REQUIRE(std::abs(s.coeffs[y]) == pred.supported_magnitude);
            }
        }
        CHECK(make_plan(s, m).gamma == pred.gamma_full_weight);
    }
}

TEST_CASE("supported weights satisfy the restricted norm identity") {
    for (int m = 1; m <= 30; ++m) {
        const ProductFamilyPrediction p = product_prediction(m);
        const double total =
            p.c0 * p.c0 +
            (std::ldexp(1.0, m) - 1.0) * p.supported_magnitude * p.supported_magnitude;
        CHECK(std::abs(total - 1.0) <= 1e-15);
    }
}

TEST_CASE("failure chances increase toward their limits") {
    const std::vector<ProductFamilyPrediction> rows = limit_checks();
    REQUIRE(rows.size() == 29);
    CHECK(rows.front().m == 2);
    CHECK(rows.back().m == 30);

    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].p_fail_all > rows[i - 1].p_fail_all);
        CHECK(rows[i].p_not_learn_one > rows[i - 1].p_not_learn_one);
        CHECK(rows[i].p_fail_all < kLimitFailAll);
        CHECK(rows[i].p_not_learn_one < kLimitNotLearnOne);
    }
    CHECK(std::abs(rows.back().p_fail_all - kLimitFailAll) < 0.01);
    CHECK(std::abs(rows.back().p_not_learn_one - kLimitNotLearnOne) < 0.01);
    CHECK(std::abs(kLimitFailAll - std::exp(-std::numbers::pi)) <= 1e-15);
    CHECK(std::abs(kLimitNotLearnOne - std::exp(-std::numbers::pi / 2.0)) <= 1e-15);
}

TEST_CASE("observed failure rates match the closed form across the family") {
    Rng rng(606060);
    for (int m = 2; m <= 6; ++m) {
        const int trials = 3;
        const int reps = 20000;
        const BvSampler sampler(top_product(m + 1, m));
        int empty_unions = 0;
        for (int i = 0; i < reps; ++i) {
            if (run_trials(sampler.sampler(), trials, rng).union_learned.empty()) {
                ++empty_unions;
            }
        }
        const double c0 = product_prediction(m).c0;
        const double predicted = std::pow(c0 * c0, trials);
        const double freq = static_cast<double>(empty_unions) / reps;
        const double sigma = std::sqrt(predicted * (1.0 - predicted) / reps);
        CHECK(std::abs(freq - predicted) <= 3.0 * sigma);
    }
}

TEST_CASE("the n+1 query probe finds every variable of a product") {
    for (int m = 1; m <= 8; ++m) {
        const int n = m + 2;
        const ClassicalProbeResult probe = classical_probe(top_product(n, m));
        CHECK(probe.oracle_queries == static_cast<std::uint64_t>(n) + 1);
        std::vector<int> expect(static_cast<std::size_t>(m));
        for (int j = 1; j <= m; ++j) expect[static_cast<std::size_t>(j - 1)] = j;
        CHECK(probe.variables.members() == expect);
    }

    const ClassicalProbeResult parity = classical_probe(BooleanFunction::linear(6, 0b010011));
    CHECK(parity.variables == VariableSet::from_outcome(0b010011, 6));
}

TEST_CASE("the probe is sound but provably incomplete") {
    // f = x1*x2 + x1 vanishes at the all-ones point together with all its
    // single flips except x2, so the probe reports {2} while x1 is relevant.
    const BooleanFunction f = parse_anf("x1*x2 + x1", 4);
    const ClassicalProbeResult probe = classical_probe(f);
    const VariableSet truth = relevant_variables_bruteforce(f);
    CHECK(probe.variables.members() == std::vector<int>{2});
    CHECK(truth.members() == std::vector<int>{1, 2});
    CHECK(probe.variables.subset_of(truth));

    Rng rng(321);
    for (int trial = 0; trial < 50; ++trial) {
        const BooleanFunction g = testutil::random_table_function(rng, 6);
        const ClassicalProbeResult r = classical_probe(g);
        CHECK(r.oracle_queries == 7);
        CHECK(r.variables.subset_of(relevant_variables_bruteforce(g)));
    }
}

TEST_CASE("prediction csv has one row per family member") {
    std::ostringstream out;
    write_predictions_csv(out, {product_prediction(2), product_prediction(3)});
    const std::string text = out.str();
    CHECK(text.rfind("m,c0,supported_magnitude,gamma_full_weight,rounds_2r,"
                     "p_fail_all,p_not_learn_one\n", 0) == 0);
    CHECK(text.find("\n2,0.5,0.5,0.25,3,") != std::string::npos);
    CHECK(text.find("\n3,0.75,0.25,0.0625,6,") != std::string::npos);
}

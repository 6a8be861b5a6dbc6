#include <doctest.h>

#include <cmath>
#include <sstream>

#include "juntalab/spectrum.hpp"
#include "test_util.hpp"

using namespace juntalab;

namespace {

double parseval_sum(const Spectrum& s) {
    double total = 0.0;
    for (double c : s.coeffs) total += c * c;
    return total;
}

}  // namespace

TEST_CASE("two-variable conjunction has the textbook overlap vector") {
    const BooleanFunction f = parse_anf("x1*x2", 2);
    const Spectrum s = spectrum_naive(f);
    CHECK(s.coeffs[0b00] == 0.5);
    CHECK(s.coeffs[0b01] == 0.5);
    CHECK(s.coeffs[0b10] == 0.5);
    CHECK(s.coeffs[0b11] == -0.5);
    CHECK(spectrum_fast(f).coeffs == s.coeffs);
}

TEST_CASE("parity functions give an exact point mass") {
    const std::uint32_t mask = 0b10110;
    const Spectrum s = spectrum_fast(BooleanFunction::linear(5, mask));
    for (std::uint32_t y = 0; y < 32; ++y) {
        CHECK(s.coeffs[y] == (y == mask ? 1.0 : 0.0));
    }
    // Constants are the two degenerate parities.
    CHECK(spectrum_fast(BooleanFunction::constant(3, 0)).coeffs[0] == 1.0);
    CHECK(spectrum_fast(BooleanFunction::constant(3, 1)).coeffs[0] == -1.0);
}

TEST_CASE("fast transform equals the naive double loop on random functions") {
    Rng rng(31415);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const BooleanFunction f = (trial % 2 == 0)
            ? testutil::random_table_function(rng, n)
            : parse_anf(testutil::to_text(testutil::random_anf(rng, n)), n);
        const Spectrum fast = spectrum_fast(f);
        const Spectrum naive = spectrum_naive(f);
        REQUIRE(fast.coeffs.size() == naive.coeffs.size());
        for (std::size_t y = 0; y < fast.coeffs.size(); ++y) {
            REQUIRE(std::abs(fast.coeffs[y] - naive.coeffs[y]) <= 1e-12);
        }
        CHECK(std::abs(parseval_sum(fast) - 1.0) <= 1e-12);

        // Coefficients are dyadic: c * 2^{n-1} is an integer, exactly.
        for (double c : fast.coeffs) {
            const double scaled = c * std::ldexp(1.0, n - 1);
            CHECK(scaled == std::floor(scaled));
        }
    }
}

TEST_CASE("the naive route is capped, the fast one is not") {
    CHECK_THROWS_AS(spectrum_naive(BooleanFunction::constant(15, 0)), DomainError);
    CHECK_NOTHROW(spectrum_fast(BooleanFunction::constant(15, 0)));
}

TEST_CASE("outcomes outside a junta's support have exactly zero overlap") {
    Rng rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 7);  // up to 12
        const int m = 1 + static_cast<int>(rng() % 4);
        const testutil::Junta junta = testutil::random_junta(rng, n, m);
        const Spectrum s = spectrum_fast(junta.f);
        for (std::uint32_t y = 0; y < s.coeffs.size(); ++y) {
            if (y & ~junta.support_index_mask) {
                REQUIRE(s.coeffs[y] == 0.0);
            }
        }
    }
}

TEST_CASE("embedded product keeps the closed-form coefficient layout") {
    const int n = 10;
    const int m = 4;
    std::uint32_t support = 0;
    for (int j = 1; j <= m; ++j) support |= var_bit(n, j);
    const Spectrum s = spectrum_fast(BooleanFunction::product(n, support));

    CHECK(s.coeffs[0] == 0.875);  // 1 - 2^{1-m}
    int nonzero = 0;
    for (std::uint32_t y = 1; y < s.coeffs.size(); ++y) {
        if (s.coeffs[y] != 0.0) {
            ++nonzero;
            CHECK((y & ~support) == 0u);
            CHECK(std::abs(s.coeffs[y]) == 0.125);  // 2^{1-m}
        }
    }
    CHECK(nonzero == (1 << m) - 1);
}

TEST_CASE("outcome distribution is the squared spectrum") {
    const BooleanFunction f = parse_anf("x1*x2", 2);
    const OutcomeDistribution d = outcome_distribution(spectrum_fast(f));
    CHECK(d.probs == std::vector<double>{0.25, 0.25, 0.25, 0.25});

    std::uint32_t support = var_bit(8, 1) | var_bit(8, 2) | var_bit(8, 3) | var_bit(8, 4);
    const OutcomeDistribution big =
        outcome_distribution(spectrum_fast(BooleanFunction::product(8, support)));
    CHECK(big.probs[0] == 0.765625);  // (7/8)^2 = 49/64
    double total = 0.0;
    for (double p : big.probs) total += p;
    CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("butterfly applied twice is 2^n times the identity") {
    Rng rng(5);
    std::vector<double> v(64);
    for (auto& x : v) x = static_cast<double>(static_cast<int>(rng() % 17) - 8);
    std::vector<double> expect = v;
    walsh_butterfly(v);
    walsh_butterfly(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i] == 64.0 * expect[i]);  // integer arithmetic, no rounding
    }
    std::vector<double> bad(3);
    CHECK_THROWS_AS(walsh_butterfly(bad), std::invalid_argument);
}

TEST_CASE("spectrum csv is stable down to the byte") {
    const Spectrum s = spectrum_fast(parse_anf("x1+x2", 2));
    std::ostringstream out;
    write_spectrum_csv(out, s);
    CHECK(out.str() == "y,c,p\n00,0,0\n01,0,0\n10,0,0\n11,1,1\n");
}

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "juntalab/boolfn.hpp"

namespace juntalab {

// Overlap coefficients of (-1)^f against the parity characters:
//   coeffs[y] = 2^{-n} * sum_x (-1)^{f(x) + x.y}
// Every coefficient is an integer multiple of 2^{1-n}, so the doubles here
// are exact, and sum_y coeffs[y]^2 == 1.
struct Spectrum {
    int n = 0;
    std::vector<double> coeffs;
};

// Single-run outcome probabilities, probs[y] = coeffs[y]^2. Kept as a plain
// squared copy: no renormalisation, so unitarity bugs upstream stay visible.
struct OutcomeDistribution {
    int n = 0;
    std::vector<double> probs;
};

// In-place length-2^k butterfly pass: v[y] <- sum_x (-1)^{x.y} v[x],
// unnormalised. Size must be a power of two.
void walsh_butterfly(std::vector<double>& v);

// Literal double loop over (x, y). Quadratic in the table size, so capped at
// n <= 14; exists as the oracle the fast transform is checked against.
Spectrum spectrum_naive(const BooleanFunction& f);

// Butterfly transform of (-1)^f with a single final 2^{-n} scaling,
// O(n 2^n) time.
Spectrum spectrum_fast(const BooleanFunction& f);

OutcomeDistribution outcome_distribution(const Spectrum& s);

// Rows "y,c,p" with y as an x1-first bit string.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

}  // namespace juntalab

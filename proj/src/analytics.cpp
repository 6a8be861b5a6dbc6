#include "juntalab/analytics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace juntalab {

ProductFamilyPrediction product_prediction(int m) {
    if (m < 1) {
        throw std::invalid_argument("product family needs m >= 1");
    }
    ProductFamilyPrediction p;
    p.m = m;
    const double off = std::ldexp(1.0, 1 - m);  // 2^{1-m}
    p.c0 = 1.0 - off;
    p.supported_magnitude = off;
    p.gamma_full_weight = std::ldexp(1.0, 2 - 2 * m);
    p.rounds_2r = std::llround(std::numbers::pi * std::ldexp(1.0, m - 2));
    // Real exponents: the failure chances after the recommended number of
    // unamplified runs, not after the rounded count.
    p.p_fail_all = std::pow(p.c0, std::numbers::pi * std::ldexp(1.0, m - 1));
    p.p_not_learn_one = std::pow(p.c0, std::numbers::pi * std::ldexp(1.0, m - 2));
    return p;
}

std::vector<ProductFamilyPrediction> limit_checks() {
    std::vector<ProductFamilyPrediction> rows;
    rows.reserve(29);
    for (int m = 2; m <= 30; ++m) {
        rows.push_back(product_prediction(m));
    }
    const auto& last = rows.back();
    if (std::abs(last.p_fail_all - kLimitFailAll) > 0.01 ||
        std::abs(last.p_not_learn_one - kLimitNotLearnOne) > 0.01) {
        throw std::logic_error("product-family formulas drifted away from their limits");
    }
    return rows;
}

ClassicalProbeResult classical_probe(const BooleanFunction& f) {
    const int n = f.var_count();
    const std::uint32_t ones = f.table_size() - 1;
    const int base = f.value(ones);
    ClassicalProbeResult result;
    result.oracle_queries = static_cast<std::uint64_t>(n) + 1;
    for (int j = 1; j <= n; ++j) {
        if (f.value(ones ^ var_bit(n, j)) != base) {
            result.variables.add(j);
        }
    }
    return result;
}

void write_predictions_csv(std::ostream& out,
                           const std::vector<ProductFamilyPrediction>& rows) {
    out << "m,c0,supported_magnitude,gamma_full_weight,rounds_2r,p_fail_all,p_not_learn_one\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%lld,%.17g,%.17g", r.m, r.c0,
                      r.supported_magnitude, r.gamma_full_weight, r.rounds_2r, r.p_fail_all,
                      r.p_not_learn_one);
        out << buf << "\n";
    }
}

}  // namespace juntalab

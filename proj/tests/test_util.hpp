#pragma once

// Test-side generators and evaluators. These deliberately reimplement the
// semantics with their own arithmetic so that library results are checked
// against an independent route, not against themselves.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "juntalab/boolfn.hpp"
#include "juntalab/bv_sampler.hpp"

namespace testutil {

using juntalab::Rng;

struct AnfMonomial {
    std::vector<int> vars;  // empty means the constant-1 term
};

struct AnfExpr {
    int n = 0;
    std::vector<AnfMonomial> terms;
};

inline AnfExpr random_anf(Rng& rng, int n, int max_terms = 6) {
    AnfExpr expr;
    expr.n = n;
    const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
    for (int t = 0; t < terms; ++t) {
        AnfMonomial mono;
        if (rng() % 8 != 0) {  // otherwise keep it as a constant-1 term
            const int degree = 1 + static_cast<int>(rng() % 3);
            for (int d = 0; d < degree; ++d) {
                mono.vars.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
            }
        }
        expr.terms.push_back(std::move(mono));
    }
    return expr;
}

inline std::string to_text(const AnfExpr& expr) {
    std::string out;
    for (std::size_t t = 0; t < expr.terms.size(); ++t) {
        if (t > 0) out += " + ";
        if (expr.terms[t].vars.empty()) {
            out += "1";
            continue;
        }
        for (std::size_t d = 0; d < expr.terms[t].vars.size(); ++d) {
            if (d > 0) out += "*";
            out += "x" + std::to_string(expr.terms[t].vars[d]);
        }
    }
    return out;
}

// XOR of AND-terms evaluated with plain shifts; x1 is the top bit of x.
inline int eval(const AnfExpr& expr, std::uint32_t x) {
    int acc = 0;
    for (const auto& term : expr.terms) {
        int bit = 1;
        for (int v : term.vars) {
            bit &= static_cast<int>((x >> (expr.n - v)) & 1u);
        }
        acc ^= bit;
    }
    return acc;
}

inline juntalab::BooleanFunction random_table_function(Rng& rng, int n) {
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (auto& v : table) v = static_cast<std::uint8_t>(rng() & 1u);
    return juntalab::BooleanFunction(n, std::move(table));
}

struct Junta {
    juntalab::BooleanFunction f;
    std::uint32_t support_index_mask;  // index-space bits of the chosen positions
};

// f reads only `m` randomly chosen positions; the inner m-variable table is
// random (possibly degenerate, which the flip test then reports faithfully).
inline Junta random_junta(Rng& rng, int n, int m) {
    std::vector<int> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        std::swap(positions[static_cast<std::size_t>(i)],
                  positions[rng() % static_cast<std::uint64_t>(i + 1)]);
    }
    positions.resize(static_cast<std::size_t>(m));

    std::vector<std::uint8_t> inner(std::size_t{1} << m);
    for (auto& v : inner) v = static_cast<std::uint8_t>(rng() & 1u);

    std::uint32_t support = 0;
    for (int pos : positions) support |= juntalab::var_bit(n, pos);

    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < table.size(); ++x) {
        std::uint32_t idx = 0;
        for (int i = 0; i < m; ++i) {
            idx |= ((x >> (n - positions[static_cast<std::size_t>(i)])) & 1u)
                   << (m - 1 - i);
        }
        table[x] = inner[idx];
    }
    return Junta{juntalab::BooleanFunction(n, std::move(table)), support};
}

}  // namespace testutil

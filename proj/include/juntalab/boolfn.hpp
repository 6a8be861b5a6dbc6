#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "juntalab/errors.hpp"

namespace juntalab {

// Everything downstream is O(2^n) or worse, so variable counts are capped.
// The default keeps a dense table or spectrum at 2^24 entries; callers who
// know what they are doing can raise it (up to 30) before building functions.
inline constexpr int kDefaultMaxVars = 24;

int max_vars();
void set_max_vars(int n);

// Bit-order convention, used consistently by tables, spectra, outcomes and
// provenance masks: variable x1 is the MOST significant bit of an n-bit
// index, xn the least significant. A printed outcome string reads x1..xn
// left to right.
constexpr std::uint32_t var_bit(int n, int j) {
    return std::uint32_t{1} << (n - j);
}

constexpr int parity(std::uint32_t bits) {
    return std::popcount(bits) & 1;
}

// n-character '0'/'1' string, x1 first.
std::string bit_string(std::uint32_t x, int n);

// A set of variable indices drawn from 1..n. Deliberately separate from the
// index-space masks above so the two never get mixed up.
class VariableSet {
public:
    VariableSet() = default;

    // Variables marked by the set bits of an n-bit outcome.
    static VariableSet from_outcome(std::uint32_t y, int n);

    void add(int j) { mask_ |= std::uint32_t{1} << (j - 1); }
    bool contains(int j) const { return (mask_ >> (j - 1)) & 1u; }
    bool empty() const { return mask_ == 0; }
    int size() const { return std::popcount(mask_); }

    VariableSet& operator|=(const VariableSet& other) {
        mask_ |= other.mask_;
        return *this;
    }

    bool subset_of(const VariableSet& other) const {
        return (mask_ & ~other.mask_) == 0;
    }

    friend bool operator==(const VariableSet&, const VariableSet&) = default;

    std::vector<int> members() const;  // ascending
    std::string to_string() const;     // "{1,3}"

private:
    std::uint32_t mask_ = 0;
};

enum class ProvenanceKind { Raw, Linear, Product, Anf };

// How a table was built. Linear(mask): f(x) = parity(x & mask).
// Product(mask): f(x) = 1 iff (x & mask) == mask. Masks live in index space.
// Parsing tags pure parity expressions as Linear and single monomials as
// Product so downstream code can recognise the analytically solved families.
struct Provenance {
    ProvenanceKind kind = ProvenanceKind::Raw;
    std::uint32_t mask = 0;
    std::string anf_text;
};

// Total map {0,1}^n -> {0,1}, stored as a dense truth table indexed by the
// convention above. Immutable once built; concurrent reads are fine.
class BooleanFunction {
public:
    BooleanFunction(int n, std::vector<std::uint8_t> table, Provenance prov = {});

    static BooleanFunction constant(int n, int value);
    static BooleanFunction linear(int n, std::uint32_t mask);
    static BooleanFunction product(int n, std::uint32_t mask);

    int var_count() const { return n_; }
    std::uint32_t table_size() const { return std::uint32_t{1} << n_; }
    int value(std::uint32_t x) const { return table_[x]; }
    const std::vector<std::uint8_t>& table() const { return table_; }
    const Provenance& provenance() const { return prov_; }

private:
    int n_;
    std::vector<std::uint8_t> table_;
    Provenance prov_;
};

// Algebraic normal form: expr := term ('+' term)*, term := '1' or a '*'
// product of factors, factor := 'x' followed by an index in 1..n. '+' is XOR,
// '*' is AND, whitespace is ignored. Repeated monomials cancel in pairs.
BooleanFunction parse_anf(std::string_view text, int n);

// Exhaustive dependency test: x_j is relevant iff flipping bit j changes the
// output for some input. Ground truth for everything else in the project.
VariableSet relevant_variables_bruteforce(const BooleanFunction& f);

// Truth-table file format: first line "n=<int>", second line exactly 2^n
// characters of '0'/'1' in index order.
BooleanFunction read_truth_table(std::istream& in);
BooleanFunction read_truth_table_file(const std::string& path);
void write_truth_table(std::ostream& out, const BooleanFunction& f);

}  // namespace juntalab

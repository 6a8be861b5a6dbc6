#include "juntalab/boolfn.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace juntalab {

namespace {

std::atomic<int> g_max_vars{kDefaultMaxVars};

}  // namespace

int max_vars() { return g_max_vars.load(); }

void set_max_vars(int n) {
    // 30 keeps indices and variable-set masks inside 32 bits with room to spare.
    if (n < 1 || n > 30) {
        throw std::invalid_argument("set_max_vars: cap must be in 1..30");
    }
    g_max_vars.store(n);
}

std::string bit_string(std::uint32_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 1; j <= n; ++j) {
        if (x & var_bit(n, j)) s[static_cast<std::size_t>(j - 1)] = '1';
    }
    return s;
}

VariableSet VariableSet::from_outcome(std::uint32_t y, int n) {
    VariableSet vs;
    for (int j = 1; j <= n; ++j) {
        if (y & var_bit(n, j)) vs.add(j);
    }
    return vs;
}

std::vector<int> VariableSet::members() const {
    std::vector<int> out;
    for (int j = 1; j <= 32; ++j) {
        if ((mask_ >> (j - 1)) & 1u) out.push_back(j);
    }
    return out;
}

std::string VariableSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int j : members()) {
        if (!first) s += ",";
        s += std::to_string(j);
        first = false;
    }
    return s + "}";
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table, Provenance prov)
    : n_(n), table_(std::move(table)), prov_(std::move(prov)) {
    if (n_ < 1) {
        throw DomainError("a function needs at least one variable");
    }
    if (n_ > max_vars()) {
        throw DomainError("n = " + std::to_string(n_) + " exceeds the current cap of " +
                          std::to_string(max_vars()) + " variables");
    }
    if (table_.size() != (std::size_t{1} << n_)) {
        throw std::invalid_argument("truth table must have exactly 2^n entries");
    }
    for (std::uint8_t v : table_) {
        if (v > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
    }
}

BooleanFunction BooleanFunction::constant(int n, int value) {
    if (value != 0 && value != 1) {
        throw std::invalid_argument("constant value must be 0 or 1");
    }
    if (n < 1 || n > max_vars()) {
        throw DomainError("variable count out of range");
    }
    std::vector<std::uint8_t> table(std::size_t{1} << n,
                                    static_cast<std::uint8_t>(value));
    // The empty parity is constant 0; the empty product is constant 1.
    Provenance prov{value == 0 ? ProvenanceKind::Linear : ProvenanceKind::Product, 0, {}};
    return BooleanFunction(n, std::move(table), std::move(prov));
}

BooleanFunction BooleanFunction::linear(int n, std::uint32_t mask) {
    if (n < 1 || n > max_vars()) {
        throw DomainError("variable count out of range");
    }
    if (mask >> n) {
        throw std::invalid_argument("mask has bits above position n");
    }
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < table.size(); ++x) {
        table[x] = static_cast<std::uint8_t>(parity(x & mask));
    }
    return BooleanFunction(n, std::move(table), Provenance{ProvenanceKind::Linear, mask, {}});
}

BooleanFunction BooleanFunction::product(int n, std::uint32_t mask) {
    if (n < 1 || n > max_vars()) {
        throw DomainError("variable count out of range");
    }
    if (mask >> n) {
        throw std::invalid_argument("mask has bits above position n");
    }
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < table.size(); ++x) {
        table[x] = static_cast<std::uint8_t>((x & mask) == mask);
    }
    return BooleanFunction(n, std::move(table), Provenance{ProvenanceKind::Product, mask, {}});
}

namespace {

// Parser working over a whitespace-stripped copy of the input. pos_map maps
// each compact index back to the original offset for error reporting.
struct AnfParser {
    std::string compact;
    std::vector<std::size_t> pos_map;
    std::size_t pos = 0;
    int n;

    AnfParser(std::string_view text, int n_in) : n(n_in) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                compact += text[i];
                pos_map.push_back(i);
            }
        }
        pos_map.push_back(text.size());  // sentinel for end-of-input errors
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_map[std::min(pos, compact.size())]);
    }

    bool at_end() const { return pos >= compact.size(); }
    char peek() const { return compact[pos]; }

    // factor := 'x' integer, index in 1..n
    std::uint32_t parse_factor() {
        const std::size_t start = pos;
        if (at_end() || peek() != 'x') fail("expected a factor: 'x<index>' or '1'");
        ++pos;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected a variable index after 'x'");
        }
        long index = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            index = index * 10 + (peek() - '0');
            if (index > 1'000'000) break;  // clearly out of range, stop accumulating
            ++pos;
        }
        if (index < 1 || index > n) {
            pos = start;
            fail("variable x" + std::to_string(index) + " is out of range for n = " +
                 std::to_string(n));
        }
        return var_bit(n, static_cast<int>(index));
    }

    // term := '1' | factor ('*' factor)* ; returns the AND mask of the term
    std::uint32_t parse_term() {
        if (at_end()) fail("expected a term");
        if (peek() == '1') {
            ++pos;
            return 0;  // the constant-1 monomial
        }
        std::uint32_t mask = parse_factor();
        while (!at_end() && peek() == '*') {
            ++pos;
            mask |= parse_factor();
        }
        return mask;
    }

    // expr := term ('+' term)* ; XOR of the terms, duplicates cancel in pairs
    std::set<std::uint32_t> parse_expr() {
        std::set<std::uint32_t> monomials;
        auto toggle = [&](std::uint32_t mask) {
            auto it = monomials.find(mask);
            if (it != monomials.end()) {
                monomials.erase(it);
            } else {
                monomials.insert(mask);
            }
        };
        toggle(parse_term());
        while (!at_end()) {
            if (peek() != '+') fail("expected '+' or end of input");
            ++pos;
            toggle(parse_term());
        }
        return monomials;
    }
};

}  // namespace

BooleanFunction parse_anf(std::string_view text, int n) {
    if (n < 1 || n > max_vars()) {
        throw DomainError("n = " + std::to_string(n) + " is outside 1.." +
                          std::to_string(max_vars()));
    }
    AnfParser parser(text, n);
    const std::set<std::uint32_t> monomials = parser.parse_expr();

    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    for (std::uint32_t mask : monomials) {
        for (std::uint32_t x = 0; x < table.size(); ++x) {
            table[x] ^= static_cast<std::uint8_t>((x & mask) == mask);
        }
    }

    // Tag the recognisable families. All-singleton monomial sets are parity
    // functions; a lone monomial is a product. Everything else keeps its text.
    Provenance prov{ProvenanceKind::Anf, 0, std::string(text)};
    const bool all_singletons =
        std::all_of(monomials.begin(), monomials.end(),
                    [](std::uint32_t m) { return std::popcount(m) == 1; });
    if (monomials.empty() || all_singletons) {
        std::uint32_t linear_mask = 0;
        for (std::uint32_t m : monomials) linear_mask |= m;
        prov = Provenance{ProvenanceKind::Linear, linear_mask, std::string(text)};
    } else if (monomials.size() == 1) {
        prov = Provenance{ProvenanceKind::Product, *monomials.begin(), std::string(text)};
    }
    return BooleanFunction(n, std::move(table), std::move(prov));
}

VariableSet relevant_variables_bruteforce(const BooleanFunction& f) {
    VariableSet out;
    const auto& table = f.table();
    const int n = f.var_count();
    for (int j = 1; j <= n; ++j) {
        const std::uint32_t bit = var_bit(n, j);
        for (std::uint32_t x = 0; x < table.size(); ++x) {
            if (table[x] != table[x ^ bit]) {
                out.add(j);
                break;
            }
        }
    }
    return out;
}

BooleanFunction read_truth_table(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("empty input: expected a header line n=<int>", 0);
    }
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header.rfind("n=", 0) != 0) {
        throw ParseError("header line must look like n=<int>", 0);
    }
    int n = 0;
    const char* first = header.data() + 2;
    const char* last = header.data() + header.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("could not parse the variable count in the header", 2);
    }
    if (n < 1 || n > max_vars()) {
        throw DomainError("variable count " + std::to_string(n) + " is outside 1.." +
                          std::to_string(max_vars()));
    }

    const std::size_t row_offset = header.size() + 1;
    std::string row;
    if (!std::getline(in, row)) {
        throw ParseError("missing the truth-table line", row_offset);
    }
    if (!row.empty() && row.back() == '\r') row.pop_back();
    const std::size_t expect = std::size_t{1} << n;
    if (row.size() != expect) {
        throw ParseError("table line must contain exactly 2^n = " + std::to_string(expect) +
                             " characters, got " + std::to_string(row.size()),
                         row_offset + std::min(row.size(), expect));
    }
    std::vector<std::uint8_t> table(expect);
    for (std::size_t i = 0; i < expect; ++i) {
        if (row[i] != '0' && row[i] != '1') {
            throw ParseError("table entries must be '0' or '1'", row_offset + i);
        }
        table[i] = static_cast<std::uint8_t>(row[i] - '0');
    }
    return BooleanFunction(n, std::move(table), Provenance{ProvenanceKind::Raw, 0, {}});
}

BooleanFunction read_truth_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open truth-table file: " + path);
    }
    return read_truth_table(in);
}

void write_truth_table(std::ostream& out, const BooleanFunction& f) {
    out << "n=" << f.var_count() << "\n";
    for (std::uint32_t x = 0; x < f.table_size(); ++x) {
        out << static_cast<char>('0' + f.value(x));
    }
    out << "\n";
}

}  // namespace juntalab

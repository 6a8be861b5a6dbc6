#include "juntalab/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace juntalab {

void walsh_butterfly(std::vector<double>& v) {
    const std::size_t size = v.size();
    if (size == 0 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("walsh_butterfly: size must be a power of two");
    }
    for (std::size_t h = 1; h < size; h <<= 1) {
        for (std::size_t base = 0; base < size; base += h << 1) {
            for (std::size_t i = base; i < base + h; ++i) {
                const double a = v[i];
                const double b = v[i + h];
                v[i] = a + b;
                v[i + h] = a - b;
            }
        }
    }
}

Spectrum spectrum_naive(const BooleanFunction& f) {
    const int n = f.var_count();
    if (n > 14) {
        throw DomainError("spectrum_naive is quadratic; use spectrum_fast beyond n = 14");
    }
    const std::uint32_t size = f.table_size();
    const double scale = std::ldexp(1.0, -n);
    Spectrum s{n, std::vector<double>(size)};
    for (std::uint32_t y = 0; y < size; ++y) {
        long long acc = 0;
        for (std::uint32_t x = 0; x < size; ++x) {
            acc += (f.value(x) ^ parity(x & y)) ? -1 : 1;
        }
        s.coeffs[y] = static_cast<double>(acc) * scale;
    }
    return s;
}

Spectrum spectrum_fast(const BooleanFunction& f) {
    const int n = f.var_count();
    const std::uint32_t size = f.table_size();
    Spectrum s{n, std::vector<double>(size)};
    for (std::uint32_t x = 0; x < size; ++x) {
        s.coeffs[x] = f.value(x) ? -1.0 : 1.0;
    }
    walsh_butterfly(s.coeffs);
    const double scale = std::ldexp(1.0, -n);
    for (double& c : s.coeffs) c *= scale;
    return s;
}

OutcomeDistribution outcome_distribution(const Spectrum& s) {
    OutcomeDistribution d{s.n, std::vector<double>(s.coeffs.size())};
    for (std::size_t y = 0; y < s.coeffs.size(); ++y) {
        d.probs[y] = s.coeffs[y] * s.coeffs[y];
    }
    return d;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "y,c,p\n";
    char buf[64];
    for (std::uint32_t y = 0; y < s.coeffs.size(); ++y) {
        const double c = s.coeffs[y];
        out << bit_string(y, s.n);
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g", c, c * c);
        out << buf << "\n";
    }
}

}  // namespace juntalab

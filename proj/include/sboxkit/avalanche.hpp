#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "bits.hpp"
#include "fraction.hpp"
#include "sbox.hpp"

namespace sboxkit {

/// entry(i, j): number of x for which output bit j flips when input bit i
/// flips, over a common denominator 2^n.
struct AvalancheMatrix {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<std::uint32_t> counts;
    std::uint32_t denominator = 1;

    std::uint32_t count(unsigned i, unsigned j) const { return counts[i * m + j]; }
    Fraction at(unsigned i, unsigned j) const { return {count(i, j), denominator}; }
};

inline AvalancheMatrix sac_matrix(const SBox& s)
{
    AvalancheMatrix a{s.n(), s.m(), std::vector<std::uint32_t>(std::size_t{s.n()} * s.m(), 0),
                      static_cast<std::uint32_t>(s.size())};
    for (unsigned i = 0; i < s.n(); ++i)
        for (std::uint32_t x = 0; x < s.size(); ++x) {
            const std::uint32_t diff = s[x] ^ s[x ^ (1u << i)];
            for (unsigned j = 0; j < s.m(); ++j)
                a.counts[i * s.m() + j] += (diff >> j) & 1u;
        }
    return a;
}

/// Largest entry of the SAC matrix; 1/2 is ideal.
inline Fraction sac_scalar(const AvalancheMatrix& a)
{
    return {*std::max_element(a.counts.begin(), a.counts.end()), a.denominator};
}

inline Fraction sac_scalar(const SBox& s) { return sac_scalar(sac_matrix(s)); }

inline bool satisfies_sac(const AvalancheMatrix& a)
{
    return std::all_of(a.counts.begin(), a.counts.end(), [&](std::uint32_t c) { return 2 * c == a.denominator; });
}

inline void write_csv(std::ostream& out, const AvalancheMatrix& a)
{
    out << "input_bit";
    for (unsigned j = 0; j < a.m; ++j)
        out << ",out" << j;
    out << '\n';
    for (unsigned i = 0; i < a.n; ++i) {
        out << i;
        for (unsigned j = 0; j < a.m; ++j)
            out << ',' << a.count(i, j) << '/' << a.denominator;
        out << '\n';
    }
}

/// Maximum |Pearson correlation| between pairs of output-bit flip indicators,
/// over every single input-bit flip. Pairs with a constant indicator score 0.
inline double bic_scalar(const SBox& s)
{
    if (s.m() < 2)
        throw PreconditionError("bit independence needs at least two output bits");
    const auto N = static_cast<std::int64_t>(s.size());
    double best = 0.0;
    std::vector<std::uint32_t> diffs(s.size());
    for (unsigned i = 0; i < s.n(); ++i) {
        for (std::uint32_t x = 0; x < s.size(); ++x)
            diffs[x] = s[x] ^ s[x ^ (1u << i)];
        for (unsigned u = 0; u < s.m(); ++u)
            for (unsigned v = u + 1; v < s.m(); ++v) {
                std::int64_t su = 0, sv = 0, suv = 0;
                for (auto d : diffs) {
                    const std::int64_t bu = (d >> u) & 1u, bv = (d >> v) & 1u;
                    su += bu;
                    sv += bv;
                    suv += bu & bv;
                }
                // Scaled by N^2 throughout; integers until the final ratio.
                const std::int64_t cov = N * suv - su * sv;
                const std::int64_t var_u = N * su - su * su;
                const std::int64_t var_v = N * sv - sv * sv;
                if (var_u == 0 || var_v == 0)
                    continue;
                const double r = static_cast<double>(cov) /
                                 std::sqrt(static_cast<double>(var_u) * static_cast<double>(var_v));
                best = std::max(best, std::fabs(r));
            }
    }
    return std::min(best, 1.0);
}

} // namespace sboxkit

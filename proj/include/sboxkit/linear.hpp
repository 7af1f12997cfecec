#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <vector>

#include "bits.hpp"
#include "fraction.hpp"
#include "sbox.hpp"
#include "spectral.hpp"

namespace sboxkit {

/// Raw and centered linear approximation tables, both indexed
/// [input mask][output mask].
struct LinearApproximationTables {
    SpectrumTable raw;
    SpectrumTable centered;
};

/// Counting route: raw(a, b) = #{x : a.x = b.S(x)}.
inline LinearApproximationTables lat(const SBox& s)
{
    require_table_size(s.n(), s.m(), "linear approximation table");
    const std::size_t outs = pow2(s.m());
    LinearApproximationTables t{SpectrumTable(TableKind::lat_raw, s.size(), outs),
                                SpectrumTable(TableKind::lat_centered, s.size(), outs)};
    for (std::uint32_t a = 0; a < s.size(); ++a)
        for (std::uint32_t b = 0; b < outs; ++b) {
            std::int32_t agree = 0;
            for (std::uint32_t x = 0; x < s.size(); ++x)
                agree += dot(a, x) == dot(b, s[x]);
            t.raw(a, b) = agree;
            t.centered(a, b) = agree - static_cast<std::int32_t>(s.size() / 2);
        }
    return t;
}

/// Walsh route: centered(a, b) = W(b, a) / 2, raw = centered + 2^{n-1}.
inline LinearApproximationTables lat_from_walsh(const SpectrumTable& walsh)
{
    const std::size_t ins = walsh.cols(), outs = walsh.rows();
    LinearApproximationTables t{SpectrumTable(TableKind::lat_raw, ins, outs),
                                SpectrumTable(TableKind::lat_centered, ins, outs)};
    for (std::size_t a = 0; a < ins; ++a)
        for (std::size_t b = 0; b < outs; ++b) {
            t.centered(a, b) = walsh(b, a) / 2;
            t.raw(a, b) = t.centered(a, b) + static_cast<std::int32_t>(ins / 2);
        }
    return t;
}

/// max |centered LAT| over (a, b) != (0, 0), divided by 2^n.
inline Fraction linear_approximation_probability(const SpectrumTable& walsh)
{
    std::int64_t best = 0;
    for (std::size_t g = 0; g < walsh.rows(); ++g)
        for (std::size_t r = 0; r < walsh.cols(); ++r) {
            if (g == 0 && r == 0)
                continue;
            best = std::max<std::int64_t>(best, std::abs(walsh(g, r)) / 2);
        }
    return {best, static_cast<std::int64_t>(walsh.cols())};
}

inline Fraction linear_approximation_probability(const SBox& s)
{
    return linear_approximation_probability(walsh_spectrum(s));
}

/// Largest |centered LAT| entry over nonzero mask pairs.
inline std::int64_t lat_max(const SpectrumTable& walsh) { return linear_approximation_probability(walsh).num; }

/// 2^{n-1} - max_{gamma != 0, rho} |W(gamma, rho)| / 2.
inline std::int64_t nonlinearity(const SpectrumTable& walsh)
{
    return static_cast<std::int64_t>(walsh.cols() / 2) - walsh.max_abs(1, 0) / 2;
}

inline std::int64_t nonlinearity(const SBox& s) { return nonlinearity(walsh_spectrum(s)); }

/// min wt(gamma) + wt(rho) over correlated pairs (W(gamma, rho) != 0) with
/// both masks nonzero. Empty when no such pair exists (e.g. constant maps).
inline std::optional<unsigned> linear_branch_number(const SpectrumTable& walsh)
{
    std::optional<unsigned> best;
    for (std::uint32_t g = 1; g < walsh.rows(); ++g)
        for (std::uint32_t r = 1; r < walsh.cols(); ++r)
            if (walsh(g, r) != 0)
                best = std::min(best.value_or(std::numeric_limits<unsigned>::max()), weight(g) + weight(r));
    return best;
}

inline std::optional<unsigned> linear_branch_number(const SBox& s)
{
    require_square(s, "linear branch number");
    return linear_branch_number(walsh_spectrum(s));
}

/// Output mask rho, input shift gamma, and the constant value c of
/// x -> rho.S(x xor gamma) xor rho.S(x).
struct LinearStructure {
    std::uint32_t mask = 0;
    std::uint32_t shift = 0;
    unsigned constant = 0;

    friend bool operator==(const LinearStructure&, const LinearStructure&) = default;
};

/// All (rho != 0, gamma != 0) whose derivative is constant, read off the
/// ACT: |ACT(gamma, rho)| = 2^n, with c = 1 when the entry is negative.
inline std::vector<LinearStructure> linear_structures(const SpectrumTable& act)
{
    const auto full = static_cast<std::int32_t>(act.rows());
    std::vector<LinearStructure> out;
    for (std::uint32_t r = 1; r < act.cols(); ++r)
        for (std::uint32_t g = 1; g < act.rows(); ++g) {
            const std::int32_t v = act(g, r);
            if (v == full || v == -full)
                out.push_back({r, g, v < 0 ? 1u : 0u});
        }
    return out;
}

inline std::vector<LinearStructure> linear_structures(const SBox& s)
{
    return linear_structures(autocorrelation_table(s));
}

/// Largest k <= n with W(gamma, rho) = 0 for all gamma != 0 and
/// 1 <= wt(rho) <= k.
inline unsigned correlation_immunity_order(const SpectrumTable& walsh)
{
    const auto n = static_cast<unsigned>(std::countr_zero(walsh.cols()));
    // Smallest input-mask weight that correlates with some component.
    unsigned first_bad = n + 1;
    for (std::uint32_t g = 1; g < walsh.rows(); ++g)
        for (std::uint32_t r = 1; r < walsh.cols(); ++r)
            if (walsh(g, r) != 0)
                first_bad = std::min(first_bad, weight(r));
    return first_bad - 1;
}

inline unsigned correlation_immunity_order(const SBox& s) { return correlation_immunity_order(walsh_spectrum(s)); }

} // namespace sboxkit

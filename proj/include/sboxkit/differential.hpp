#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "bits.hpp"
#include "sbox.hpp"
#include "spectral.hpp"

namespace sboxkit {

/// ddt(a, b) = #{x : S(x xor a) xor S(x) = b}.
inline SpectrumTable ddt(const SBox& s)
{
    require_table_size(s.n(), s.m(), "difference distribution table");
    SpectrumTable t(TableKind::ddt, s.size(), pow2(s.m()));
    for (std::uint32_t a = 0; a < s.size(); ++a) {
        auto row = t.row(a);
        for (std::uint32_t x = 0; x < s.size(); ++x)
            ++row[s[x] ^ s[x ^ a]];
    }
    return t;
}

/// Fourier route: each DDT row is 2^{-m} times the Walsh-Hadamard transform
/// of the matching ACT row, and the ACT comes from the squared Walsh table.
inline SpectrumTable ddt_from_walsh(const SpectrumTable& walsh)
{
    const SpectrumTable act = autocorrelation_from_walsh(walsh);
    const auto m = static_cast<unsigned>(std::countr_zero(act.cols()));
    SpectrumTable t(TableKind::ddt, act.rows(), act.cols());
    std::vector<std::int64_t> buf(act.cols());
    for (std::size_t a = 0; a < act.rows(); ++a) {
        const auto row = act.row(a);
        std::copy(row.begin(), row.end(), buf.begin());
        fwht(std::span<std::int64_t>(buf));
        for (std::size_t b = 0; b < act.cols(); ++b)
            t(a, b) = static_cast<std::int32_t>(buf[b] >> m);
    }
    return t;
}

/// Largest DDT entry over nonzero input differences.
inline std::int64_t differential_uniformity(const SpectrumTable& ddt_table) { return ddt_table.max_abs(1, 0); }
inline std::int64_t differential_uniformity(const SBox& s) { return differential_uniformity(ddt(s)); }

/// min wt(a) + wt(b) over feasible transitions a -> b with a != 0.
inline unsigned differential_branch_number(const SpectrumTable& ddt_table)
{
    unsigned best = std::numeric_limits<unsigned>::max();
    for (std::uint32_t a = 1; a < ddt_table.rows(); ++a)
        for (std::uint32_t b = 0; b < ddt_table.cols(); ++b)
            if (ddt_table(a, b) > 0)
                best = std::min(best, weight(a) + weight(b));
    return best;
}

inline unsigned differential_branch_number(const SBox& s)
{
    require_square(s, "differential branch number");
    return differential_branch_number(ddt(s));
}

/// Largest l such that ACT(gamma, rho) = 0 for every 1 <= wt(gamma) <= l and
/// rho != 0.
inline unsigned propagation_criteria_order(const SpectrumTable& act)
{
    const auto n = static_cast<unsigned>(std::countr_zero(act.rows()));
    unsigned first_bad = n + 1;
    for (std::uint32_t g = 1; g < act.rows(); ++g)
        for (std::uint32_t r = 1; r < act.cols(); ++r)
            if (act(g, r) != 0)
                first_bad = std::min(first_bad, weight(g));
    return first_bad - 1;
}

inline unsigned propagation_criteria_order(const SBox& s) { return propagation_criteria_order(autocorrelation_table(s)); }

/// Output bit `bit` takes the same value `value` in every output difference
/// reachable from `input_diff`. `inverse` marks witnesses found on S^{-1}.
struct UndisturbedBit {
    std::uint32_t input_diff = 0;
    unsigned bit = 0;
    unsigned value = 0;
    bool inverse = false;

    friend bool operator==(const UndisturbedBit&, const UndisturbedBit&) = default;
};

namespace detail {

inline void collect_undisturbed(const SpectrumTable& t, bool transposed, unsigned out_bits, bool inverse,
                                std::vector<UndisturbedBit>& out)
{
    const std::size_t rows = transposed ? t.cols() : t.rows();
    const std::size_t cols = transposed ? t.rows() : t.cols();
    for (std::uint32_t a = 1; a < rows; ++a) {
        std::uint32_t all_and = low_mask(out_bits), all_or = 0;
        for (std::uint32_t b = 0; b < cols; ++b) {
            const auto v = transposed ? t(b, a) : t(a, b);
            if (v > 0) {
                all_and &= b;
                all_or |= b;
            }
        }
        for (unsigned j = 0; j < out_bits; ++j) {
            const unsigned hi = (all_and >> j) & 1u, any = (all_or >> j) & 1u;
            if (hi == any)
                out.push_back({a, j, hi, inverse});
        }
    }
}

} // namespace detail

/// Forward direction only unless `include_inverse` is set, in which case the
/// witnesses of S^{-1} (read from the transposed DDT) are appended.
inline std::vector<UndisturbedBit> undisturbed_bits(const SpectrumTable& ddt_table, bool include_inverse = false)
{
    std::vector<UndisturbedBit> out;
    const auto m = static_cast<unsigned>(std::countr_zero(ddt_table.cols()));
    const auto n = static_cast<unsigned>(std::countr_zero(ddt_table.rows()));
    detail::collect_undisturbed(ddt_table, false, m, false, out);
    if (include_inverse)
        detail::collect_undisturbed(ddt_table, true, n, true, out);
    return out;
}

inline std::vector<UndisturbedBit> undisturbed_bits(const SBox& s, bool include_inverse = false)
{
    if (include_inverse)
        require_bijective(s, "inverse-direction undisturbed bits");
    return undisturbed_bits(ddt(s), include_inverse);
}

} // namespace sboxkit

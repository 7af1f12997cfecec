#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bits.hpp"
#include "fraction.hpp"
#include "sbox.hpp"
#include "spectral.hpp"

namespace sboxkit {

/// Boomerang tables are restricted to n <= 8.
inline constexpr unsigned kMaxBoomerangWidth = 8;

inline void require_boomerang_input(const SBox& s)
{
    require_bijective(s, "boomerang connectivity table");
    if (s.n() > kMaxBoomerangWidth)
        throw PreconditionError("boomerang connectivity table is limited to n <= 8");
}

/// BCT(a, d) = #{x : S^{-1}(S(x) xor d) xor S^{-1}(S(x xor a) xor d) = a}.
///
/// With f_d(x) = x xor S^{-1}(S(x) xor d) the condition is f_d(x) = f_d(x xor a),
/// so each column is a histogram of XOR differences inside the buckets of f_d.
inline SpectrumTable bct(const SBox& s)
{
    require_boomerang_input(s);
    const SBox inv = inverse(s);
    const std::size_t N = s.size();
    SpectrumTable t(TableKind::bct, N, N);
    std::vector<std::uint32_t> order(N), key(N);
    for (std::uint32_t d = 0; d < N; ++d) {
        for (std::uint32_t x = 0; x < N; ++x)
            key[x] = x ^ inv[s[x] ^ d];
        // Counting sort of inputs by bucket key.
        std::vector<std::uint32_t> start(N + 1, 0);
        for (std::uint32_t x = 0; x < N; ++x)
            ++start[key[x] + 1];
        for (std::size_t k = 0; k < N; ++k)
            start[k + 1] += start[k];
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (std::uint32_t x = 0; x < N; ++x)
            order[fill[key[x]]++] = x;
        for (std::size_t k = 0; k < N; ++k)
            for (std::uint32_t i = start[k]; i < start[k + 1]; ++i)
                for (std::uint32_t j = start[k]; j < start[k + 1]; ++j)
                    ++t(order[i] ^ order[j], d);
    }
    return t;
}

/// The defining triple loop, kept as the reference for `bct`.
inline SpectrumTable bct_naive(const SBox& s)
{
    require_boomerang_input(s);
    const SBox inv = inverse(s);
    const std::size_t N = s.size();
    SpectrumTable t(TableKind::bct, N, N);
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t d = 0; d < N; ++d) {
            std::int32_t c = 0;
            for (std::uint32_t x = 0; x < N; ++x)
                c += (inv[s[x] ^ d] ^ inv[s[x ^ a] ^ d]) == a;
            t(a, d) = c;
        }
    return t;
}

/// max BCT(a, d) over a != 0, d != 0.
inline std::int64_t boomerang_uniformity(const SpectrumTable& bct_table) { return bct_table.max_abs(1, 1); }
inline std::int64_t boomerang_uniformity(const SBox& s) { return boomerang_uniformity(bct(s)); }

/// DLCT = ACT / 2 entrywise.
inline SpectrumTable dlct_from_act(const SpectrumTable& act)
{
    SpectrumTable t(TableKind::dlct, act.rows(), act.cols());
    for (std::size_t a = 0; a < act.rows(); ++a)
        for (std::size_t r = 0; r < act.cols(); ++r)
            t(a, r) = act(a, r) / 2;
    return t;
}

inline SpectrumTable dlct(const SBox& s) { return dlct_from_act(autocorrelation_table(s)); }

/// DLCT(a, rho) = #{x : rho.S(x) = rho.S(x xor a)} - 2^{n-1}, by counting.
inline SpectrumTable dlct_naive(const SBox& s)
{
    require_table_size(s.n(), s.m(), "differential-linear connectivity table");
    SpectrumTable t(TableKind::dlct, s.size(), pow2(s.m()));
    const auto half = static_cast<std::int32_t>(s.size() / 2);
    for (std::uint32_t a = 0; a < s.size(); ++a)
        for (std::uint32_t r = 0; r < pow2(s.m()); ++r) {
            std::int32_t c = 0;
            for (std::uint32_t x = 0; x < s.size(); ++x)
                c += dot(r, s[x]) == dot(r, s[x ^ a]);
            t(a, r) = c - half;
        }
    return t;
}

struct DifferentialLinearUniformity {
    std::int64_t max_abs = 0;    ///< max |DLCT| over nonzero (a, rho)
    std::int64_t uniformity = 0; ///< max_abs / 2
    Fraction normalized;         ///< uniformity / 2^{n-1}
};

inline DifferentialLinearUniformity differential_linear_uniformity(const SpectrumTable& dlct_table)
{
    DifferentialLinearUniformity u;
    u.max_abs = dlct_table.max_abs(1, 1);
    u.uniformity = u.max_abs / 2;
    u.normalized = {u.uniformity, static_cast<std::int64_t>(dlct_table.rows() / 2)};
    return u;
}

inline DifferentialLinearUniformity differential_linear_uniformity(const SBox& s)
{
    return differential_linear_uniformity(dlct(s));
}

} // namespace sboxkit

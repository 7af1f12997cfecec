#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>

#include "bits.hpp"
#include "sbox.hpp"
#include "spectral.hpp"

namespace sboxkit {

/// m * 2^{2n} * (sum_u (sum_i W(e_i, u))^4)^{-1/2}, where e_i runs over the
/// weight-1 output masks (single-bit predictions) and u over input masks.
/// +infinity when the quartic sum vanishes.
inline double dpa_snr(const SpectrumTable& walsh)
{
    const auto m = static_cast<unsigned>(std::countr_zero(walsh.rows()));
    const auto n = static_cast<unsigned>(std::countr_zero(walsh.cols()));
    __int128 quartic = 0;
    for (std::size_t u = 0; u < walsh.cols(); ++u) {
        std::int64_t inner = 0;
        for (unsigned i = 0; i < m; ++i)
            inner += walsh(std::size_t{1} << i, u);
        const __int128 sq = static_cast<__int128>(inner) * inner;
        quartic += sq * sq;
    }
    if (quartic == 0)
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(m) * std::ldexp(1.0, static_cast<int>(2 * n)) /
           std::sqrt(static_cast<double>(quartic));
}

inline double dpa_snr(const SBox& s) { return dpa_snr(walsh_spectrum(s)); }

/// Transparency order:
///   max_beta ( |m - 2 wt(beta)|
///              - 1/(2^{2n} - 2^n) * sum_{g != 0} |sum_i (-1)^{beta_i} ACT(g, e_i)| )
inline double transparency_order(const SpectrumTable& act)
{
    const auto m = static_cast<unsigned>(std::countr_zero(act.cols()));
    const auto N = static_cast<std::int64_t>(act.rows());
    if (N < 2)
        return 0.0;
    const double scale = 1.0 / static_cast<double>(N * N - N);
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t beta = 0; beta < (1u << m); ++beta) {
        std::int64_t total = 0;
        for (std::size_t g = 1; g < act.rows(); ++g) {
            std::int64_t inner = 0;
            for (unsigned i = 0; i < m; ++i)
                inner += sign_of((beta >> i) & 1u) * act(g, std::size_t{1} << i);
            total += std::llabs(inner);
        }
        const double lead = std::abs(static_cast<int>(m) - 2 * static_cast<int>(weight(beta)));
        best = std::max(best, lead - scale * static_cast<double>(total));
    }
    return best;
}

inline double transparency_order(const SBox& s) { return transparency_order(autocorrelation_table(s)); }

} // namespace sboxkit

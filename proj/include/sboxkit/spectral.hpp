#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bits.hpp"
#include "sbox.hpp"
#include "spectrum.hpp"

namespace sboxkit {

// --- butterflies -----------------------------------------------------------

/// In-place unnormalized Walsh-Hadamard transform; size must be a power of two.
template <class T>
void fwht(std::span<T> v)
{
    for (std::size_t h = 1; h < v.size(); h <<= 1)
        for (std::size_t i = 0; i < v.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const T a = v[j];
                const T b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

/// In-place binary Moebius transform (truth table <-> ANF). Self-inverse.
inline void moebius(std::span<std::uint8_t> v)
{
    for (std::size_t h = 1; h < v.size(); h <<= 1)
        for (std::size_t i = 0; i < v.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j)
                v[j + h] ^= v[j];
}

// --- Walsh spectrum --------------------------------------------------------

/// W(gamma, rho) = sum_x (-1)^{gamma.S(x) xor rho.x}; rows are output masks
/// gamma, columns input masks rho.
inline SpectrumTable walsh_spectrum(const SBox& s)
{
    require_table_size(s.m(), s.n(), "walsh spectrum");
    SpectrumTable w(TableKind::walsh, pow2(s.m()), s.size());
    for (std::uint32_t g = 0; g < pow2(s.m()); ++g) {
        auto row = w.row(g);
        for (std::uint32_t x = 0; x < s.size(); ++x)
            row[x] = sign_of(dot(g, s[x]));
        fwht(row);
    }
    return w;
}

inline SpectrumTable walsh_spectrum_naive(const SBox& s)
{
    require_table_size(s.m(), s.n(), "walsh spectrum");
    SpectrumTable w(TableKind::walsh, pow2(s.m()), s.size());
    for (std::uint32_t g = 0; g < pow2(s.m()); ++g)
        for (std::uint32_t r = 0; r < s.size(); ++r) {
            std::int32_t acc = 0;
            for (std::uint32_t x = 0; x < s.size(); ++x)
                acc += sign_of(dot(g, s[x]) ^ dot(r, x));
            w(g, r) = acc;
        }
    return w;
}

// --- autocorrelation -------------------------------------------------------

/// ACT from a Walsh table: for each output mask rho the ACT column is
/// 2^{-n} * H(W(rho, .)^2), H the unnormalized Walsh-Hadamard transform.
inline SpectrumTable autocorrelation_from_walsh(const SpectrumTable& walsh)
{
    const std::size_t outs = walsh.rows();
    const std::size_t ins = walsh.cols();
    const auto n = static_cast<unsigned>(std::countr_zero(ins));
    SpectrumTable act(TableKind::act, ins, outs);
    std::vector<std::int64_t> buf(ins);
    for (std::size_t r = 0; r < outs; ++r) {
        const auto w = walsh.row(r);
        for (std::size_t u = 0; u < ins; ++u)
            buf[u] = std::int64_t{w[u]} * w[u];
        fwht(std::span<std::int64_t>(buf));
        for (std::size_t g = 0; g < ins; ++g)
            act(g, r) = static_cast<std::int32_t>(buf[g] >> n);
    }
    return act;
}

/// ACT(gamma, rho) = sum_x (-1)^{rho.(S(x xor gamma) xor S(x))}; rows are
/// input differences, columns output masks.
inline SpectrumTable autocorrelation_table(const SBox& s) { return autocorrelation_from_walsh(walsh_spectrum(s)); }

inline SpectrumTable autocorrelation_table_naive(const SBox& s)
{
    require_table_size(s.n(), s.m(), "autocorrelation table");
    SpectrumTable act(TableKind::act, s.size(), pow2(s.m()));
    for (std::uint32_t g = 0; g < s.size(); ++g)
        for (std::uint32_t r = 0; r < pow2(s.m()); ++r) {
            std::int32_t acc = 0;
            for (std::uint32_t x = 0; x < s.size(); ++x)
                acc += sign_of(dot(r, s[x ^ g] ^ s[x]));
            act(g, r) = acc;
        }
    return act;
}

/// max |ACT(gamma, rho)| over gamma != 0, rho != 0.
inline std::int64_t absolute_indicator(const SpectrumTable& act) { return act.max_abs(1, 1); }
inline std::int64_t absolute_indicator(const SBox& s) { return absolute_indicator(autocorrelation_table(s)); }

/// Index range of the sum-of-squares indicator.
///   all            every (gamma, rho), as the formula is written
///   nonzero        gamma != 0 and rho != 0
///   component_max  largest per-component sum over gamma (the classical
///                  single-function SSI, maximized over rho != 0)
enum class SsiConvention { all, nonzero, component_max };

inline const char* to_string(SsiConvention c)
{
    switch (c) {
    case SsiConvention::all: return "all";
    case SsiConvention::nonzero: return "nonzero";
    case SsiConvention::component_max: return "component_max";
    }
    return "?";
}

inline std::optional<SsiConvention> ssi_convention_from_string(const std::string& s)
{
    if (s == "all")
        return SsiConvention::all;
    if (s == "nonzero")
        return SsiConvention::nonzero;
    if (s == "component_max" || s == "component")
        return SsiConvention::component_max;
    return std::nullopt;
}

inline std::uint64_t sum_of_squares_indicator(const SpectrumTable& act, SsiConvention convention)
{
    auto sq = [](std::int32_t v) { return static_cast<std::uint64_t>(std::int64_t{v} * v); };
    std::uint64_t total = 0;
    switch (convention) {
    case SsiConvention::all:
        for (auto v : act.values())
            total += sq(v);
        break;
    case SsiConvention::nonzero:
        for (std::size_t g = 1; g < act.rows(); ++g)
            for (std::size_t r = 1; r < act.cols(); ++r)
                total += sq(act(g, r));
        break;
    case SsiConvention::component_max:
        for (std::size_t r = 1; r < act.cols(); ++r) {
            std::uint64_t col = 0;
            for (std::size_t g = 0; g < act.rows(); ++g)
                col += sq(act(g, r));
            total = std::max(total, col);
        }
        break;
    }
    return total;
}

inline std::uint64_t sum_of_squares_indicator(const SBox& s, SsiConvention convention)
{
    return sum_of_squares_indicator(autocorrelation_table(s), convention);
}

// --- algebraic normal form -------------------------------------------------

/// Coefficient at index u belongs to the monomial prod_{i in u} x_i.
struct AnfPolynomial {
    unsigned n = 0;
    std::vector<std::uint8_t> coefficients;

    /// Largest monomial weight with a nonzero coefficient; 0 for the zero polynomial.
    unsigned degree() const
    {
        unsigned d = 0;
        for (std::size_t u = 0; u < coefficients.size(); ++u)
            if (coefficients[u])
                d = std::max(d, weight(static_cast<std::uint32_t>(u)));
        return d;
    }

    std::size_t term_count() const
    {
        return static_cast<std::size_t>(std::count(coefficients.begin(), coefficients.end(), std::uint8_t{1}));
    }

    bool is_zero() const { return term_count() == 0; }

    friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;
};

inline AnfPolynomial anf(std::span<const std::uint8_t> truth)
{
    AnfPolynomial p{static_cast<unsigned>(std::countr_zero(truth.size())), {truth.begin(), truth.end()}};
    moebius(p.coefficients);
    return p;
}

inline AnfPolynomial anf(const BooleanComponent& f) { return anf(std::span<const std::uint8_t>(f.truth)); }

/// a_u = XOR of f(x) over all x whose support is contained in u.
inline AnfPolynomial anf_naive(std::span<const std::uint8_t> truth)
{
    AnfPolynomial p{static_cast<unsigned>(std::countr_zero(truth.size())), std::vector<std::uint8_t>(truth.size())};
    for (std::uint32_t u = 0; u < truth.size(); ++u) {
        std::uint8_t acc = truth[0];
        for (std::uint32_t x = u; x != 0; x = (x - 1) & u)
            acc ^= truth[x];
        p.coefficients[u] = acc;
    }
    return p;
}

/// Evaluates the ANF back into a truth table (same butterfly).
inline std::vector<std::uint8_t> truth_table(const AnfPolynomial& p)
{
    std::vector<std::uint8_t> t = p.coefficients;
    moebius(t);
    return t;
}

struct DegreeProfile {
    unsigned max_coordinate = 0;
    unsigned min_coordinate = 0;
    std::optional<unsigned> min_component; ///< over all rho != 0; skipped for very wide boxes
};

inline DegreeProfile degree_profile(const SBox& s)
{
    DegreeProfile d;
    d.min_coordinate = s.n();
    for (unsigned j = 0; j < s.m(); ++j) {
        const unsigned deg = anf(coordinate(s, j)).degree();
        d.max_coordinate = std::max(d.max_coordinate, deg);
        d.min_coordinate = std::min(d.min_coordinate, deg);
    }
    if (s.n() + s.m() <= kMaxTableLog2) {
        unsigned lo = s.n();
        for (std::uint32_t r = 1; r < pow2(s.m()); ++r)
            lo = std::min(lo, anf(component(s, r)).degree());
        d.min_component = lo;
    }
    return d;
}

/// Max over coordinate functions of the ANF degree.
inline unsigned algebraic_degree(const SBox& s)
{
    unsigned d = 0;
    for (unsigned j = 0; j < s.m(); ++j)
        d = std::max(d, anf(coordinate(s, j)).degree());
    return d;
}

} // namespace sboxkit

#pragma once

// Definitional reference implementations. Deliberately slow and written
// without the library's transforms, so they can check the fast paths.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <sboxkit/sbox.hpp>

namespace oracle {

using Table = std::vector<std::vector<long long>>;
using sboxkit::SBox;

inline int par(std::uint32_t v) { return std::popcount(v) & 1; }
inline int sgn(int bit) { return bit ? -1 : 1; }

/// W[b][a] = sum_x (-1)^(b.S(x) + a.x)
inline Table walsh(const SBox& s)
{
    const std::size_t N = s.size(), M = std::size_t{1} << s.m();
    Table t(M, std::vector<long long>(N, 0));
    for (std::uint32_t b = 0; b < M; ++b)
        for (std::uint32_t a = 0; a < N; ++a)
            for (std::uint32_t x = 0; x < N; ++x)
                t[b][a] += sgn(par(b & s[x]) ^ par(a & x));
    return t;
}

/// ACT[g][r] = sum_x (-1)^(r.(S(x) xor S(x xor g)))
inline Table act(const SBox& s)
{
    const std::size_t N = s.size(), M = std::size_t{1} << s.m();
    Table t(N, std::vector<long long>(M, 0));
    for (std::uint32_t g = 0; g < N; ++g)
        for (std::uint32_t r = 0; r < M; ++r)
            for (std::uint32_t x = 0; x < N; ++x)
                t[g][r] += sgn(par(r & (s[x] ^ s[x ^ g])));
    return t;
}

inline Table ddt(const SBox& s)
{
    const std::size_t N = s.size(), M = std::size_t{1} << s.m();
    Table t(N, std::vector<long long>(M, 0));
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t x = 0; x < N; ++x)
            ++t[a][s[x] ^ s[x ^ a]];
    return t;
}

/// Raw LAT: #{x : a.x = b.S(x)}, indexed [a][b].
inline Table lat_raw(const SBox& s)
{
    const std::size_t N = s.size(), M = std::size_t{1} << s.m();
    Table t(N, std::vector<long long>(M, 0));
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t b = 0; b < M; ++b)
            for (std::uint32_t x = 0; x < N; ++x)
                t[a][b] += par(a & x) == par(b & s[x]);
    return t;
}

inline std::vector<std::uint32_t> inverse(const SBox& s)
{
    std::vector<std::uint32_t> inv(s.size());
    for (std::uint32_t x = 0; x < s.size(); ++x)
        inv[s[x]] = x;
    return inv;
}

/// #{x : S^-1(S(x) xor d) xor S^-1(S(x xor a) xor d) = a}
inline Table bct(const SBox& s)
{
    const auto inv = oracle::inverse(s);
    const std::size_t N = s.size();
    Table t(N, std::vector<long long>(N, 0));
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t d = 0; d < N; ++d)
            for (std::uint32_t x = 0; x < N; ++x)
                t[a][d] += (inv[s[x] ^ d] ^ inv[s[x ^ a] ^ d]) == a;
    return t;
}

/// #{x : r.S(x) = r.S(x xor a)} - 2^(n-1)
inline Table dlct(const SBox& s)
{
    const std::size_t N = s.size(), M = std::size_t{1} << s.m();
    Table t(N, std::vector<long long>(M, 0));
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t r = 0; r < M; ++r) {
            long long c = 0;
            for (std::uint32_t x = 0; x < N; ++x)
                c += par(r & s[x]) == par(r & s[x ^ a]);
            t[a][r] = c - static_cast<long long>(N / 2);
        }
    return t;
}

/// min over components and affine functions of the Hamming distance.
inline long long nonlinearity(const SBox& s)
{
    const std::size_t N = s.size(), M = std::size_t{1} << s.m();
    long long best = static_cast<long long>(N);
    for (std::uint32_t r = 1; r < M; ++r)
        for (std::uint32_t a = 0; a < N; ++a)
            for (int c = 0; c < 2; ++c) {
                long long dist = 0;
                for (std::uint32_t x = 0; x < N; ++x)
                    dist += par(r & s[x]) != (par(a & x) ^ c);
                best = std::min(best, dist);
            }
    return best;
}

inline long long differential_uniformity(const SBox& s)
{
    long long best = 0;
    const auto t = oracle::ddt(s);
    for (std::size_t a = 1; a < t.size(); ++a)
        for (auto v : t[a])
            best = std::max(best, v);
    return best;
}

/// Degree of a coordinate via a_u = XOR_{x subset u} f(x).
inline unsigned algebraic_degree(const SBox& s)
{
    unsigned best = 0;
    for (unsigned j = 0; j < s.m(); ++j)
        for (std::uint32_t u = 0; u < s.size(); ++u) {
            int acc = 0;
            for (std::uint32_t x = 0; x < s.size(); ++x)
                if ((x & ~u) == 0)
                    acc ^= (s[x] >> j) & 1;
            if (acc)
                best = std::max(best, static_cast<unsigned>(std::popcount(u)));
        }
    return best;
}

inline std::vector<std::size_t> cycle_lengths(const SBox& s)
{
    std::vector<bool> seen(s.size(), false);
    std::vector<std::size_t> out;
    for (std::uint32_t x = 0; x < s.size(); ++x) {
        if (seen[x])
            continue;
        std::size_t len = 0;
        for (std::uint32_t y = x; !seen[y]; y = s[y]) {
            seen[y] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// (dx, bit) pairs whose output bit is fixed over every x.
inline std::size_t undisturbed_count(const SBox& s)
{
    std::size_t count = 0;
    for (std::uint32_t a = 1; a < s.size(); ++a) {
        std::set<std::uint32_t> outs;
        for (std::uint32_t x = 0; x < s.size(); ++x)
            outs.insert(s[x] ^ s[x ^ a]);
        for (unsigned j = 0; j < s.m(); ++j) {
            std::set<unsigned> bits;
            for (auto o : outs)
                bits.insert((o >> j) & 1u);
            count += bits.size() == 1;
        }
    }
    return count;
}

/// Ordered (r != 0, g != 0) pairs with r.(S(x) xor S(x xor g)) constant.
inline std::size_t linear_structure_count(const SBox& s)
{
    std::size_t count = 0;
    for (std::uint32_t r = 1; r < (1u << s.m()); ++r)
        for (std::uint32_t g = 1; g < s.size(); ++g) {
            std::set<int> vals;
            for (std::uint32_t x = 0; x < s.size(); ++x)
                vals.insert(par(r & (s[x] ^ s[x ^ g])));
            count += vals.size() == 1;
        }
    return count;
}

inline double dpa_snr(const SBox& s)
{
    const auto w = oracle::walsh(s);
    const double N = static_cast<double>(s.size());
    long double q = 0;
    for (std::uint32_t a = 0; a < s.size(); ++a) {
        long double inner = 0;
        for (unsigned i = 0; i < s.m(); ++i)
            inner += static_cast<long double>(w[1u << i][a]);
        q += inner * inner * inner * inner;
    }
    return static_cast<double>(s.m() * N * N / std::sqrt(q));
}

inline double transparency_order(const SBox& s)
{
    const auto t = oracle::act(s);
    const double N = static_cast<double>(s.size());
    double best = -1e300;
    for (std::uint32_t beta = 0; beta < (1u << s.m()); ++beta) {
        double sum = 0;
        for (std::uint32_t g = 1; g < s.size(); ++g) {
            double inner = 0;
            for (unsigned i = 0; i < s.m(); ++i)
                inner += sgn((beta >> i) & 1u) * static_cast<double>(t[g][1u << i]);
            sum += std::fabs(inner);
        }
        const double lead = std::fabs(static_cast<double>(s.m()) - 2.0 * std::popcount(beta));
        best = std::max(best, lead - sum / (N * N - N));
    }
    return best;
}

/// Carry-less multiply mod p, bit by bit.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, unsigned n)
{
    std::uint64_t prod = 0;
    for (unsigned i = 0; i < n; ++i)
        if ((b >> i) & 1u)
            prod ^= std::uint64_t{a} << i;
    for (int i = 2 * static_cast<int>(n); i >= static_cast<int>(n); --i)
        if ((prod >> i) & 1u)
            prod ^= std::uint64_t{p} << (i - static_cast<int>(n));
    return static_cast<std::uint32_t>(prod);
}

/// Horner evaluation of a coefficient vector (index = power).
inline std::uint32_t gf_eval(const std::vector<std::uint32_t>& c, std::uint32_t x, std::uint32_t p, unsigned n)
{
    std::uint32_t acc = 0;
    for (std::size_t k = c.size(); k-- > 0;)
        acc = gf_mul(acc, x, p, n) ^ c[k];
    return acc;
}

inline SBox random_permutation(unsigned n, std::mt19937_64& rng)
{
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    std::iota(t.begin(), t.end(), 0u);
    std::shuffle(t.begin(), t.end(), rng);
    return SBox(std::move(t), n);
}

inline SBox random_function(unsigned n, unsigned m, std::mt19937_64& rng)
{
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    for (auto& v : t)
        v = static_cast<std::uint32_t>(rng() & ((1u << m) - 1));
    return SBox(std::move(t), m);
}

/// Compares a library table (row, col) with an oracle table [row][col].
template <class Spectrum>
bool equal(const Spectrum& t, const Table& o)
{
    if (t.rows() != o.size() || t.cols() != o.front().size())
        return false;
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c)
            if (t(r, c) != o[r][c])
                return false;
    return true;
}

} // namespace oracle

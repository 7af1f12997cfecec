#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "bits.hpp"
#include "sbox.hpp"

namespace sboxkit {

/// Square bit-matrix over GF(2); row i is a bitmask, so (M x)_i = row_i . x.
class BitMatrix {
  public:
    BitMatrix() = default;
    explicit BitMatrix(std::vector<std::uint32_t> rows) : rows_(std::move(rows))
    {
        if (rows_.size() > kMaxWidth)
            throw PreconditionError("bit-matrix dimension exceeds 16");
        for (auto r : rows_)
            if (r > low_mask(static_cast<unsigned>(rows_.size())))
                throw PreconditionError("bit-matrix row " + to_hex(r) + " wider than the matrix");
    }

    static BitMatrix identity(unsigned dim)
    {
        std::vector<std::uint32_t> rows(dim);
        for (unsigned i = 0; i < dim; ++i)
            rows[i] = 1u << i;
        return BitMatrix(std::move(rows));
    }

    unsigned dim() const noexcept { return static_cast<unsigned>(rows_.size()); }
    const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }

    std::uint32_t apply(std::uint32_t x) const noexcept
    {
        std::uint32_t y = 0;
        for (unsigned i = 0; i < dim(); ++i)
            y |= dot(rows_[i], x) << i;
        return y;
    }

    /// (this * other) x = this(other(x)).
    BitMatrix operator*(const BitMatrix& other) const
    {
        std::vector<std::uint32_t> out(dim(), 0);
        // Column j of the product is this applied to column j of other.
        for (unsigned j = 0; j < dim(); ++j) {
            const std::uint32_t col = this->apply(other.apply(1u << j));
            for (unsigned i = 0; i < dim(); ++i)
                out[i] |= ((col >> i) & 1u) << j;
        }
        return BitMatrix(std::move(out));
    }

    unsigned rank() const
    {
        std::vector<std::uint32_t> m = rows_;
        unsigned r = 0;
        for (unsigned col = 0; col < dim() && r < dim(); ++col) {
            unsigned pivot = r;
            while (pivot < dim() && !((m[pivot] >> col) & 1u))
                ++pivot;
            if (pivot == dim())
                continue;
            std::swap(m[r], m[pivot]);
            for (unsigned i = 0; i < dim(); ++i)
                if (i != r && ((m[i] >> col) & 1u))
                    m[i] ^= m[r];
            ++r;
        }
        return r;
    }

    bool invertible() const { return rank() == dim(); }

    /// Gauss-Jordan on [M | I], pivot = first row at or below the diagonal
    /// with a one in the current column.
    BitMatrix inverse() const
    {
        std::vector<std::uint32_t> m = rows_;
        std::vector<std::uint32_t> inv = identity(dim()).rows();
        for (unsigned col = 0; col < dim(); ++col) {
            unsigned pivot = col;
            while (pivot < dim() && !((m[pivot] >> col) & 1u))
                ++pivot;
            if (pivot == dim())
                throw PreconditionError("singular bit-matrix");
            std::swap(m[col], m[pivot]);
            std::swap(inv[col], inv[pivot]);
            for (unsigned i = 0; i < dim(); ++i)
                if (i != col && ((m[i] >> col) & 1u)) {
                    m[i] ^= m[col];
                    inv[i] ^= inv[col];
                }
        }
        return BitMatrix(std::move(inv));
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::vector<std::uint32_t> rows_;
};

/// S'(x) = B * S(A * x xor a) xor b.
struct AffineTransform {
    BitMatrix input;            ///< A, n x n
    std::uint32_t input_const;  ///< a
    BitMatrix output;           ///< B, m x m
    std::uint32_t output_const; ///< b

    unsigned n() const { return input.dim(); }
    unsigned m() const { return output.dim(); }

    static AffineTransform identity(unsigned n, unsigned m)
    {
        return {BitMatrix::identity(n), 0, BitMatrix::identity(m), 0};
    }

    void validate() const
    {
        if (!input.invertible() || !output.invertible())
            throw PreconditionError("affine transform has a singular matrix");
        if (input_const > low_mask(n()) || output_const > low_mask(m()))
            throw PreconditionError("affine constant wider than its matrix");
    }

    /// t^{-1} = (A^{-1}, A^{-1} a, B^{-1}, B^{-1} b).
    AffineTransform inverse() const
    {
        const BitMatrix ai = input.inverse(), bi = output.inverse();
        return {ai, ai.apply(input_const), bi, bi.apply(output_const)};
    }

    friend bool operator==(const AffineTransform&, const AffineTransform&) = default;
};

inline SBox apply_affine(const SBox& s, const AffineTransform& t)
{
    if (t.n() != s.n() || t.m() != s.m())
        throw PreconditionError("affine transform is " + std::to_string(t.n()) + "x" + std::to_string(t.m()) +
                                " but the S-box is " + std::to_string(s.n()) + "x" + std::to_string(s.m()));
    t.validate();
    std::vector<std::uint32_t> out(s.size());
    for (std::uint32_t x = 0; x < s.size(); ++x)
        out[x] = t.output.apply(s[t.input.apply(x) ^ t.input_const]) ^ t.output_const;
    return SBox(std::move(out), s.m(), s.name().empty() ? std::string{} : s.name() + "'", s.source());
}

namespace detail {

inline BitMatrix random_invertible(unsigned dim, std::mt19937_64& rng)
{
    // Raw engine output only, so the sequence is identical on every platform.
    for (;;) {
        std::vector<std::uint32_t> rows(dim);
        for (auto& r : rows)
            r = static_cast<std::uint32_t>(rng()) & low_mask(dim);
        BitMatrix m(std::move(rows));
        if (m.invertible())
            return m;
    }
}

} // namespace detail

/// Seed-deterministic random transform with invertible A and B.
inline AffineTransform random_affine(unsigned n, unsigned m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    AffineTransform t;
    t.input = detail::random_invertible(n, rng);
    t.input_const = static_cast<std::uint32_t>(rng()) & low_mask(n);
    t.output = detail::random_invertible(m, rng);
    t.output_const = static_cast<std::uint32_t>(rng()) & low_mask(m);
    return t;
}

inline nlohmann::json to_json(const AffineTransform& t)
{
    return {{"n", t.n()},
            {"m", t.m()},
            {"A", t.input.rows()},
            {"a", t.input_const},
            {"B", t.output.rows()},
            {"b", t.output_const}};
}

inline AffineTransform affine_from_json(const nlohmann::json& j)
{
    try {
        AffineTransform t{BitMatrix(j.at("A").get<std::vector<std::uint32_t>>()), j.value("a", 0u),
                          BitMatrix(j.at("B").get<std::vector<std::uint32_t>>()), j.value("b", 0u)};
        if (j.contains("n") && j.at("n").get<unsigned>() != t.n())
            throw ParseError("transform field 'n' disagrees with the size of A");
        if (j.contains("m") && j.at("m").get<unsigned>() != t.m())
            throw ParseError("transform field 'm' disagrees with the size of B");
        t.validate();
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed affine transform: ") + e.what());
    }
}

} // namespace sboxkit

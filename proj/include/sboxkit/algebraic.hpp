#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bits.hpp"
#include "sbox.hpp"

namespace sboxkit {

namespace detail {

inline unsigned poly_degree(std::uint64_t p) { return p ? static_cast<unsigned>(std::bit_width(p)) - 1 : 0; }

/// Remainder of a(x) modulo b(x) over GF(2), b != 0.
inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b)
{
    const unsigned db = poly_degree(b);
    while (a && poly_degree(a) >= db)
        a ^= b << (poly_degree(a) - db);
    return a;
}

} // namespace detail

/// True when p has no factor of degree 1..deg(p)/2 (trial division).
inline bool is_irreducible(std::uint64_t p)
{
    const unsigned d = detail::poly_degree(p);
    if (d == 0)
        return false;
    for (std::uint64_t q = 2; detail::poly_degree(q) <= d / 2; ++q)
        if (detail::poly_mod(p, q) == 0)
            return false;
    return true;
}

/// GF(2^n) given by an irreducible modulus of degree n, encoded as an
/// (n+1)-bit integer (x^4+x+1 -> 0x13). Elements use the natural bit encoding.
class FieldSpec {
  public:
    FieldSpec(unsigned n, std::uint32_t modulus) : n_(n), modulus_(modulus)
    {
        if (n < 1 || n > kMaxWidth)
            throw PreconditionError("field degree must be in 1..16");
        if (detail::poly_degree(modulus) != n)
            throw PreconditionError("modulus " + to_hex(modulus) + " does not have degree " + std::to_string(n));
        if (!is_irreducible(modulus))
            throw PreconditionError("modulus " + to_hex(modulus) + " is reducible");
    }

    /// x^4+x+1, x^5+x^2+1, x^8+x^4+x^3+x+1; for other degrees the numerically
    /// smallest irreducible polynomial (which is also what those three are).
    static FieldSpec standard(unsigned n)
    {
        switch (n) {
        case 4: return FieldSpec(4, 0x13);
        case 5: return FieldSpec(5, 0x25);
        case 8: return FieldSpec(8, 0x11b);
        default: break;
        }
        if (n < 1 || n > kMaxWidth)
            throw PreconditionError("field degree must be in 1..16");
        for (std::uint32_t p = (1u << n) + 1; p < (2u << n); p += 2)
            if (is_irreducible(p))
                return FieldSpec(n, p);
        throw PreconditionError("no irreducible polynomial found"); // unreachable
    }

    unsigned degree() const noexcept { return n_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::size_t order() const noexcept { return pow2(n_); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        std::uint32_t r = 0;
        while (b) {
            if (b & 1u)
                r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> n_)
                a ^= modulus_;
        }
        return r;
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept
    {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1u)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// a^{-1} = a^{2^n - 2}; requires a != 0.
    std::uint32_t inv(std::uint32_t a) const
    {
        if (a == 0)
            throw PreconditionError("inverse of zero");
        return pow(a, order() - 2);
    }

  private:
    unsigned n_;
    std::uint32_t modulus_;
};

/// Coefficients over GF(2^n); index = power of x.
struct FieldPolynomial {
    std::vector<std::uint32_t> coefficients;

    /// Degree of the highest nonzero coefficient; 0 for the zero polynomial.
    std::size_t degree() const
    {
        for (std::size_t k = coefficients.size(); k-- > 0;)
            if (coefficients[k])
                return k;
        return 0;
    }

    std::size_t term_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(coefficients.begin(), coefficients.end(), [](std::uint32_t c) { return c != 0; }));
    }

    std::uint32_t evaluate(const FieldSpec& f, std::uint32_t x) const
    {
        std::uint32_t acc = 0;
        for (std::size_t k = coefficients.size(); k-- > 0;)
            acc = f.mul(acc, x) ^ coefficients[k];
        return acc;
    }

    friend bool operator==(const FieldPolynomial& a, const FieldPolynomial& b)
    {
        const std::size_t len = std::max(a.coefficients.size(), b.coefficients.size());
        for (std::size_t k = 0; k < len; ++k) {
            const auto ca = k < a.coefficients.size() ? a.coefficients[k] : 0u;
            const auto cb = k < b.coefficients.size() ? b.coefficients[k] : 0u;
            if (ca != cb)
                return false;
        }
        return true;
    }
};

/// "0x1*x^14 + 0x3*x^2 + 0x5", highest power first; "0" for the zero polynomial.
inline std::string to_string(const FieldPolynomial& p)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = p.coefficients.size(); k-- > 0;) {
        if (!p.coefficients[k])
            continue;
        if (!first)
            out << " + ";
        first = false;
        out << to_hex(p.coefficients[k]);
        if (k == 1)
            out << "*x";
        else if (k > 1)
            out << "*x^" << k;
    }
    return first ? std::string("0") : out.str();
}

namespace detail {

inline void require_interpolable(const SBox& s, const FieldSpec& f)
{
    require_square(s, "interpolation polynomial");
    if (f.degree() != s.n())
        throw PreconditionError("field degree " + std::to_string(f.degree()) + " does not match n = " +
                                std::to_string(s.n()));
}

} // namespace detail

/// Closed form of the interpolant over the whole field. In characteristic 2,
/// 1 - (x - a)^{q-1} = 1 + sum_k x^k a^{q-1-k}, which gives
///   c_0 = S(0),  c_{q-1} = sum_a S(a),  c_k = sum_{a != 0} S(a) a^{q-1-k}.
inline FieldPolynomial interpolation_polynomial(const SBox& s, const FieldSpec& f)
{
    detail::require_interpolable(s, f);
    const std::size_t q = f.order();
    FieldPolynomial p{std::vector<std::uint32_t>(q, 0)};
    p.coefficients[0] = s[0];
    for (std::uint32_t a = 0; a < q; ++a)
        p.coefficients[q - 1] ^= s[a];
    for (std::uint32_t a = 1; a < q; ++a) {
        if (!s[a])
            continue;
        // a^{q-1-k} for k = 1 .. q-2, walking powers of a^{-1} upward from a^{q-2}.
        const std::uint32_t ainv = f.inv(a);
        std::uint32_t power = ainv; // a^{q-2} = a^{-1}
        for (std::size_t k = 1; k + 1 < q; ++k) {
            p.coefficients[k] ^= f.mul(s[a], power);
            power = f.mul(power, ainv);
        }
    }
    return p;
}

/// Textbook Lagrange: sum_i y_i prod_{j != i} (x - x_j) / (x_i - x_j),
/// with each numerator obtained by dividing prod_j (x - x_j) = x^q - x by
/// (x - x_i).
inline FieldPolynomial interpolation_polynomial_lagrange(const SBox& s, const FieldSpec& f)
{
    detail::require_interpolable(s, f);
    const std::size_t q = f.order();
    // x^q + x over GF(2^n), coefficients low to high.
    std::vector<std::uint32_t> full(q + 1, 0);
    full[q] = 1;
    full[1] = 1;
    FieldPolynomial p{std::vector<std::uint32_t>(q, 0)};
    std::vector<std::uint32_t> basis(q);
    for (std::uint32_t xi = 0; xi < q; ++xi) {
        if (!s[xi])
            continue;
        // Synthetic division of full by (x + xi).
        std::uint32_t carry = 0;
        for (std::size_t k = q; k-- > 0;) {
            carry = full[k + 1] ^ f.mul(carry, xi);
            basis[k] = carry;
        }
        std::uint32_t denom = 1;
        for (std::uint32_t xj = 0; xj < q; ++xj)
            if (xj != xi)
                denom = f.mul(denom, xi ^ xj);
        const std::uint32_t scale = f.mul(s[xi], f.inv(denom));
        for (std::size_t k = 0; k < q; ++k)
            p.coefficients[k] ^= f.mul(scale, basis[k]);
    }
    return p;
}

struct InterpolationSummary {
    std::size_t degree = 0;
    std::size_t terms = 0;
};

inline InterpolationSummary ip_summary(const FieldPolynomial& p) { return {p.degree(), p.term_count()}; }

} // namespace sboxkit

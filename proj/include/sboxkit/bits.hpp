#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sboxkit {

/// Thrown when input text cannot be turned into an S-box.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation's precondition does not hold for the given box
/// (non-bijective input to an inverse, n != m for branch numbers, etc).
class PreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned kMaxWidth = 16;

inline constexpr unsigned weight(std::uint32_t v) noexcept { return static_cast<unsigned>(std::popcount(v)); }

/// Inner product over GF(2): parity of the masked bits.
inline constexpr unsigned dot(std::uint32_t a, std::uint32_t b) noexcept { return weight(a & b) & 1u; }

/// (-1)^bit as a signed integer.
inline constexpr int sign_of(unsigned bit) noexcept { return bit ? -1 : 1; }

inline constexpr std::uint32_t low_mask(unsigned bits) noexcept
{
    return bits >= 32 ? 0xffffffffu : ((std::uint32_t{1} << bits) - 1u);
}

inline constexpr std::size_t pow2(unsigned e) noexcept { return std::size_t{1} << e; }

inline std::string to_hex(std::uint64_t v)
{
    static constexpr char digits[] = "0123456789abcdef";
    if (v == 0)
        return "0x0";
    std::string out;
    while (v) {
        out.insert(out.begin(), digits[v & 0xf]);
        v >>= 4;
    }
    return "0x" + out;
}

} // namespace sboxkit

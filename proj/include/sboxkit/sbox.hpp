#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bits.hpp"

namespace sboxkit {

/// An n-to-m bit lookup table. Immutable once constructed; the constructor
/// enforces the size and range invariants.
class SBox {
  public:
    SBox(std::vector<std::uint32_t> table, unsigned out_width, std::string name = {}, std::string source = {})
        : table_(std::move(table)), m_(out_width), name_(std::move(name)), source_(std::move(source))
    {
        const std::size_t len = table_.size();
        if (len < 2 || !std::has_single_bit(len))
            throw ParseError("table length " + std::to_string(len) + " is not a power of two >= 2");
        n_ = static_cast<unsigned>(std::countr_zero(len));
        if (n_ > kMaxWidth)
            throw ParseError("input width " + std::to_string(n_) + " exceeds the supported maximum of 16");
        if (m_ < 1 || m_ > kMaxWidth)
            throw ParseError("output width " + std::to_string(m_) + " outside 1..16");
        for (std::size_t x = 0; x < len; ++x)
            if (table_[x] > low_mask(m_))
                throw ParseError("entry " + std::to_string(table_[x]) + " at index " + std::to_string(x) +
                                 " does not fit in " + std::to_string(m_) + " bits");
    }

    /// Builds a box whose output width is the bit width of the largest entry
    /// unless `width` pins it.
    static SBox from_table(std::vector<std::uint32_t> table, std::optional<unsigned> width = {},
                           std::string name = {}, std::string source = {})
    {
        unsigned m = 1;
        if (width) {
            m = *width;
        } else if (!table.empty()) {
            m = std::max(1u, static_cast<unsigned>(std::bit_width(*std::max_element(table.begin(), table.end()))));
        }
        return SBox(std::move(table), m, std::move(name), std::move(source));
    }

    unsigned n() const noexcept { return n_; }
    unsigned m() const noexcept { return m_; }
    std::size_t size() const noexcept { return table_.size(); }
    std::uint32_t in_mask() const noexcept { return low_mask(n_); }
    std::uint32_t out_mask() const noexcept { return low_mask(m_); }
    std::span<const std::uint32_t> table() const noexcept { return table_; }
    std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
    std::uint32_t operator[](std::size_t x) const { return table_[x]; }
    const std::string& name() const noexcept { return name_; }
    const std::string& source() const noexcept { return source_; }
    bool square() const noexcept { return n_ == m_; }

    SBox renamed(std::string name, std::string source = {}) const
    {
        SBox copy = *this;
        copy.name_ = std::move(name);
        if (!source.empty())
            copy.source_ = std::move(source);
        return copy;
    }

    /// Equality is over the mapping only (widths and table), not metadata.
    friend bool operator==(const SBox& a, const SBox& b) { return a.m_ == b.m_ && a.table_ == b.table_; }

  private:
    std::vector<std::uint32_t> table_;
    unsigned n_ = 0;
    unsigned m_ = 0;
    std::string name_;
    std::string source_;
};

/// x -> rho . S(x) for a fixed output mask.
struct BooleanComponent {
    std::uint32_t mask = 0;
    std::vector<std::uint8_t> truth;
};

inline BooleanComponent component(const SBox& s, std::uint32_t mask)
{
    BooleanComponent f{mask, std::vector<std::uint8_t>(s.size())};
    for (std::size_t x = 0; x < s.size(); ++x)
        f.truth[x] = static_cast<std::uint8_t>(dot(mask, s[x]));
    return f;
}

inline BooleanComponent coordinate(const SBox& s, unsigned bit) { return component(s, std::uint32_t{1} << bit); }

// --- text formats ----------------------------------------------------------

enum class InputFormat { automatic, integers, compact_hex };

namespace detail {

inline std::string strip_comment_lines(std::string_view text)
{
    std::string out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] != '#') {
            out.append(line);
            out.push_back('\n');
        }
        pos = eol + 1;
    }
    return out;
}

inline std::vector<std::string> split_tokens(std::string_view text)
{
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty())
                tokens.push_back(std::exchange(cur, {}));
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        tokens.push_back(cur);
    return tokens;
}

inline std::uint32_t parse_integer_token(const std::string& tok, std::size_t index)
{
    std::string_view body = tok;
    int base = 10;
    if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
        body.remove_prefix(2);
        base = 16;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value, base);
    if (ec != std::errc{} || ptr != body.data() + body.size())
        throw ParseError("malformed token '" + tok + "' at entry " + std::to_string(index));
    if (value > low_mask(kMaxWidth))
        throw ParseError("entry " + tok + " at index " + std::to_string(index) + " exceeds 16 bits");
    return static_cast<std::uint32_t>(value);
}

inline bool looks_compact_hex(const std::vector<std::string>& tokens)
{
    if (tokens.size() != 1 || tokens[0].size() < 2)
        return false;
    const std::string& t = tokens[0];
    if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X'))
        return false;
    return std::all_of(t.begin(), t.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
}

} // namespace detail

/// Parses a table from text. Accepted forms: whitespace/comma separated
/// decimal or 0x-hex integers; a compact string with one hex digit per entry;
/// either of those with '#' comment lines.
inline SBox parse_sbox(std::string_view text, InputFormat format = InputFormat::automatic,
                       std::optional<unsigned> width = {}, std::string name = {}, std::string source = {})
{
    const std::string body = detail::strip_comment_lines(text);
    const auto tokens = detail::split_tokens(body);
    if (tokens.empty())
        throw ParseError("no table entries found");

    if (format == InputFormat::automatic)
        format = detail::looks_compact_hex(tokens) ? InputFormat::compact_hex : InputFormat::integers;

    std::vector<std::uint32_t> table;
    if (format == InputFormat::compact_hex) {
        if (tokens.size() != 1)
            throw ParseError("compact hex input must be a single run of hex digits");
        if (width && *width > 4)
            throw ParseError("compact hex input only carries 4-bit entries");
        std::size_t i = 0;
        for (char c : tokens[0]) {
            if (!std::isxdigit(static_cast<unsigned char>(c)))
                throw ParseError(std::string("malformed hex digit '") + c + "' at entry " + std::to_string(i));
            const auto lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            table.push_back(static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(lc)) ? lc - '0'
                                                                                                     : lc - 'a' + 10));
            ++i;
        }
    } else {
        table.reserve(tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i)
            table.push_back(detail::parse_integer_token(tokens[i], i));
    }
    if (!std::has_single_bit(table.size()) || table.size() < 2)
        throw ParseError("length " + std::to_string(table.size()) + " is not a power of two");
    return SBox::from_table(std::move(table), width, std::move(name), std::move(source));
}

/// Emits the integer list format, 16 entries per line, hex padded to the
/// output width. `parse_sbox(serialize(s), automatic, s.m())` returns `s`.
inline std::string serialize(const SBox& s)
{
    std::ostringstream out;
    if (!s.name().empty())
        out << "# " << s.name() << '\n';
    out << "# n=" << s.n() << " m=" << s.m() << '\n';
    const unsigned digits = (s.m() + 3) / 4;
    for (std::size_t x = 0; x < s.size(); ++x) {
        std::string h = to_hex(s[x]).substr(2);
        out << "0x" << std::string(digits > h.size() ? digits - h.size() : 0, '0') << h;
        if (x + 1 == s.size())
            out << '\n';
        else
            out << ((x % 16 == 15) ? ",\n" : ", ");
    }
    return out.str();
}

// --- structural metrics ----------------------------------------------------

inline bool is_bijective(const SBox& s)
{
    if (!s.square())
        return false;
    std::vector<bool> seen(s.size(), false);
    for (auto y : s.table()) {
        if (seen[y])
            return false;
        seen[y] = true;
    }
    return true;
}

/// Every nonzero component x -> rho.S(x) takes the value 1 exactly 2^{n-1} times.
inline bool is_balanced(const SBox& s)
{
    if (s.m() > s.n())
        return false;
    // Balanced components for every rho != 0 <=> every output value is hit 2^{n-m} times.
    std::vector<std::size_t> hits(pow2(s.m()), 0);
    for (auto y : s.table())
        ++hits[y];
    const std::size_t expected = pow2(s.n() - s.m());
    return std::all_of(hits.begin(), hits.end(), [&](std::size_t h) { return h == expected; });
}

inline void require_bijective(const SBox& s, const char* what)
{
    if (!is_bijective(s))
        throw PreconditionError(std::string(what) + " requires a bijective S-box");
}

inline void require_square(const SBox& s, const char* what)
{
    if (!s.square())
        throw PreconditionError(std::string(what) + " requires n = m");
}

/// Cycle lengths of the permutation, in order of each cycle's smallest element.
inline std::vector<std::size_t> cycle_lengths(const SBox& s)
{
    require_bijective(s, "cycle decomposition");
    std::vector<bool> seen(s.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (seen[x])
            continue;
        std::size_t len = 0;
        for (std::size_t y = x; !seen[y]; y = s[y]) {
            seen[y] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

/// Least k >= 1 with S^k = id, i.e. the lcm of the cycle lengths.
inline std::uint64_t permutation_order(const SBox& s)
{
    std::uint64_t order = 1;
    for (std::size_t len : cycle_lengths(s)) {
        const std::uint64_t g = std::gcd(order, static_cast<std::uint64_t>(len));
        const std::uint64_t step = len / g;
        if (order > std::numeric_limits<std::uint64_t>::max() / step)
            throw PreconditionError("permutation order exceeds 64 bits");
        order *= step;
    }
    return order;
}

/// Length of the longest cycle of the permutation.
inline std::size_t longest_cycle(const SBox& s)
{
    const auto lengths = cycle_lengths(s);
    return *std::max_element(lengths.begin(), lengths.end());
}

inline std::vector<std::uint32_t> fixed_points(const SBox& s)
{
    require_square(s, "fixed points");
    std::vector<std::uint32_t> pts;
    for (std::uint32_t x = 0; x < s.size(); ++x)
        if (s[x] == x)
            pts.push_back(x);
    return pts;
}

/// Inputs mapped to their own bitwise complement within n bits.
inline std::vector<std::uint32_t> opposite_fixed_points(const SBox& s)
{
    require_square(s, "opposite fixed points");
    std::vector<std::uint32_t> pts;
    for (std::uint32_t x = 0; x < s.size(); ++x)
        if (s[x] == (x ^ s.in_mask()))
            pts.push_back(x);
    return pts;
}

inline SBox inverse(const SBox& s)
{
    require_bijective(s, "inverse");
    std::vector<std::uint32_t> inv(s.size());
    for (std::uint32_t x = 0; x < s.size(); ++x)
        inv[s[x]] = x;
    return SBox(std::move(inv), s.n(), s.name().empty() ? std::string{} : s.name() + "^-1", s.source());
}

inline SBox identity_sbox(unsigned n)
{
    std::vector<std::uint32_t> t(pow2(n));
    std::iota(t.begin(), t.end(), 0u);
    return SBox(std::move(t), n, "identity");
}

} // namespace sboxkit

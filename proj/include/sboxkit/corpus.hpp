#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bits.hpp"
#include "differential.hpp"
#include "linear.hpp"
#include "sbox.hpp"

namespace sboxkit {

namespace data {
// Tables live in data/*.inc as plain comma-separated lists.
inline constexpr std::uint16_t ascon[] = {
#include "data/ascon.inc"
};
inline constexpr std::uint16_t gift[] = {
#include "data/gift.inc"
};
inline constexpr std::uint16_t present[] = {
#include "data/present.inc"
};
inline constexpr std::uint16_t spongent[] = {
#include "data/spongent.inc"
};
inline constexpr std::uint16_t skinny8[] = {
#include "data/skinny8.inc"
};
} // namespace data

/// FNV-1a 64 over each entry as two little-endian bytes.
inline std::uint64_t table_checksum(std::span<const std::uint32_t> table)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto v : table)
        for (unsigned b : {v & 0xffu, (v >> 8) & 0xffu}) {
            h ^= b;
            h *= 0x100000001b3ull;
        }
    return h;
}

struct BuiltinEntry {
    std::string id;
    std::vector<std::string> aliases; ///< cipher names that use this table
    unsigned width = 0;
    std::span<const std::uint16_t> table;
    std::uint64_t checksum = 0;
    std::string citation;
    std::string provenance;
};

inline const std::vector<BuiltinEntry>& builtin_entries()
{
    static const std::vector<BuiltinEntry> entries = {
        {"ascon", {"isap"}, 5, data::ascon, 0xe1581d0d38b8ddf5ull,
         "C. Dobraunig, M. Eichlseder, F. Mendel, M. Schlaeffer. Ascon v1.2, submission to the NIST "
         "lightweight cryptography project (2021)",
         "https://ascon.iaik.tugraz.at/"},
        {"gift", {"gift-cofb"}, 4, data::gift, 0x0f13327804ff7945ull,
         "S. Banik et al. GIFT: A Small Present. CHES 2017",
         "doi:10.1007/978-3-319-66787-4_16"},
        {"present", {"photon-beetle"}, 4, data::present, 0x900c6dc4178b32d5ull,
         "A. Bogdanov et al. PRESENT: An Ultra-Lightweight Block Cipher. CHES 2007",
         "doi:10.1007/978-3-540-74735-2_31"},
        {"spongent", {"elephant"}, 4, data::spongent, 0x1bd8b98eddad22b5ull,
         "A. Bogdanov et al. SPONGENT: A Lightweight Hash Function. CHES 2011",
         "doi:10.1007/978-3-642-23951-9_21"},
        {"skinny8", {"romulus", "skinny"}, 8, data::skinny8, 0x7067ac3f51238325ull,
         "C. Beierle et al. The SKINNY Family of Block Ciphers and Its Low-Latency Variant MANTIS. CRYPTO 2016",
         "doi:10.1007/978-3-662-53008-5_5"},
    };
    return entries;
}

/// The six finalists with an S-box, in the usual comparison order; ascon and
/// isap share a table.
inline const std::vector<std::pair<std::string, std::string>>& finalist_columns()
{
    static const std::vector<std::pair<std::string, std::string>> cols = {
        {"romulus", "skinny8"}, {"ascon", "ascon"}, {"isap", "ascon"},
        {"elephant", "spongent"}, {"gift-cofb", "gift"}, {"photon-beetle", "present"},
    };
    return cols;
}

inline const BuiltinEntry& builtin_entry(const std::string& id)
{
    for (const auto& e : builtin_entries()) {
        if (e.id == id || std::find(e.aliases.begin(), e.aliases.end(), id) != e.aliases.end())
            return e;
    }
    throw PreconditionError("unknown builtin '" + id + "'");
}

namespace detail {

/// One cheap characteristic metric per table, checked at load.
inline void check_characteristic(const BuiltinEntry& e, const SBox& s)
{
    auto fail = [&](const std::string& what) {
        throw PreconditionError("builtin '" + e.id + "' failed its load-time check: " + what);
    };
    if (e.id == "ascon" && nonlinearity(s) != 8)
        fail("NL != 8");
    if (e.id == "present" && differential_uniformity(s) != 4)
        fail("DU != 4");
    if (e.id == "gift" && differential_branch_number(s) != 2)
        fail("BN_D != 2");
    if (e.id == "spongent" && differential_uniformity(s) != 4)
        fail("DU != 4");
    if (e.id == "skinny8" && nonlinearity(s) != 64)
        fail("NL != 64");
}

} // namespace detail

/// Loads a builtin by id or cipher alias, verifying checksum, bijectivity,
/// balancedness and one characteristic metric.
inline SBox builtin(const std::string& id)
{
    const BuiltinEntry& e = builtin_entry(id);
    std::vector<std::uint32_t> table(e.table.begin(), e.table.end());
    if (table.size() != pow2(e.width))
        throw PreconditionError("builtin '" + e.id + "' has a malformed table");
    if (table_checksum(table) != e.checksum)
        throw PreconditionError("builtin '" + e.id + "' checksum mismatch");
    SBox s(std::move(table), e.width, e.id, "builtin:" + e.id);
    if (!is_bijective(s) || !is_balanced(s))
        throw PreconditionError("builtin '" + e.id + "' is not a balanced bijection");
    detail::check_characteristic(e, s);
    return s;
}

} // namespace sboxkit

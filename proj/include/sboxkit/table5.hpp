#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"
#include "corpus.hpp"

namespace sboxkit {

/// Published reference values for the five finalist tables, used only for the
/// opt-in fixture comparison. Nothing in the analysis reads these.
namespace table5 {

struct Column {
    std::string label;   ///< column heading as printed
    std::string builtin; ///< corpus id whose table the column describes
};

inline const std::array<Column, 5>& columns()
{
    static const std::array<Column, 5> cols = {{
        {"Romulus", "skinny8"},
        {"ASCON/ISAP", "ascon"},
        {"Elephant", "spongent"},
        {"GIFT-COFB", "gift"},
        {"Photon-Beetle", "present"},
    }};
    return cols;
}

/// Column index for a builtin id or alias.
inline std::optional<std::size_t> column_for(const std::string& id)
{
    std::string canonical;
    try {
        canonical = builtin_entry(id).id;
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < columns().size(); ++i)
        if (columns()[i].builtin == canonical)
            return i;
    return std::nullopt;
}

struct Row {
    std::string metric; ///< report metric id
    std::array<double, 5> values;
};

/// Rows in printed order. Booleans are 1/0; DLU is the printed ratio.
inline const std::vector<Row>& rows()
{
    static const std::vector<Row> r = {
        {"bijectivity", {1, 1, 1, 1, 1}},
        {"balancedness", {1, 1, 1, 1, 1}},
        {"permutation", {1, 1, 1, 1, 1}},
        {"op", {140, 26, 13, 7, 9}},
        {"fp", {1, 0, 0, 0, 0}},
        {"ofp", {0, 0, 1, 1, 1}},
        {"bic", {1, 1, 1, 1, 1}},
        {"sac", {1, 1, 1, 1, 1}},
        {"ai", {256, 32, 16, 16, 256}},
        {"ssi", {4194304, 8192, 1024, 1024, 1024}},
        {"lap", {0.25, 0.25, 0.25, 0.25, 0.25}},
        {"nl", {64, 8, 4, 4, 4}},
        {"lbn", {2, 3, 2, 2, 2}},
        {"ls", {601, 91, 9, 9, 9}},
        {"ci", {0, 0, 0, 0, 0}},
        {"du", {64, 8, 4, 4, 6}},
        {"dbn", {2, 3, 3, 2, 3}},
        {"pc", {0, 0, 0, 0, 0}},
        {"udb", {258, 35, 3, 3, 6}},
        {"bu", {16, 16, 16, 16, 256}},
        {"dlu", {0.5, 0.5, 0.5, 0.5, 0.5}},
        {"ad", {6, 2, 3, 3, 3}},
        {"dpa_snr", {6.312455, 3.015113, 2.398501, 2.128608, 2.398501}},
        {"to", {7.174510, 4.258065, 3.266667, 3.533333, 3.466667}},
    };
    return r;
}

inline const Row* row_for(const std::string& metric)
{
    for (const auto& r : rows())
        if (r.metric == metric)
            return &r;
    return nullptr;
}

/// Printed reals carry six decimals.
inline constexpr double kTolerance = 1e-6;

inline bool same(double a, double b) { return std::fabs(a - b) <= kTolerance; }

struct Delta {
    std::string metric;
    std::string column;
    double fixture = 0;
    double computed = 0;
    std::string classification; ///< "column-shuffle candidate" or "unexplained"
    std::string note;

    friend bool operator==(const Delta&, const Delta&) = default;
};

/// Compares one computed value against its cell. Returns nothing on agreement.
/// A disagreement whose computed value equals another cell of the same row is
/// classified as a column-shuffle candidate.
inline std::optional<Delta> check(const std::string& metric, std::size_t column, double computed)
{
    const Row* r = row_for(metric);
    if (!r || column >= columns().size())
        return std::nullopt;
    const double fixture = r->values[column];
    if (same(fixture, computed))
        return std::nullopt;
    Delta d{metric, columns()[column].label, fixture, computed, "unexplained", {}};
    for (std::size_t other = 0; other < columns().size(); ++other) {
        if (other != column && same(r->values[other], computed)) {
            d.classification = "column-shuffle candidate";
            d.note = "computed value equals the " + columns()[other].label + " cell of this row";
            break;
        }
    }
    if (metric == "bu")
        d.note += std::string(d.note.empty() ? "" : "; ") + "printed row is inconsistent with the 4-bit upper bound 16";
    return d;
}

} // namespace table5

} // namespace sboxkit

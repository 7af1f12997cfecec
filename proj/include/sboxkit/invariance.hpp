#pragma once

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine.hpp"
#include "avalanche.hpp"
#include "combined.hpp"
#include "differential.hpp"
#include "linear.hpp"
#include "sbox.hpp"
#include "sca.hpp"
#include "spectral.hpp"

namespace sboxkit {

struct InvarianceRow {
    std::string id;
    std::string before;
    std::string after;
    bool asserted = false; ///< part of the invariant set; otherwise shown for reference only
    bool equal() const { return before == after; }
};

struct InvarianceReport {
    AffineTransform transform;
    std::vector<InvarianceRow> rows;

    /// All asserted rows agree.
    bool holds() const
    {
        for (const auto& r : rows)
            if (r.asserted && !r.equal())
                return false;
        return true;
    }
};

namespace detail {

using Probe = std::function<std::string(const SBox&)>;

inline std::string probe(const Probe& f, const SBox& s)
{
    try {
        return f(s);
    } catch (const PreconditionError& e) {
        return std::string("N/A (") + e.what() + ")";
    }
}

template <class T>
std::string str(const T& v)
{
    if constexpr (std::is_same_v<T, bool>)
        return v ? "yes" : "no";
    else if constexpr (std::is_same_v<T, Fraction>)
        return v.str();
    else if constexpr (std::is_floating_point_v<T>) {
        std::ostringstream o;
        o << std::fixed << std::setprecision(6) << v;
        return o.str();
    } else
        return std::to_string(v);
}

inline const std::vector<std::pair<std::string, Probe>>& invariant_probes()
{
    static const std::vector<std::pair<std::string, Probe>> p = {
        {"nl", [](const SBox& s) { return str(nonlinearity(s)); }},
        {"du", [](const SBox& s) { return str(differential_uniformity(s)); }},
        {"bu", [](const SBox& s) { return str(boomerang_uniformity(s)); }},
        {"dlct_max_abs", [](const SBox& s) { return str(differential_linear_uniformity(s).max_abs); }},
        {"ad", [](const SBox& s) { return str(algebraic_degree(s)); }},
        {"ai", [](const SBox& s) { return str(absolute_indicator(s)); }},
        {"ssi_nonzero", [](const SBox& s) { return str(sum_of_squares_indicator(s, SsiConvention::nonzero)); }},
        {"lap", [](const SBox& s) { return str(linear_approximation_probability(s)); }},
        {"balancedness", [](const SBox& s) { return str(is_balanced(s)); }},
        {"bijectivity", [](const SBox& s) { return str(is_bijective(s)); }},
    };
    return p;
}

inline const std::vector<std::pair<std::string, Probe>>& variant_probes()
{
    static const std::vector<std::pair<std::string, Probe>> p = {
        {"op",
         [](const SBox& s) {
             require_square(s, "order of permutation");
             require_bijective(s, "order of permutation");
             return str(longest_cycle(s));
         }},
        {"fp", [](const SBox& s) { return str(fixed_points(s).size()); }},
        {"ofp", [](const SBox& s) { return str(opposite_fixed_points(s).size()); }},
        {"sac", [](const SBox& s) { return str(sac_scalar(s)); }},
        {"bic", [](const SBox& s) { return str(bic_scalar(s)); }},
        {"lbn",
         [](const SBox& s) {
             const auto b = linear_branch_number(s);
             return b ? str(*b) : std::string("none");
         }},
        {"dbn", [](const SBox& s) { return str(differential_branch_number(s)); }},
        {"ls", [](const SBox& s) { return str(linear_structures(s).size()); }},
        {"dpa_snr", [](const SBox& s) { return str(dpa_snr(s)); }},
        {"to", [](const SBox& s) { return str(transparency_order(s)); }},
        {"udb", [](const SBox& s) { return str(undisturbed_bits(s).size()); }},
        {"pc", [](const SBox& s) { return str(propagation_criteria_order(s)); }},
    };
    return p;
}

} // namespace detail

/// Evaluates the invariant set on s and t(s); the variant set is listed side
/// by side without being asserted.
inline InvarianceReport invariance_report(const SBox& s, const AffineTransform& t)
{
    const SBox u = apply_affine(s, t);
    InvarianceReport r{t, {}};
    for (const auto& [id, f] : detail::invariant_probes())
        r.rows.push_back({id, detail::probe(f, s), detail::probe(f, u), true});
    for (const auto& [id, f] : detail::variant_probes())
        r.rows.push_back({id, detail::probe(f, s), detail::probe(f, u), false});
    return r;
}

inline nlohmann::json to_json(const InvarianceReport& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"id", row.id},
                        {"before", row.before},
                        {"after", row.after},
                        {"asserted", row.asserted},
                        {"equal", row.equal()}});
    return {{"transform", to_json(r.transform)}, {"holds", r.holds()}, {"rows", rows}};
}

inline void render_text(std::ostream& out, const InvarianceReport& r)
{
    out << "invariant set " << (r.holds() ? "preserved" : "VIOLATED") << "\n";
    for (const auto& row : r.rows) {
        out << "  " << std::left << std::setw(14) << row.id << std::setw(16) << row.before << std::setw(16)
            << row.after;
        if (row.asserted)
            out << (row.equal() ? "equal" : "DIFFERS");
        else
            out << "(variant)";
        out << "\n";
    }
}

} // namespace sboxkit

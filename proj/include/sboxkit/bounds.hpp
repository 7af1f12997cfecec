#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bits.hpp"

namespace sboxkit {

enum class Ideal { toward_lb, toward_ub, exact };

inline const char* to_string(Ideal i)
{
    switch (i) {
    case Ideal::toward_lb: return "toward_lb";
    case Ideal::toward_ub: return "toward_ub";
    case Ideal::exact: return "exact";
    }
    return "?";
}

/// One instantiated row of the theoretical-bounds catalogue.
struct BoundsEntry {
    std::string id;
    std::string label;
    double lb = 0;
    double ub = 0;
    bool lb_exclusive = false;
    bool ub_exclusive = false;
    Ideal ideal = Ideal::toward_lb;
    double target = 0; ///< only for Ideal::exact
    std::string formula;
    std::string note;
    std::optional<double> attainable_max; ///< known attainable optimum when the printed bound is not reached

    bool contains(double v) const
    {
        const bool above = lb_exclusive ? v > lb : v >= lb;
        const bool below = ub_exclusive ? v < ub : v <= ub;
        return above && below;
    }

    friend bool operator==(const BoundsEntry&, const BoundsEntry&) = default;
};

/// Order of the catalogue rows.
inline const std::vector<std::string>& bound_ids()
{
    static const std::vector<std::string> ids = {"op",  "fp",  "ofp", "bic", "sac", "ai",  "ssi", "lat",
                                                 "lap", "nl",  "lbn", "ls",  "ci",  "du",  "dbn", "pc",
                                                 "udb", "bu",  "dlu", "ad",  "dpa_snr", "to"};
    return ids;
}

/// Maps labels and common spellings ("BN_D", "xi", "DPA-SNR") onto ids.
inline std::optional<std::string> canonical_metric_id(std::string name)
{
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return c == '-' || c == ' ' ? '_' : static_cast<char>(std::tolower(c)); });
    static const std::vector<std::pair<std::string, std::string>> aliases = {
        {"bn_l", "lbn"}, {"bn_d", "dbn"}, {"xi", "lap"},      {"dpa_snr", "dpa_snr"}, {"dpasnr", "dpa_snr"},
        {"beta_u", "bu"},   {"order", "op"},    {"sac_scalar", "sac"},  {"bic_scalar", "bic"},
    };
    for (const auto& [alias, id] : aliases)
        if (name == alias)
            return id;
    return name;
}

/// Instantiates the bound row `id` for an n -> m box. `balanced` selects the
/// DPA-SNR range (the tighter [1, 2^{n/2}] applies to balanced boxes only).
inline BoundsEntry bounds_for(const std::string& raw_id, unsigned n, unsigned m, bool balanced = true)
{
    const std::string id = canonical_metric_id(raw_id).value_or(raw_id);
    const double N = std::ldexp(1.0, static_cast<int>(n));
    BoundsEntry e;
    e.id = id;
    auto set = [&](const char* label, double lb, double ub, Ideal ideal, const char* formula) {
        e.label = label;
        e.lb = lb;
        e.ub = ub;
        e.ideal = ideal;
        e.formula = formula;
    };
    if (id == "op") {
        set("OP", 1, N, Ideal::toward_lb, "1 <= OP <= 2^n");
    } else if (id == "fp") {
        set("FP", 0, N, Ideal::toward_lb, "0 <= FP <= 2^n");
    } else if (id == "ofp") {
        set("OFP", 0, N, Ideal::toward_lb, "0 <= OFP <= 2^n");
    } else if (id == "bic") {
        set("BIC", 0, 1, Ideal::exact, "0 <= BIC <= 1, ideal 0");
        e.target = 0;
    } else if (id == "sac") {
        set("SAC", 0, 1, Ideal::exact, "0 <= SAC <= 1, ideal 0.5");
        e.target = 0.5;
    } else if (id == "ai") {
        set("AI", std::sqrt(N * N / (N - 1)), N, Ideal::toward_lb, "sqrt(2^{2n}/(2^n-1)) <= AI <= 2^n");
    } else if (id == "ssi") {
        set("SSI", N * N, std::ldexp(1.0, static_cast<int>(3 * n + m)), Ideal::toward_lb,
            "2^{2n} <= SSI <= 2^{3n+m}");
    } else if (id == "lat") {
        set("LAT", 0, N / 2, Ideal::toward_lb, "0 <= max|LAT| <= 2^{n-1}");
    } else if (id == "lap") {
        set("LAP", 0, 0.5, Ideal::toward_lb, "0 <= LAP <= 1/2");
    } else if (id == "nl") {
        const double ub = (n % 2 == 0) ? N / 2 - std::ldexp(1.0, static_cast<int>(n / 2) - 1)
                                       : N / 2 - std::ldexp(1.0, static_cast<int>((n - 1) / 2));
        set("NL", 0, ub, Ideal::toward_ub,
            n % 2 == 0 ? "0 <= NL < 2^{n-1} - 2^{n/2-1}" : "0 <= NL < 2^{n-1} - 2^{(n-1)/2}");
        e.ub_exclusive = true;
        e.note = "upper bound as printed; not attained for every (n, parity) class";
        if (n == 4 && m == 4)
            e.attainable_max = 4;
    } else if (id == "lbn") {
        set("BN_L", 2, std::max(2.0, n - 1.0), Ideal::toward_ub, "2 <= BN_L <= n-1");
    } else if (id == "ls") {
        set("LS", 0, std::ldexp(1.0, static_cast<int>(n + m)), Ideal::toward_lb, "0 <= LS <= 2^{n+m}");
    } else if (id == "ci") {
        set("CI", 0, n, Ideal::toward_lb, "0 <= CI <= n");
    } else if (id == "du") {
        set("DU", 2, std::max(2.0, N), Ideal::toward_lb, "2 <= DU <= 2^n");
    } else if (id == "dbn") {
        set("BN_D", 2, std::max(2.0, std::ceil(2.0 * n / 3.0)), Ideal::toward_ub, "2 <= BN_D <= ceil(2n/3)");
    } else if (id == "pc") {
        set("PC", 0, n, Ideal::toward_ub, "0 <= PC <= n");
    } else if (id == "udb") {
        set("UDB", 0, 0, Ideal::exact, "UDB = 0");
        e.target = 0;
        e.note = "aspirational: any undisturbed bit is flagged";
    } else if (id == "bu") {
        set("BU", 2, std::max(2.0, N), Ideal::toward_lb, "2 <= BU <= 2^n");
    } else if (id == "dlu") {
        set("DLU", std::pow(2.0, n / 2.0 - 1.0), N / 2, Ideal::toward_lb, "2^{n/2-1} < DLU <= 2^{n-1}");
        e.lb_exclusive = true;
    } else if (id == "ad") {
        set("AD", 1, std::max(1.0, n - 1.0), Ideal::toward_ub, "1 <= AD <= n-1");
    } else if (id == "dpa_snr") {
        if (balanced) {
            set("DPA-SNR", 1, std::pow(2.0, n / 2.0), Ideal::toward_lb, "balanced: 1 <= DPA-SNR <= 2^{n/2}");
            e.note = "balanced-box range";
        } else {
            set("DPA-SNR", 0, std::pow(2.0, n / 2.0), Ideal::toward_lb, "0 <= DPA-SNR <= 2^{n/2}");
            e.note = "general range (box is not balanced)";
        }
    } else if (id == "to") {
        set("TO", 0, m, Ideal::toward_lb, "0 <= TO <= m");
    } else {
        throw PreconditionError("unknown property '" + raw_id + "'");
    }
    if ((id == "lbn" && n < 3) || (id == "dbn" && n < 2) || (id == "ad" && n < 2))
        e.note = "formula upper bound below the lower bound at this width; clamped to the lower bound";
    return e;
}

enum class VerdictKind { ideal, acceptable, poor, out_of_bounds };

inline const char* to_string(VerdictKind v)
{
    switch (v) {
    case VerdictKind::ideal: return "ideal";
    case VerdictKind::acceptable: return "acceptable";
    case VerdictKind::poor: return "poor";
    case VerdictKind::out_of_bounds: return "out_of_bounds";
    }
    return "?";
}

/// Band widths for the verdict; these are a toolkit policy, not part of the
/// bounds themselves.
struct VerdictPolicy {
    double band = 0.25;
};

struct Verdict {
    VerdictKind kind = VerdictKind::acceptable;
    std::string flag;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline VerdictKind verdict_kind_from_string(const std::string& s)
{
    for (auto k : {VerdictKind::ideal, VerdictKind::acceptable, VerdictKind::poor, VerdictKind::out_of_bounds})
        if (s == to_string(k))
            return k;
    throw ParseError("unknown verdict '" + s + "'");
}

/// out_of_bounds outside [LB, UB]; otherwise the position within the range,
/// measured from the anti-ideal end, picks ideal (top band), poor (bottom
/// band) or acceptable.
inline Verdict verdict(double value, const BoundsEntry& e, const VerdictPolicy& policy = {})
{
    if (!e.contains(value)) {
        if (e.id == "udb")
            return {VerdictKind::out_of_bounds, "nonzero UDB"};
        return {VerdictKind::out_of_bounds, "outside [" + std::to_string(e.lb) + ", " + std::to_string(e.ub) + "]"};
    }
    const double span = e.ub - e.lb;
    if (span <= 0)
        return {VerdictKind::ideal, {}};
    double goodness = 0;
    switch (e.ideal) {
    case Ideal::toward_ub: goodness = (value - e.lb) / span; break;
    case Ideal::toward_lb: goodness = (e.ub - value) / span; break;
    case Ideal::exact: {
        if (value == e.target)
            return {VerdictKind::ideal, {}};
        const double reach = std::max(e.target - e.lb, e.ub - e.target);
        goodness = 1.0 - std::fabs(value - e.target) / reach;
        // A missed exact target is never ideal.
        goodness = std::min(goodness, 1.0 - policy.band - 1e-12);
        break;
    }
    }
    if (goodness >= 1.0 - policy.band)
        return {VerdictKind::ideal, {}};
    if (goodness <= policy.band)
        return {VerdictKind::poor, {}};
    return {VerdictKind::acceptable, {}};
}

inline nlohmann::json to_json(const BoundsEntry& e)
{
    nlohmann::json j = {{"id", e.id},
                        {"label", e.label},
                        {"lb", e.lb},
                        {"ub", e.ub},
                        {"lb_exclusive", e.lb_exclusive},
                        {"ub_exclusive", e.ub_exclusive},
                        {"ideal", to_string(e.ideal)},
                        {"formula", e.formula}};
    if (e.ideal == Ideal::exact)
        j["target"] = e.target;
    if (!e.note.empty())
        j["note"] = e.note;
    if (e.attainable_max)
        j["attainable_max"] = *e.attainable_max;
    return j;
}

inline Ideal ideal_from_string(const std::string& s)
{
    for (auto i : {Ideal::toward_lb, Ideal::toward_ub, Ideal::exact})
        if (s == to_string(i))
            return i;
    throw ParseError("unknown ideal direction '" + s + "'");
}

inline BoundsEntry bounds_from_json(const nlohmann::json& j)
{
    BoundsEntry e;
    e.id = j.at("id").get<std::string>();
    e.label = j.at("label").get<std::string>();
    e.lb = j.at("lb").get<double>();
    e.ub = j.at("ub").get<double>();
    e.lb_exclusive = j.at("lb_exclusive").get<bool>();
    e.ub_exclusive = j.at("ub_exclusive").get<bool>();
    e.ideal = ideal_from_string(j.at("ideal").get<std::string>());
    e.formula = j.at("formula").get<std::string>();
    e.target = j.value("target", 0.0);
    e.note = j.value("note", std::string{});
    if (j.contains("attainable_max"))
        e.attainable_max = j.at("attainable_max").get<double>();
    return e;
}

/// Whole catalogue for an n -> m box; DPA-SNR is listed with both ranges.
inline nlohmann::json bounds_catalogue(unsigned n, unsigned m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& id : bound_ids()) {
        auto j = to_json(bounds_for(id, n, m, true));
        if (id == "dpa_snr")
            j["unbalanced"] = to_json(bounds_for(id, n, m, false));
        rows.push_back(std::move(j));
    }
    return {{"n", n}, {"m", m}, {"bounds", rows}};
}

} // namespace sboxkit

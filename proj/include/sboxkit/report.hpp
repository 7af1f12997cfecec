#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "algebraic.hpp"
#include "avalanche.hpp"
#include "bits.hpp"
#include "bounds.hpp"
#include "combined.hpp"
#include "differential.hpp"
#include "fraction.hpp"
#include "linear.hpp"
#include "sbox.hpp"
#include "sca.hpp"
#include "spectral.hpp"
#include "table5.hpp"

namespace sboxkit {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Category { generic, linear, differential, boomerang, differential_linear, algebraic, side_channel };

inline const char* to_string(Category c)
{
    switch (c) {
    case Category::generic: return "Generic";
    case Category::linear: return "Linear";
    case Category::differential: return "Differential";
    case Category::boomerang: return "Boomerang";
    case Category::differential_linear: return "Differential-Linear";
    case Category::algebraic: return "Algebraic";
    case Category::side_channel: return "Side Channel";
    }
    return "?";
}

inline Category category_from_string(const std::string& s)
{
    for (auto c : {Category::generic, Category::linear, Category::differential, Category::boomerang,
                   Category::differential_linear, Category::algebraic, Category::side_channel})
        if (s == to_string(c))
            return c;
    throw ParseError("unknown category '" + s + "'");
}

struct NotApplicable {
    std::string reason;
    friend bool operator==(const NotApplicable&, const NotApplicable&) = default;
};

using MetricValue = std::variant<NotApplicable, bool, std::int64_t, Fraction, double>;

struct MetricInfo {
    std::string id;
    std::string label;
    Category category;
    bool bounded; ///< has a row in the bounds catalogue under the same id
};

/// Supported metrics, grouped by category in report order. LS is listed under
/// Linear only, although it is also relevant to differential-linear attacks.
inline const std::vector<MetricInfo>& metric_catalogue()
{
    static const std::vector<MetricInfo> c = {
        {"bijectivity", "Bijectivity", Category::generic, false},
        {"balancedness", "Balancedness", Category::generic, false},
        {"permutation", "Permutation", Category::generic, false},
        {"op", "OP", Category::generic, true},
        {"fp", "FP", Category::generic, true},
        {"ofp", "OFP", Category::generic, true},
        {"bic", "BIC", Category::generic, true},
        {"sac", "SAC", Category::generic, true},
        {"ai", "AI", Category::generic, true},
        {"ssi", "SSI", Category::generic, true},
        {"nl", "NL", Category::linear, true},
        {"lat", "LAT max", Category::linear, true},
        {"lap", "LAP (xi)", Category::linear, true},
        {"lbn", "BN_L", Category::linear, true},
        {"ls", "LS", Category::linear, true},
        {"ci", "CI", Category::linear, true},
        {"du", "DU", Category::differential, true},
        {"dbn", "BN_D", Category::differential, true},
        {"pc", "PC", Category::differential, true},
        {"udb", "UDB", Category::differential, true},
        {"bu", "BU", Category::boomerang, true},
        {"dlu", "DLU", Category::differential_linear, true},
        {"ad", "AD", Category::algebraic, true},
        {"ip", "IP degree", Category::algebraic, false},
        {"dpa_snr", "DPA-SNR", Category::side_channel, true},
        {"to", "TO", Category::side_channel, true},
    };
    return c;
}

inline const MetricInfo& metric_info(const std::string& id)
{
    for (const auto& m : metric_catalogue())
        if (m.id == id)
            return m;
    throw PreconditionError("unknown property '" + id + "'");
}

/// Accepts ids, labels and the aliases understood by the bounds catalogue.
inline std::string resolve_metric_id(const std::string& name)
{
    const std::string id = canonical_metric_id(name).value_or(name);
    for (const auto& m : metric_catalogue())
        if (m.id == id)
            return id;
    throw PreconditionError("unknown property '" + name + "'");
}

struct MetricRecord {
    std::string id;
    std::string label;
    Category category = Category::generic;
    MetricValue value;
    nlohmann::json detail; ///< null when there is nothing beyond the value
    std::optional<BoundsEntry> bounds;
    std::optional<double> bounded_value; ///< the quantity compared with the bounds
    std::optional<Verdict> verdict;
    std::optional<table5::Delta> fixture_delta;

    bool applicable() const { return !std::holds_alternative<NotApplicable>(value); }

    friend bool operator==(const MetricRecord&, const MetricRecord&) = default;
};

struct SBoxMeta {
    std::string name;
    std::string source;
    unsigned n = 0;
    unsigned m = 0;
    std::vector<std::uint32_t> table;

    friend bool operator==(const SBoxMeta&, const SBoxMeta&) = default;
};

struct Conventions {
    std::string walsh_orientation = "rows=output mask, cols=input mask";
    std::string op = "longest_cycle";
    std::string ssi = "component_max";
    std::string dlu = "max|DLCT|/2 over 2^(n-1)";
    std::string udb = "forward";
    std::optional<std::uint32_t> field_modulus; ///< unset when IP was not applicable
    double verdict_band = 0.25;

    friend bool operator==(const Conventions&, const Conventions&) = default;
};

struct PropertyReport {
    int schema_version = kSchemaVersion;
    std::string toolkit_version = kToolkitVersion;
    SBoxMeta sbox;
    Conventions conventions;
    std::optional<std::string> timestamp;
    std::optional<std::string> fixture_column; ///< set when a reference comparison was requested
    std::vector<MetricRecord> metrics;

    const MetricRecord* find(const std::string& id) const
    {
        for (const auto& r : metrics)
            if (r.id == id)
                return &r;
        return nullptr;
    }

    const MetricRecord& at(const std::string& id) const
    {
        if (const auto* r = find(id))
            return *r;
        throw PreconditionError("report has no metric '" + id + "'");
    }

    std::vector<table5::Delta> fixture_deltas() const
    {
        std::vector<table5::Delta> out;
        for (const auto& r : metrics)
            if (r.fixture_delta)
                out.push_back(*r.fixture_delta);
        return out;
    }

    friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

struct AnalysisOptions {
    std::vector<std::string> selection; ///< empty means every metric
    SsiConvention ssi = SsiConvention::component_max;
    std::optional<std::uint32_t> field_modulus;
    VerdictPolicy policy;
    bool udb_include_inverse = false;
    std::optional<std::size_t> fixture_column; ///< index into table5::columns()
    bool timestamp = true;
};

/// Numeric view of a value; nullopt for N/A.
inline std::optional<double> numeric(const MetricValue& v)
{
    struct Visitor {
        std::optional<double> operator()(const NotApplicable&) const { return std::nullopt; }
        std::optional<double> operator()(bool b) const { return b ? 1.0 : 0.0; }
        std::optional<double> operator()(std::int64_t i) const { return static_cast<double>(i); }
        std::optional<double> operator()(const Fraction& f) const { return f.value(); }
        std::optional<double> operator()(double d) const { return d; }
    };
    return std::visit(Visitor{}, v);
}

inline std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace detail {

/// Tables shared by several metrics, computed on first use.
class AnalysisCache {
  public:
    explicit AnalysisCache(const SBox& s) : s_(s) {}

    const SBox& sbox() const { return s_; }
    const SpectrumTable& walsh() { return get(walsh_, [&] { return walsh_spectrum(s_); }); }
    const SpectrumTable& act() { return get(act_, [&] { return autocorrelation_from_walsh(walsh()); }); }
    const SpectrumTable& ddt() { return get(ddt_, [&] { return sboxkit::ddt(s_); }); }
    bool bijective() { return get(bijective_, [&] { return is_bijective(s_); }); }

  private:
    template <class T, class F>
    const T& get(std::optional<T>& slot, F&& make)
    {
        if (!slot)
            slot = make();
        return *slot;
    }

    const SBox& s_;
    std::optional<SpectrumTable> walsh_, act_, ddt_;
    std::optional<bool> bijective_;
};

struct Computed {
    MetricValue value;
    nlohmann::json detail;
    std::optional<double> bounded_value; ///< defaults to numeric(value)
};

inline void require_permutation(const SBox& s, const char* what)
{
    require_square(s, what);
    require_bijective(s, what);
}

inline FieldSpec field_for(const SBox& s, const AnalysisOptions& o)
{
    return o.field_modulus ? FieldSpec(s.n(), *o.field_modulus) : FieldSpec::standard(s.n());
}

inline Computed compute_metric(const std::string& id, AnalysisCache& c, const AnalysisOptions& o)
{
    using nlohmann::json;
    const SBox& s = c.sbox();
    auto integer = [](auto v) { return MetricValue{static_cast<std::int64_t>(v)}; };

    if (id == "bijectivity")
        return {c.bijective(), nullptr, {}};
    if (id == "balancedness")
        return {is_balanced(s), nullptr, {}};
    if (id == "permutation")
        return {s.n() == s.m() && c.bijective(), nullptr, {}};
    if (id == "op") {
        require_permutation(s, "order of permutation");
        json d = {{"cycle_lengths", cycle_lengths(s)}};
        try {
            d["lcm"] = permutation_order(s);
        } catch (const PreconditionError& e) {
            d["lcm"] = e.what();
        }
        return {integer(longest_cycle(s)), d, {}};
    }
    if (id == "fp" || id == "ofp") {
        require_permutation(s, id == "fp" ? "fixed points" : "opposite fixed points");
        const auto pts = id == "fp" ? fixed_points(s) : opposite_fixed_points(s);
        return {integer(pts.size()), json{{"points", pts}}, {}};
    }
    if (id == "bic")
        return {bic_scalar(s), nullptr, {}};
    if (id == "sac") {
        const auto a = sac_matrix(s);
        return {sac_scalar(a), json{{"satisfied", satisfies_sac(a)}, {"counts", a.counts}, {"denominator", a.denominator}},
                {}};
    }
    if (id == "ai")
        return {integer(absolute_indicator(c.act())), nullptr, {}};
    if (id == "ssi") {
        json d = json::object();
        for (auto conv : {SsiConvention::all, SsiConvention::nonzero, SsiConvention::component_max})
            d[to_string(conv)] = sum_of_squares_indicator(c.act(), conv);
        d["convention"] = to_string(o.ssi);
        return {integer(sum_of_squares_indicator(c.act(), o.ssi)), d, {}};
    }
    if (id == "nl")
        return {integer(nonlinearity(c.walsh())), json{{"walsh_max_abs", c.walsh().max_abs(1, 0)}}, {}};
    if (id == "lat")
        return {integer(lat_max(c.walsh())), nullptr, {}};
    if (id == "lap")
        return {linear_approximation_probability(c.walsh()), nullptr, {}};
    if (id == "lbn") {
        require_square(s, "linear branch number");
        const auto b = linear_branch_number(c.walsh());
        if (!b)
            throw PreconditionError("no correlated pair of nonzero masks");
        return {integer(*b), nullptr, {}};
    }
    if (id == "ls") {
        const auto w = linear_structures(c.act());
        json list = json::array();
        for (const auto& x : w)
            list.push_back({x.mask, x.shift, x.constant});
        return {integer(w.size()), json{{"witnesses", list}, {"witness_layout", "[mask, shift, constant]"}}, {}};
    }
    if (id == "ci")
        return {integer(correlation_immunity_order(c.walsh())), nullptr, {}};
    if (id == "du")
        return {integer(differential_uniformity(c.ddt())), nullptr, {}};
    if (id == "dbn") {
        require_square(s, "differential branch number");
        return {integer(differential_branch_number(c.ddt())), nullptr, {}};
    }
    if (id == "pc")
        return {integer(propagation_criteria_order(c.act())), nullptr, {}};
    if (id == "udb") {
        if (o.udb_include_inverse)
            require_bijective(s, "inverse-direction undisturbed bits");
        const auto w = undisturbed_bits(c.ddt(), o.udb_include_inverse);
        json list = json::array();
        for (const auto& x : w)
            list.push_back(json{x.input_diff, x.bit, x.value, x.inverse});
        return {integer(w.size()),
                json{{"direction", o.udb_include_inverse ? "forward+inverse" : "forward"},
                     {"witnesses", list},
                     {"witness_layout", "[input_diff, bit, value, inverse]"}},
                {}};
    }
    if (id == "bu") {
        require_boomerang_input(s);
        return {integer(boomerang_uniformity(bct(s))), nullptr, {}};
    }
    if (id == "dlu") {
        const auto u = differential_linear_uniformity(dlct_from_act(c.act()));
        return {u.normalized, json{{"max_abs", u.max_abs}, {"uniformity", u.uniformity}},
                static_cast<double>(u.uniformity)};
    }
    if (id == "ad") {
        const auto p = degree_profile(s);
        json d = {{"max_coordinate", p.max_coordinate}, {"min_coordinate", p.min_coordinate}};
        if (p.min_component)
            d["min_component"] = *p.min_component;
        return {integer(p.max_coordinate), d, {}};
    }
    if (id == "ip") {
        require_square(s, "interpolation polynomial");
        const FieldSpec f = field_for(s, o);
        const auto p = interpolation_polynomial(s, f);
        return {integer(p.degree()),
                json{{"terms", p.term_count()},
                     {"modulus", to_hex(f.modulus())},
                     {"coefficients", p.coefficients},
                     {"polynomial", to_string(p)}},
                {}};
    }
    if (id == "dpa_snr")
        return {dpa_snr(c.walsh()), nullptr, {}};
    if (id == "to")
        return {transparency_order(c.act()), nullptr, {}};
    throw PreconditionError("unknown property '" + id + "'");
}

} // namespace detail

/// Computes every catalogue metric. Metrics outside `options.selection` and
/// metrics whose preconditions fail are recorded as not applicable.
inline PropertyReport analyze(const SBox& s, const AnalysisOptions& options = {})
{
    std::vector<std::string> wanted;
    for (const auto& name : options.selection)
        wanted.push_back(resolve_metric_id(name));
    auto selected = [&](const std::string& id) {
        return wanted.empty() || std::find(wanted.begin(), wanted.end(), id) != wanted.end();
    };

    PropertyReport r;
    r.sbox = SBoxMeta{s.name(), s.source(), s.n(), s.m(), {s.table().begin(), s.table().end()}};
    r.conventions.ssi = to_string(options.ssi);
    r.conventions.udb = options.udb_include_inverse ? "forward+inverse" : "forward";
    r.conventions.verdict_band = options.policy.band;
    if (s.n() == s.m()) {
        try {
            r.conventions.field_modulus = detail::field_for(s, options).modulus();
        } catch (const PreconditionError&) {
        }
    }
    if (options.timestamp)
        r.timestamp = utc_timestamp();
    if (options.fixture_column)
        r.fixture_column = table5::columns().at(*options.fixture_column).label;

    detail::AnalysisCache cache(s);
    const bool balanced = is_balanced(s);
    for (const auto& info : metric_catalogue()) {
        MetricRecord rec{info.id, info.label, info.category, NotApplicable{"not selected"}, nullptr, {}, {}, {}, {}};
        if (selected(info.id)) {
            try {
                auto c = detail::compute_metric(info.id, cache, options);
                rec.value = std::move(c.value);
                rec.detail = std::move(c.detail);
                if (info.bounded) {
                    rec.bounds = bounds_for(info.id, s.n(), s.m(), balanced);
                    rec.bounded_value = c.bounded_value ? c.bounded_value : numeric(rec.value);
                    if (rec.bounded_value && std::isfinite(*rec.bounded_value))
                        rec.verdict = verdict(*rec.bounded_value, *rec.bounds, options.policy);
                }
            } catch (const PreconditionError& e) {
                rec.value = NotApplicable{e.what()};
            } catch (const std::exception& e) {
                rec.value = NotApplicable{std::string("error: ") + e.what()};
            }
        }
        if (options.fixture_column && rec.applicable())
            if (auto v = numeric(rec.value))
                rec.fixture_delta = table5::check(info.id, *options.fixture_column, *v);
        r.metrics.push_back(std::move(rec));
    }
    return r;
}

// --- formatting -------------------------------------------------------------

inline std::string format_real(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    std::ostringstream o;
    o << std::fixed << std::setprecision(6) << v;
    return o.str();
}

/// `compact` drops the decimal expansion of fractions and the N/A reason.
inline std::string format_value(const MetricValue& v, bool compact = false)
{
    struct Visitor {
        bool compact;
        std::string operator()(const NotApplicable& na) const { return compact ? "N/A" : "N/A (" + na.reason + ")"; }
        std::string operator()(bool b) const { return b ? "yes" : "no"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(const Fraction& f) const
        {
            return compact ? f.str() : f.str() + " = " + format_real(f.value());
        }
        std::string operator()(double d) const { return format_real(d); }
    };
    return std::visit(Visitor{compact}, v);
}

inline std::string format_bound(double v)
{
    if (v == std::floor(v) && std::fabs(v) < 1e15)
        return std::to_string(static_cast<std::int64_t>(v));
    return format_real(v);
}

inline std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

// --- JSON -------------------------------------------------------------------

inline nlohmann::json to_json(const MetricValue& v)
{
    using nlohmann::json;
    struct Visitor {
        json operator()(const NotApplicable& na) const { return {{"type", "not_applicable"}, {"reason", na.reason}}; }
        json operator()(bool b) const { return {{"type", "bool"}, {"value", b}}; }
        json operator()(std::int64_t i) const { return {{"type", "integer"}, {"value", i}}; }
        json operator()(const Fraction& f) const
        {
            return {{"type", "fraction"}, {"num", f.num}, {"den", f.den}, {"value", f.value()}};
        }
        json operator()(double d) const
        {
            if (std::isfinite(d))
                return {{"type", "real"}, {"value", d}};
            return {{"type", "real"}, {"value", format_real(d)}};
        }
    };
    return std::visit(Visitor{}, v);
}

inline MetricValue metric_value_from_json(const nlohmann::json& j)
{
    const auto type = j.at("type").get<std::string>();
    if (type == "not_applicable")
        return NotApplicable{j.at("reason").get<std::string>()};
    if (type == "bool")
        return j.at("value").get<bool>();
    if (type == "integer")
        return j.at("value").get<std::int64_t>();
    if (type == "fraction")
        return Fraction{j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()};
    if (type == "real") {
        const auto& v = j.at("value");
        if (v.is_string()) {
            const auto s = v.get<std::string>();
            if (s == "inf")
                return std::numeric_limits<double>::infinity();
            if (s == "-inf")
                return -std::numeric_limits<double>::infinity();
            return std::numeric_limits<double>::quiet_NaN();
        }
        return v.get<double>();
    }
    throw ParseError("unknown value type '" + type + "'");
}

inline nlohmann::json to_json(const table5::Delta& d)
{
    return {{"metric", d.metric},         {"column", d.column}, {"fixture", d.fixture},
            {"computed", d.computed},     {"classification", d.classification}, {"note", d.note}};
}

inline table5::Delta delta_from_json(const nlohmann::json& j)
{
    return {j.at("metric").get<std::string>(),  j.at("column").get<std::string>(),
            j.at("fixture").get<double>(),      j.at("computed").get<double>(),
            j.at("classification").get<std::string>(), j.at("note").get<std::string>()};
}

inline nlohmann::json to_json(const MetricRecord& r)
{
    nlohmann::json j = {{"id", r.id}, {"label", r.label}, {"category", to_string(r.category)}, {"value", to_json(r.value)}};
    if (!r.detail.is_null())
        j["detail"] = r.detail;
    if (r.bounds)
        j["bounds"] = to_json(*r.bounds);
    if (r.bounded_value)
        j["bounded_value"] = *r.bounded_value;
    if (r.verdict)
        j["verdict"] = {{"kind", to_string(r.verdict->kind)}, {"flag", r.verdict->flag}};
    if (r.fixture_delta)
        j["fixture_delta"] = to_json(*r.fixture_delta);
    return j;
}

inline MetricRecord metric_record_from_json(const nlohmann::json& j)
{
    MetricRecord r;
    r.id = j.at("id").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.category = category_from_string(j.at("category").get<std::string>());
    r.value = metric_value_from_json(j.at("value"));
    if (j.contains("detail"))
        r.detail = j.at("detail");
    if (j.contains("bounds"))
        r.bounds = bounds_from_json(j.at("bounds"));
    if (j.contains("bounded_value"))
        r.bounded_value = j.at("bounded_value").get<double>();
    if (j.contains("verdict"))
        r.verdict = Verdict{verdict_kind_from_string(j.at("verdict").at("kind").get<std::string>()),
                            j.at("verdict").at("flag").get<std::string>()};
    if (j.contains("fixture_delta"))
        r.fixture_delta = delta_from_json(j.at("fixture_delta"));
    return r;
}

inline nlohmann::json to_json(const PropertyReport& r)
{
    using nlohmann::json;
    json conv = {{"walsh_orientation", r.conventions.walsh_orientation},
                 {"op", r.conventions.op},
                 {"ssi", r.conventions.ssi},
                 {"dlu", r.conventions.dlu},
                 {"udb", r.conventions.udb},
                 {"verdict_band", r.conventions.verdict_band}};
    conv["field_modulus"] = r.conventions.field_modulus ? json(to_hex(*r.conventions.field_modulus)) : json(nullptr);
    json metrics = json::array();
    for (const auto& m : r.metrics)
        metrics.push_back(to_json(m));
    json j = {{"schema_version", r.schema_version},
              {"toolkit_version", r.toolkit_version},
              {"sbox",
               {{"name", r.sbox.name}, {"source", r.sbox.source}, {"n", r.sbox.n}, {"m", r.sbox.m}, {"table", r.sbox.table}}},
              {"conventions", conv},
              {"metrics", metrics}};
    if (r.timestamp)
        j["timestamp"] = *r.timestamp;
    if (r.fixture_column)
        j["fixture_column"] = *r.fixture_column;
    return j;
}

inline PropertyReport report_from_json(const nlohmann::json& j)
{
    try {
        PropertyReport r;
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != kSchemaVersion)
            throw ParseError("unsupported schema_version " + std::to_string(r.schema_version));
        r.toolkit_version = j.at("toolkit_version").get<std::string>();
        const auto& sb = j.at("sbox");
        r.sbox = {sb.at("name").get<std::string>(), sb.at("source").get<std::string>(), sb.at("n").get<unsigned>(),
                  sb.at("m").get<unsigned>(), sb.at("table").get<std::vector<std::uint32_t>>()};
        const auto& c = j.at("conventions");
        r.conventions.walsh_orientation = c.at("walsh_orientation").get<std::string>();
        r.conventions.op = c.at("op").get<std::string>();
        r.conventions.ssi = c.at("ssi").get<std::string>();
        r.conventions.dlu = c.at("dlu").get<std::string>();
        r.conventions.udb = c.at("udb").get<std::string>();
        r.conventions.verdict_band = c.at("verdict_band").get<double>();
        if (!c.at("field_modulus").is_null())
            r.conventions.field_modulus =
                static_cast<std::uint32_t>(std::stoul(c.at("field_modulus").get<std::string>(), nullptr, 16));
        if (j.contains("timestamp"))
            r.timestamp = j.at("timestamp").get<std::string>();
        if (j.contains("fixture_column"))
            r.fixture_column = j.at("fixture_column").get<std::string>();
        for (const auto& m : j.at("metrics"))
            r.metrics.push_back(metric_record_from_json(m));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

// --- rendering --------------------------------------------------------------

enum class Format { text, json, csv };

inline Format format_from_string(const std::string& s)
{
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw PreconditionError("unknown format '" + s + "'");
}

inline void render_text(std::ostream& out, const PropertyReport& r)
{
    out << "S-box " << (r.sbox.name.empty() ? std::string("(unnamed)") : r.sbox.name);
    if (!r.sbox.source.empty())
        out << " [" << r.sbox.source << "]";
    out << "  n=" << r.sbox.n << " m=" << r.sbox.m << "\n";
    out << "toolkit " << r.toolkit_version << ", schema " << r.schema_version << "\n";
    out << "conventions: walsh " << r.conventions.walsh_orientation << "; op " << r.conventions.op << "; ssi "
        << r.conventions.ssi << "; udb " << r.conventions.udb << "; field modulus "
        << (r.conventions.field_modulus ? to_hex(*r.conventions.field_modulus) : std::string("n/a"))
        << "; verdict band " << r.conventions.verdict_band << "\n";
    if (r.timestamp)
        out << "generated " << *r.timestamp << "\n";
    if (r.fixture_column)
        out << "reference column: " << *r.fixture_column << "\n";
    std::optional<Category> current;
    for (const auto& m : r.metrics) {
        if (!current || *current != m.category) {
            current = m.category;
            out << "\n" << to_string(m.category) << "\n";
        }
        std::ostringstream line;
        line << "  " << std::left << std::setw(14) << m.label << std::setw(22) << format_value(m.value);
        if (m.bounds) {
            line << std::setw(24)
                 << ((m.bounds->lb_exclusive ? "(" : "[") + format_bound(m.bounds->lb) + ", " +
                     format_bound(m.bounds->ub) + (m.bounds->ub_exclusive ? ")" : "]"));
        }
        if (m.verdict) {
            line << to_string(m.verdict->kind);
            if (!m.verdict->flag.empty())
                line << " (" << m.verdict->flag << ")";
        }
        std::string s = line.str();
        while (!s.empty() && s.back() == ' ')
            s.pop_back();
        out << s << "\n";
        if (m.fixture_delta) {
            const auto& d = *m.fixture_delta;
            out << "    fixture delta: reference " << format_real(d.fixture) << ", computed " << format_real(d.computed)
                << " [" << d.classification << (d.note.empty() ? "" : "; " + d.note) << "]\n";
        }
    }
}

inline void render_csv(std::ostream& out, const PropertyReport& r)
{
    out << "metric,value,lb,ub,verdict,category\n";
    for (const auto& m : r.metrics) {
        out << csv_escape(m.id) << ',' << csv_escape(format_value(m.value, true)) << ','
            << (m.bounds ? format_bound(m.bounds->lb) : "") << ',' << (m.bounds ? format_bound(m.bounds->ub) : "")
            << ',' << (m.verdict ? to_string(m.verdict->kind) : "") << ',' << csv_escape(to_string(m.category))
            << '\n';
    }
}

inline void render(std::ostream& out, const PropertyReport& r, Format f)
{
    switch (f) {
    case Format::text: render_text(out, r); break;
    case Format::json: out << to_json(r).dump(2) << '\n'; break;
    case Format::csv: render_csv(out, r); break;
    }
}

inline std::string render(const PropertyReport& r, const std::string& format)
{
    std::ostringstream out;
    render(out, r, format_from_string(format));
    return out.str();
}

// --- comparison -------------------------------------------------------------

struct ComparisonRow {
    std::string id;
    std::string label;
    std::vector<std::string> cells;
    bool uniform = true; ///< every column holds the same value
};

struct Comparison {
    std::vector<std::string> columns;
    std::vector<ComparisonRow> rows;
};

/// Metrics as rows in the order of the published comparison table (24 rows),
/// reports as columns.
inline Comparison compare(const std::vector<PropertyReport>& reports)
{
    if (reports.size() < 2)
        throw PreconditionError("compare needs at least two reports");
    Comparison c;
    for (const auto& r : reports)
        c.columns.push_back(r.sbox.name.empty() ? r.sbox.source : r.sbox.name);
    for (const auto& fixture_row : table5::rows()) {
        const auto& info = metric_info(fixture_row.metric);
        ComparisonRow row{info.id, info.label, {}, true};
        for (const auto& r : reports) {
            const auto* m = r.find(info.id);
            row.cells.push_back(m ? format_value(m->value, true) : "N/A");
            if (m && row.cells.size() > 1)
                row.uniform = row.uniform && m->value == reports.front().at(info.id).value;
        }
        c.rows.push_back(std::move(row));
    }
    return c;
}

inline void render(std::ostream& out, const Comparison& c, Format f)
{
    switch (f) {
    case Format::csv:
        out << "metric";
        for (const auto& col : c.columns)
            out << ',' << csv_escape(col);
        out << '\n';
        for (const auto& row : c.rows) {
            out << csv_escape(row.id);
            for (const auto& cell : row.cells)
                out << ',' << csv_escape(cell);
            out << '\n';
        }
        break;
    case Format::json: {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : c.rows)
            rows.push_back({{"id", row.id}, {"label", row.label}, {"cells", row.cells}, {"uniform", row.uniform}});
        out << nlohmann::json{{"schema_version", kSchemaVersion}, {"columns", c.columns}, {"rows", rows}}.dump(2)
            << '\n';
        break;
    }
    case Format::text:
        out << std::left << std::setw(14) << "metric";
        for (const auto& col : c.columns)
            out << std::setw(16) << col;
        out << '\n';
        for (const auto& row : c.rows) {
            std::ostringstream line;
            line << std::left << std::setw(14) << row.label;
            for (const auto& cell : row.cells)
                line << std::setw(16) << cell;
            std::string s = line.str();
            while (!s.empty() && s.back() == ' ')
                s.pop_back();
            out << s << '\n';
        }
        break;
    }
}

} // namespace sboxkit

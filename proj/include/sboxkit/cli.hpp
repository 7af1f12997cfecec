#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sboxkit.hpp"

namespace sboxkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAnalysis = 2;

/// Raised for problems with the invocation itself (exit code 1).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct LoadedInput {
    SBox box;
    std::optional<std::size_t> fixture_column;
};

struct Options {
    std::vector<std::string> builtins;
    std::vector<std::string> inputs;
    std::optional<unsigned> width;
    std::string props = "all";
    std::string format = "text";
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::string transform_path;
    std::string ssi = "component_max";
    std::string field_modulus;
    bool no_timestamp = false;
    bool table5_compare = false;
    bool invariance = false;
    bool udb_inverse = false;
    unsigned bounds_n = 0;
};

inline std::string read_text(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::string stem(const std::string& path)
{
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

inline std::vector<LoadedInput> load_inputs(const Options& o)
{
    std::vector<LoadedInput> out;
    for (const auto& id : o.builtins) {
        SBox s = builtin(id);
        if (id != s.name())
            s = s.renamed(id);
        out.push_back({std::move(s), table5::column_for(id)});
    }
    for (const auto& path : o.inputs)
        out.push_back({parse_sbox(read_text(path), InputFormat::automatic, o.width, stem(path), path), std::nullopt});
    return out;
}

inline AnalysisOptions analysis_options(const Options& o)
{
    AnalysisOptions a;
    if (o.props != "all") {
        std::stringstream ss(o.props);
        for (std::string item; std::getline(ss, item, ',');)
            if (!item.empty()) {
                try {
                    a.selection.push_back(resolve_metric_id(item));
                } catch (const PreconditionError& e) {
                    throw UsageError(e.what());
                }
            }
    }
    const auto conv = ssi_convention_from_string(o.ssi);
    if (!conv)
        throw UsageError("--ssi-convention must be all, nonzero or component_max");
    a.ssi = *conv;
    if (!o.field_modulus.empty()) {
        try {
            std::size_t used = 0;
            a.field_modulus = static_cast<std::uint32_t>(std::stoul(o.field_modulus, &used, 16));
            if (used != o.field_modulus.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::logic_error&) {
            throw UsageError("--field-modulus expects a hex integer, got '" + o.field_modulus + "'");
        }
    }
    a.timestamp = !o.no_timestamp;
    a.udb_include_inverse = o.udb_inverse;
    return a;
}

inline Format output_format(const Options& o)
{
    try {
        return format_from_string(o.format);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
}

/// Writes to --out when given, otherwise to `out`.
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw UsageError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

  private:
    std::ofstream file_;
    std::ostream& fallback_;
};

inline void render_deltas(std::ostream& out, const std::string& column_name, const PropertyReport& r)
{
    for (const auto& d : r.fixture_deltas())
        out << "fixture delta," << column_name << ',' << d.metric << ",reference=" << format_real(d.fixture)
            << ",computed=" << format_real(d.computed) << ',' << d.classification
            << (d.note.empty() ? "" : "," + csv_escape(d.note)) << '\n';
}

inline int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.builtins.size() + o.inputs.size() != 1)
        throw UsageError("analyze takes exactly one --builtin or --input");
    const Format f = output_format(o);
    auto a = analysis_options(o);
    auto inputs = load_inputs(o);
    if (o.table5_compare) {
        a.fixture_column = inputs.front().fixture_column;
        if (!a.fixture_column)
            err << "note: no reference column for this input; comparison skipped\n";
    }
    const auto report = analyze(inputs.front().box, a);
    Sink sink(o.out_path, out);
    render(sink.stream(), report, f);
    return kExitOk;
}

inline int cmd_compare(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.builtins.size() + o.inputs.size() < 2)
        throw UsageError("compare needs at least two inputs");
    const Format f = output_format(o);
    const auto base = analysis_options(o);
    std::vector<PropertyReport> reports;
    std::vector<std::string> names;
    for (auto& in : load_inputs(o)) {
        auto a = base;
        if (o.table5_compare)
            a.fixture_column = in.fixture_column;
        names.push_back(in.box.name());
        reports.push_back(analyze(in.box, a));
        if (o.table5_compare && !in.fixture_column)
            err << "note: no reference column for '" << in.box.name() << "'; comparison skipped\n";
    }
    Sink sink(o.out_path, out);
    render(sink.stream(), compare(reports), f);
    if (o.table5_compare) {
        // Deltas go to the error stream for csv/json so the table stays machine-readable.
        std::ostream& log = f == Format::text ? sink.stream() : err;
        if (f == Format::text)
            log << '\n';
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (reports[i].fixture_column)
                render_deltas(log, names[i] + " (" + *reports[i].fixture_column + ")", reports[i]);
        }
    }
    return kExitOk;
}

inline int cmd_transform(const Options& o, std::ostream& out, std::ostream&)
{
    if (o.builtins.size() + o.inputs.size() != 1)
        throw UsageError("transform takes exactly one --builtin or --input");
    if (o.seed.has_value() == !o.transform_path.empty())
        throw UsageError("transform needs exactly one of --seed or --transform");
    const Format f = output_format(o);
    const SBox s = load_inputs(o).front().box;
    AffineTransform t;
    if (o.seed) {
        t = random_affine(s.n(), s.m(), *o.seed);
    } else {
        try {
            t = affine_from_json(nlohmann::json::parse(read_text(o.transform_path)));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("transform file: ") + e.what());
        }
    }
    const SBox u = apply_affine(s, t);
    Sink sink(o.out_path, out);
    auto& os = sink.stream();
    if (f == Format::json) {
        nlohmann::json j = {{"transform", to_json(t)}, {"sbox", {{"n", u.n()}, {"m", u.m()}, {"table", u.table()}}}};
        if (o.invariance)
            j["invariance"] = to_json(invariance_report(s, t));
        os << j.dump(2) << '\n';
    } else {
        os << serialize(u);
        if (o.invariance) {
            std::ostringstream block;
            render_text(block, invariance_report(s, t));
            std::string line;
            for (std::istringstream in(block.str()); std::getline(in, line);)
                os << "# " << line << '\n';
        }
    }
    return kExitOk;
}

inline int cmd_bounds(const Options& o, std::ostream& out, std::ostream&)
{
    if (o.bounds_n < 1 || o.bounds_n > kMaxWidth)
        throw UsageError("bounds needs --n in 1..16");
    const unsigned m = o.width.value_or(o.bounds_n);
    const Format f = output_format(o);
    Sink sink(o.out_path, out);
    auto& os = sink.stream();
    const auto cat = bounds_catalogue(o.bounds_n, m);
    if (f == Format::json) {
        os << cat.dump(2) << '\n';
        return kExitOk;
    }
    if (f == Format::csv)
        os << "id,label,lb,ub,ideal,formula\n";
    for (const auto& row : cat.at("bounds")) {
        const auto e = bounds_from_json(row);
        if (f == Format::csv) {
            os << e.id << ',' << csv_escape(e.label) << ',' << format_bound(e.lb) << ',' << format_bound(e.ub) << ','
               << to_string(e.ideal) << ',' << csv_escape(e.formula) << '\n';
        } else {
            os << std::left << std::setw(9) << e.label << std::setw(24)
               << ((e.lb_exclusive ? "(" : "[") + format_bound(e.lb) + ", " + format_bound(e.ub) +
                   (e.ub_exclusive ? ")" : "]"))
               << std::setw(12) << to_string(e.ideal) << e.formula;
            if (!e.note.empty())
                os << "  (" << e.note << ")";
            os << '\n';
        }
    }
    return kExitOk;
}

inline int cmd_list(const Options& o, std::ostream& out, std::ostream&)
{
    const Format f = output_format(o);
    Sink sink(o.out_path, out);
    auto& os = sink.stream();
    if (f == Format::json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& e : builtin_entries())
            list.push_back({{"id", e.id},
                            {"aliases", e.aliases},
                            {"n", e.width},
                            {"m", e.width},
                            {"checksum", to_hex(e.checksum)},
                            {"citation", e.citation},
                            {"provenance", e.provenance}});
        os << list.dump(2) << '\n';
        return kExitOk;
    }
    if (f == Format::csv)
        os << "id,aliases,n,m,checksum,citation,provenance\n";
    for (const auto& e : builtin_entries()) {
        std::string aliases;
        for (const auto& a : e.aliases)
            aliases += (aliases.empty() ? "" : " ") + a;
        if (f == Format::csv)
            os << e.id << ',' << aliases << ',' << e.width << ',' << e.width << ',' << to_hex(e.checksum) << ','
               << csv_escape(e.citation) << ',' << csv_escape(e.provenance) << '\n';
        else
            os << std::left << std::setw(10) << e.id << std::setw(6) << (std::to_string(e.width) + "x" + std::to_string(e.width))
               << "aliases: " << std::setw(20) << aliases << e.provenance << "\n          " << e.citation << '\n';
    }
    return kExitOk;
}

/// Fast path against definitional oracle, per table.
inline int cmd_verify(const Options& o, std::ostream& out, std::ostream&)
{
    if (o.builtins.size() + o.inputs.size() != 1)
        throw UsageError("verify takes exactly one --builtin or --input");
    const SBox s = load_inputs(o).front().box;
    Sink sink(o.out_path, out);
    auto& os = sink.stream();
    bool all = true;
    auto report = [&](const char* name, auto&& check) {
        try {
            const bool ok = check();
            all = all && ok;
            os << (ok ? "PASS " : "FAIL ") << name << '\n';
        } catch (const PreconditionError& e) {
            os << "SKIP " << name << " (" << e.what() << ")\n";
        }
    };
    report("walsh", [&] { return walsh_spectrum(s) == walsh_spectrum_naive(s); });
    report("act", [&] { return autocorrelation_table(s) == autocorrelation_table_naive(s); });
    report("anf", [&] {
        for (std::uint32_t r = 1; r < pow2(s.m()); r <<= 1) {
            const auto f = component(s, r);
            const auto p = anf(f);
            if (!(p == anf_naive(f.truth)) || truth_table(p) != f.truth)
                return false;
        }
        return true;
    });
    report("ddt", [&] { return ddt(s) == ddt_from_walsh(walsh_spectrum(s)); });
    report("lat", [&] { return lat(s).centered == lat_from_walsh(walsh_spectrum(s)).centered; });
    report("bct", [&] { return bct(s) == bct_naive(s); });
    report("dlct", [&] { return dlct(s) == dlct_naive(s); });
    report("ip", [&] {
        require_square(s, "interpolation polynomial");
        const FieldSpec f = FieldSpec::standard(s.n());
        const auto p = interpolation_polynomial(s, f);
        if (!(p == interpolation_polynomial_lagrange(s, f)))
            return false;
        for (std::uint32_t x = 0; x < s.size(); ++x)
            if (p.evaluate(f, x) != s[x])
                return false;
        return true;
    });
    return all ? kExitOk : kExitAnalysis;
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"S-box cryptographic property analyzer", "sboxkit"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_inputs = [&](CLI::App* c) {
        c->add_option("--builtin", o.builtins, "builtin table id or cipher name (repeatable)");
        c->add_option("--input", o.inputs, "table file, '-' for stdin (repeatable)");
        c->add_option("--width", o.width, "output width m of --input tables")->check(CLI::Range(1u, kMaxWidth));
    };
    auto add_output = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        c->add_option("--out", o.out_path, "write output to this file");
    };
    auto add_analysis = [&](CLI::App* c) {
        c->add_option("--props", o.props, "comma separated metric ids, or all");
        c->add_option("--ssi-convention", o.ssi, "all, nonzero or component_max");
        c->add_option("--field-modulus", o.field_modulus, "irreducible modulus in hex for the interpolation polynomial");
        c->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp field");
        c->add_flag("--table5-compare", o.table5_compare, "compare builtins with the published reference values");
        c->add_flag("--udb-inverse", o.udb_inverse, "also count undisturbed bits of the inverse");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full property report for one table");
    add_inputs(analyze_cmd);
    add_output(analyze_cmd);
    add_analysis(analyze_cmd);

    auto* compare_cmd = app.add_subcommand("compare", "side-by-side table for two or more tables");
    add_inputs(compare_cmd);
    add_output(compare_cmd);
    add_analysis(compare_cmd);

    auto* transform_cmd = app.add_subcommand("transform", "apply an affine transform and write the new table");
    add_inputs(transform_cmd);
    add_output(transform_cmd);
    transform_cmd->add_option("--seed", o.seed, "seed for a random invertible transform");
    transform_cmd->add_option("--transform", o.transform_path, "JSON transform file {A, a, B, b}");
    transform_cmd->add_flag("--invariance", o.invariance, "append the invariance report");

    auto* bounds_cmd = app.add_subcommand("bounds", "theoretical bounds catalogue for n -> m boxes");
    bounds_cmd->add_option("--n", o.bounds_n, "input width n")->required();
    bounds_cmd->add_option("--width", o.width, "output width m (default n)")->check(CLI::Range(1u, kMaxWidth));
    add_output(bounds_cmd);

    auto* list_cmd = app.add_subcommand("list-builtins", "builtin tables with provenance");
    add_output(list_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "fast paths against definitional oracles");
    add_inputs(verify_cmd);
    verify_cmd->add_option("--out", o.out_path, "write output to this file");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (analyze_cmd->parsed())
            return cmd_analyze(o, out, err);
        if (compare_cmd->parsed())
            return cmd_compare(o, out, err);
        if (transform_cmd->parsed())
            return cmd_transform(o, out, err);
        if (bounds_cmd->parsed())
            return cmd_bounds(o, out, err);
        if (list_cmd->parsed())
            return cmd_list(o, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitAnalysis;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitAnalysis;
    }
    return kExitUsage;
}

} // namespace sboxkit::cli

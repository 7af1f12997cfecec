#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <sboxkit/cli.hpp>

namespace fs = std::filesystem;
using sboxkit::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content)
{
    const fs::path p = fs::temp_directory_path() / ("sboxkit_test_" + name);
    std::ofstream(p) << content;
    return p;
}

std::size_t count(const std::string& hay, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST(Cli, AnalyzeBuiltinJson)
{
    const auto r = call({"analyze", "--builtin", "ascon", "--format", "json", "--no-timestamp"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("sbox").at("n"), 5);
    EXPECT_FALSE(j.contains("timestamp"));
}

TEST(Cli, AnalyzeFileInput)
{
    const auto p = temp_file("present.txt", "# present\nC56B90AD3EF84712\n");
    const auto r = call({"analyze", "--input", p.string(), "--props", "nl,du", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\nnl,4,"), std::string::npos);
    EXPECT_NE(r.out.find("\ndu,4,"), std::string::npos);
}

TEST(Cli, DeterministicOutput)
{
    const std::vector<std::string> args = {"analyze", "--builtin", "gift", "--no-timestamp"};
    EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, OutFlagWritesFile)
{
    const fs::path p = fs::temp_directory_path() / "sboxkit_test_out.json";
    fs::remove(p);
    const auto r = call({"analyze", "--builtin", "present", "--format", "json", "--out", p.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(p);
    EXPECT_NO_THROW(nlohmann::json::parse(in));
}

TEST(Cli, CompareWithReferenceValues)
{
    const auto r = call({"compare", "--builtin", "romulus", "--builtin", "ascon", "--builtin", "elephant",
                         "--builtin", "gift-cofb", "--builtin", "photon-beetle", "--table5-compare", "--format", "csv",
                         "--no-timestamp"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count(r.out, "\n"), 25u);
    EXPECT_EQ(count(r.err, ",du,"), 2u);
    EXPECT_NE(r.err.find("gift-cofb (GIFT-COFB),du,reference=4.000000,computed=6.000000"), std::string::npos);
}

TEST(Cli, TransformWithInvariance)
{
    const auto r = call({"transform", "--builtin", "gift", "--seed", "11", "--invariance"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("# "), std::string::npos);
    const auto j = call({"transform", "--builtin", "gift", "--seed", "11", "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed.at("sbox").at("table").size(), 16u);
}

TEST(Cli, TransformFromFile)
{
    const auto t = sboxkit::random_affine(4, 4, 5);
    const auto p = temp_file("t.json", sboxkit::to_json(t).dump());
    const auto r = call({"transform", "--builtin", "present", "--transform", p.string(), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto expect = sboxkit::apply_affine(sboxkit::builtin("present"), t);
    const auto got = nlohmann::json::parse(r.out).at("sbox").at("table").get<std::vector<std::uint32_t>>();
    EXPECT_TRUE(std::equal(got.begin(), got.end(), expect.table().begin(), expect.table().end()));
}

TEST(Cli, BoundsAndList)
{
    const auto b = call({"bounds", "--n", "8"});
    ASSERT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("120"), std::string::npos);
    const auto l = call({"list-builtins", "--format", "json"});
    ASSERT_EQ(l.code, 0);
    EXPECT_EQ(nlohmann::json::parse(l.out).size(), 5u);
}

TEST(Cli, Verify)
{
    const auto r = call({"verify", "--builtin", "present"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count(r.out, "PASS"), 8u);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(call({}).code, 1);
    EXPECT_EQ(call({"frobnicate"}).code, 1);
    EXPECT_EQ(call({"analyze"}).code, 1);
    EXPECT_EQ(call({"analyze", "--builtin", "ascon", "--props", "bogus"}).code, 1);
    EXPECT_EQ(call({"analyze", "--builtin", "ascon", "--format", "xml"}).code, 1);
    EXPECT_EQ(call({"transform", "--builtin", "ascon"}).code, 1);
    EXPECT_EQ(call({"compare", "--builtin", "ascon"}).code, 1);
}

TEST(Cli, AnalysisErrors)
{
    const auto bad = temp_file("bad.txt", "0 1 2\n");
    EXPECT_EQ(call({"analyze", "--input", bad.string()}).code, 2);
    EXPECT_EQ(call({"analyze", "--builtin", "des"}).code, 2);
    const auto r = call({"analyze", "--builtin", "ascon", "--field-modulus", "15"});
    EXPECT_EQ(r.code, 0); // bad modulus only knocks out the IP row
}

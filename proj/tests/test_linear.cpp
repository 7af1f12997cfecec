#include <gtest/gtest.h>

#include <random>

#include <sboxkit/corpus.hpp>
#include <sboxkit/linear.hpp>

#include "oracles.hpp"

using namespace sboxkit;

TEST(Lat, OriginCountsEverything)
{
    std::mt19937_64 rng(20);
    const auto t = lat(oracle::random_function(4, 3, rng));
    EXPECT_EQ(t.raw(0, 0), 16);
}

TEST(Lat, IdentityCentered)
{
    const auto t = lat(identity_sbox(4));
    for (std::uint32_t a = 1; a < 16; ++a)
        for (std::uint32_t b = 1; b < 16; ++b)
            EXPECT_EQ(std::abs(t.centered(a, b)), a == b ? 8 : 0);
}

TEST(Lat, CountingEqualsWalshRouteAndOracle)
{
    std::mt19937_64 rng(21);
    const SBox s = oracle::random_permutation(5, rng);
    const auto counted = lat(s);
    EXPECT_TRUE(oracle::equal(counted.raw, oracle::lat_raw(s)));
    EXPECT_EQ(counted.centered, lat_from_walsh(walsh_spectrum(s)).centered);
    const auto w = walsh_spectrum(s);
    for (std::uint32_t a = 0; a < 32; ++a)
        for (std::uint32_t b = 0; b < 32; ++b)
            EXPECT_EQ(2 * counted.centered(a, b), w(b, a));
}

TEST(Lap, Values)
{
    EXPECT_EQ(linear_approximation_probability(identity_sbox(4)).value(), 0.5);
    EXPECT_EQ(linear_approximation_probability(SBox({0, 1, 2, 3}, 2)).value(), 0.5);
    for (const auto& e : builtin_entries())
        EXPECT_EQ(linear_approximation_probability(builtin(e.id)).value(), 0.25) << e.id;
    EXPECT_EQ(linear_approximation_probability(builtin("ascon")).str(), "8/32");
}

TEST(Nonlinearity, Values)
{
    EXPECT_EQ(nonlinearity(identity_sbox(4)), 0);
    EXPECT_EQ(nonlinearity(builtin("ascon")), 8);
    EXPECT_EQ(nonlinearity(builtin("present")), 4);
    EXPECT_EQ(nonlinearity(builtin("skinny8")), 64);
}

TEST(Nonlinearity, MatchesDistanceOracle)
{
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        const SBox s = oracle::random_function(4, 3, rng);
        EXPECT_EQ(nonlinearity(s), oracle::nonlinearity(s));
    }
}

TEST(LinearBranchNumber, Values)
{
    EXPECT_EQ(linear_branch_number(identity_sbox(4)), 2u);
    EXPECT_EQ(linear_branch_number(builtin("ascon")), 3u);
    EXPECT_EQ(linear_branch_number(builtin("romulus")), 2u);
    EXPECT_THROW(linear_branch_number(SBox({0, 1, 1, 0}, 1)), PreconditionError);
}

TEST(LinearStructures, IdentityHasAllPairs) { EXPECT_EQ(linear_structures(identity_sbox(4)).size(), 225u); }

TEST(LinearStructures, DetectionMatchesDefinition)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        const SBox s = oracle::random_function(3, 3, rng);
        EXPECT_EQ(linear_structures(s).size(), oracle::linear_structure_count(s));
    }
    for (const char* id : {"gift", "ascon"}) {
        const SBox s = builtin(id);
        EXPECT_EQ(linear_structures(s).size(), oracle::linear_structure_count(s)) << id;
    }
}

TEST(LinearStructures, ConstantRecorded)
{
    const auto w = linear_structures(identity_sbox(3));
    for (const auto& x : w)
        EXPECT_EQ(x.constant, static_cast<unsigned>(oracle::par(x.mask & x.shift)));
}

TEST(LinearStructures, BuiltinCounts)
{
    EXPECT_EQ(linear_structures(builtin("gift")).size(), 9u);
    EXPECT_EQ(linear_structures(builtin("ascon")).size(), 91u);
    EXPECT_EQ(linear_structures(builtin("skinny8")).size(), 601u);
}

TEST(CorrelationImmunity, Values)
{
    EXPECT_EQ(correlation_immunity_order(identity_sbox(4)), 0u);
    for (const auto& e : builtin_entries())
        EXPECT_EQ(correlation_immunity_order(builtin(e.id)), 0u) << e.id;
}

TEST(CorrelationImmunity, BijectionsStayBelowN)
{
    std::mt19937_64 rng(24);
    for (int i = 0; i < 200; ++i) {
        const SBox s = oracle::random_permutation(4, rng);
        EXPECT_LE(correlation_immunity_order(s), 3u);
    }
}

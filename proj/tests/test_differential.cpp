#include <gtest/gtest.h>

#include <random>

#include <sboxkit/corpus.hpp>
#include <sboxkit/differential.hpp>

#include "oracles.hpp"

using namespace sboxkit;

TEST(Ddt, TrivialRow)
{
    std::mt19937_64 rng(30);
    const auto t = ddt(oracle::random_function(4, 4, rng));
    EXPECT_EQ(t(0, 0), 16);
    for (std::size_t b = 1; b < 16; ++b)
        EXPECT_EQ(t(0, b), 0);
}

TEST(Ddt, IdentityDiagonal)
{
    const auto t = ddt(identity_sbox(4));
    for (std::size_t a = 0; a < 16; ++a)
        for (std::size_t b = 0; b < 16; ++b)
            EXPECT_EQ(t(a, b), a == b ? 16 : 0);
}

TEST(Ddt, RandomFiveBitRowsSumAndMatchOracle)
{
    std::mt19937_64 rng(31);
    const SBox s = oracle::random_function(5, 5, rng);
    const auto t = ddt(s);
    EXPECT_TRUE(oracle::equal(t, oracle::ddt(s)));
    for (std::size_t a = 0; a < 32; ++a) {
        long long sum = 0;
        for (std::size_t b = 0; b < 32; ++b)
            sum += t(a, b);
        EXPECT_EQ(sum, 32);
    }
}

TEST(Ddt, FourierIdentity)
{
    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        const SBox s = oracle::random_function(4, 3, rng);
        EXPECT_EQ(ddt(s), ddt_from_walsh(walsh_spectrum(s)));
    }
}

TEST(DifferentialUniformity, Values)
{
    EXPECT_EQ(differential_uniformity(identity_sbox(4)), 16);
    EXPECT_EQ(differential_uniformity(builtin("ascon")), 8);
    EXPECT_EQ(differential_uniformity(builtin("present")), 4);
    EXPECT_EQ(differential_uniformity(builtin("gift")), 6);
    EXPECT_EQ(differential_uniformity(builtin("skinny8")), 64);
}

TEST(DifferentialUniformity, InverseHasSameValue)
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 30; ++i) {
        const SBox s = oracle::random_permutation(4, rng);
        EXPECT_EQ(differential_uniformity(s), differential_uniformity(inverse(s)));
        EXPECT_EQ(ddt(inverse(s)), ddt(s).transposed());
    }
}

TEST(DifferentialBranchNumber, Values)
{
    EXPECT_EQ(differential_branch_number(identity_sbox(4)), 2u);
    EXPECT_EQ(differential_branch_number(builtin("ascon")), 3u);
    EXPECT_EQ(differential_branch_number(builtin("gift")), 2u);
    EXPECT_EQ(differential_branch_number(builtin("present")), 3u);
    EXPECT_EQ(differential_branch_number(builtin("spongent")), 3u);
}

TEST(DifferentialBranchNumber, PairwiseDefinition)
{
    std::mt19937_64 rng(34);
    for (int i = 0; i < 20; ++i) {
        const SBox s = oracle::random_permutation(4, rng);
        unsigned best = 99;
        for (std::uint32_t x = 0; x < 16; ++x)
            for (std::uint32_t y = 0; y < 16; ++y)
                if (x != y)
                    best = std::min(best, static_cast<unsigned>(std::popcount(x ^ y) + std::popcount(s[x] ^ s[y])));
        EXPECT_EQ(differential_branch_number(s), best);
        EXPECT_LE(best, 3u); // ceil(2n/3)
    }
}

TEST(PropagationCriteria, Values)
{
    EXPECT_EQ(propagation_criteria_order(identity_sbox(4)), 0u);
    for (const auto& e : builtin_entries())
        EXPECT_EQ(propagation_criteria_order(builtin(e.id)), 0u) << e.id;
}

TEST(UndisturbedBits, IdentityHasEveryBit) { EXPECT_EQ(undisturbed_bits(identity_sbox(4)).size(), 60u); }

TEST(UndisturbedBits, BuiltinCounts)
{
    EXPECT_EQ(undisturbed_bits(builtin("ascon")).size(), 35u);
    EXPECT_EQ(undisturbed_bits(builtin("gift")).size(), 6u);
    EXPECT_EQ(undisturbed_bits(builtin("present")).size(), 3u);
    EXPECT_EQ(undisturbed_bits(builtin("skinny8")).size(), 258u);
}

TEST(UndisturbedBits, MatchesOracle)
{
    std::mt19937_64 rng(35);
    for (int i = 0; i < 40; ++i) {
        const SBox s = oracle::random_permutation(4, rng);
        EXPECT_EQ(undisturbed_bits(s).size(), oracle::undisturbed_count(s));
    }
}

TEST(UndisturbedBits, WitnessValuesAreFixed)
{
    const SBox s = builtin("ascon");
    for (const auto& w : undisturbed_bits(s))
        for (std::uint32_t x = 0; x < 32; ++x)
            EXPECT_EQ(((s[x] ^ s[x ^ w.input_diff]) >> w.bit) & 1u, w.value);
}

TEST(UndisturbedBits, InverseDirectionIsOptIn)
{
    const SBox s = builtin("present");
    const auto both = undisturbed_bits(s, true);
    EXPECT_EQ(both.size(), undisturbed_bits(s).size() + undisturbed_bits(inverse(s)).size());
    EXPECT_THROW(undisturbed_bits(SBox({0, 0, 1, 2}, 2), true), PreconditionError);
}

#include <gtest/gtest.h>

#include <random>

#include <sboxkit/algebraic.hpp>
#include <sboxkit/corpus.hpp>

#include "oracles.hpp"

using namespace sboxkit;

TEST(Field, Irreducibility)
{
    EXPECT_TRUE(is_irreducible(0x13));
    EXPECT_TRUE(is_irreducible(0x25));
    EXPECT_TRUE(is_irreducible(0x11b));
    EXPECT_FALSE(is_irreducible(0x15)); // x^4+x^2+1 = (x^2+x+1)^2
    EXPECT_THROW(FieldSpec(4, 0x15), PreconditionError);
    EXPECT_THROW(FieldSpec(4, 0x25), PreconditionError);
}

TEST(Field, MultiplicationAgreesWithOracle)
{
    const FieldSpec f = FieldSpec::standard(8);
    std::mt19937_64 rng(50);
    for (int i = 0; i < 500; ++i) {
        const std::uint32_t a = rng() & 0xff, b = rng() & 0xff;
        EXPECT_EQ(f.mul(a, b), oracle::gf_mul(a, b, 0x11b, 8));
    }
    EXPECT_EQ(f.mul(0x57, 0x83), 0xc1u);
    for (std::uint32_t a = 1; a < 256; ++a)
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(Interpolation, Identity)
{
    const auto p = interpolation_polynomial(identity_sbox(4), FieldSpec::standard(4));
    EXPECT_EQ(p.degree(), 1u);
    EXPECT_EQ(p.term_count(), 1u);
    EXPECT_EQ(to_string(p), "0x1*x");
}

TEST(Interpolation, Constant)
{
    const auto p = interpolation_polynomial(SBox(std::vector<std::uint32_t>(16, 7), 4), FieldSpec::standard(4));
    EXPECT_EQ(p.degree(), 0u);
    EXPECT_EQ(p.term_count(), 1u);
    EXPECT_EQ(p.coefficients[0], 7u);
}

TEST(Interpolation, Inversion)
{
    const FieldSpec f = FieldSpec::standard(4);
    std::vector<std::uint32_t> t(16, 0);
    for (std::uint32_t x = 1; x < 16; ++x)
        t[x] = f.inv(x);
    const auto p = interpolation_polynomial(SBox(t, 4), f);
    EXPECT_EQ(p.degree(), 14u);
    EXPECT_EQ(p.term_count(), 1u);
    EXPECT_EQ(p.coefficients[14], 1u);
}

TEST(Interpolation, ClosedFormEqualsLagrange)
{
    std::mt19937_64 rng(51);
    for (unsigned n : {3u, 4u, 5u}) {
        const FieldSpec f = FieldSpec::standard(n);
        for (int i = 0; i < 10; ++i) {
            const SBox s = oracle::random_function(n, n, rng);
            EXPECT_EQ(interpolation_polynomial(s, f), interpolation_polynomial_lagrange(s, f));
        }
    }
}

TEST(Interpolation, EvaluatesBackToTable)
{
    for (const auto& e : builtin_entries()) {
        const SBox s = builtin(e.id);
        const FieldSpec f = FieldSpec::standard(s.n());
        const auto p = interpolation_polynomial(s, f);
        for (std::uint32_t x = 0; x < s.size(); ++x) {
            ASSERT_EQ(oracle::gf_eval(p.coefficients, x, f.modulus(), s.n()), s[x]) << e.id << " x=" << x;
            ASSERT_EQ(p.evaluate(f, x), s[x]);
        }
    }
}

TEST(Interpolation, BijectionsMissTopCoefficient)
{
    std::mt19937_64 rng(52);
    const FieldSpec f = FieldSpec::standard(4);
    for (int i = 0; i < 30; ++i) {
        const auto p = interpolation_polynomial(oracle::random_permutation(4, rng), f);
        EXPECT_LE(p.degree(), 14u);
    }
}

TEST(Interpolation, Preconditions)
{
    EXPECT_THROW(interpolation_polynomial(SBox({0, 1, 2, 3, 0, 1, 2, 3}, 2), FieldSpec::standard(3)),
                 PreconditionError);
    EXPECT_THROW(interpolation_polynomial(identity_sbox(4), FieldSpec::standard(5)), PreconditionError);
}

TEST(Interpolation, Summary)
{
    const auto sum = ip_summary(interpolation_polynomial(identity_sbox(3), FieldSpec::standard(3)));
    EXPECT_EQ(sum.degree, 1u);
    EXPECT_EQ(sum.terms, 1u);
}

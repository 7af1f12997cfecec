#include <gtest/gtest.h>

#include <sboxkit/bounds.hpp>

using namespace sboxkit;

TEST(Bounds, NonlinearityEvenWidth)
{
    const auto e = bounds_for("nl", 8, 8);
    EXPECT_EQ(e.lb, 0);
    EXPECT_EQ(e.ub, 120);
    EXPECT_TRUE(e.ub_exclusive);
    EXPECT_FALSE(e.contains(120));
    EXPECT_TRUE(e.contains(112));
}

TEST(Bounds, NonlinearityOddWidth)
{
    const auto e = bounds_for("NL", 5, 5);
    EXPECT_EQ(e.ub, 12);
    // Printed policy: 8 of an exclusive 12 sits in the middle band.
    EXPECT_EQ(verdict(8, e).kind, VerdictKind::acceptable);
}

TEST(Bounds, DifferentialUniformity)
{
    const auto e = bounds_for("du", 4, 4);
    EXPECT_EQ(e.lb, 2);
    EXPECT_EQ(e.ub, 16);
    EXPECT_EQ(verdict(16, e).kind, VerdictKind::poor);
    EXPECT_EQ(verdict(4, e).kind, VerdictKind::ideal);
    EXPECT_EQ(verdict(1, e).kind, VerdictKind::out_of_bounds);
}

TEST(Bounds, BranchNumber)
{
    const auto e = bounds_for("dbn", 8, 8);
    EXPECT_EQ(e.lb, 2);
    EXPECT_EQ(e.ub, 6);
}

TEST(Bounds, UndisturbedBitsAreFlagged)
{
    const auto v = verdict(3, bounds_for("udb", 4, 4));
    EXPECT_EQ(v.kind, VerdictKind::out_of_bounds);
    EXPECT_EQ(v.flag, "nonzero UDB");
    EXPECT_EQ(verdict(0, bounds_for("udb", 4, 4)).kind, VerdictKind::ideal);
}

TEST(Bounds, ExactTargets)
{
    EXPECT_EQ(verdict(0.5, bounds_for("sac", 4, 4)).kind, VerdictKind::ideal);
    EXPECT_EQ(verdict(1, bounds_for("bic", 4, 4)).kind, VerdictKind::poor);
    EXPECT_NE(verdict(0.55, bounds_for("sac", 4, 4)).kind, VerdictKind::ideal);
}

TEST(Bounds, LowerNeverAboveUpper)
{
    for (unsigned n = 1; n <= 16; ++n)
        for (unsigned m = 1; m <= 16; ++m)
            for (const auto& id : bound_ids()) {
                const auto e = bounds_for(id, n, m);
                EXPECT_LE(e.lb, e.ub) << id << " n=" << n << " m=" << m;
            }
}

TEST(Bounds, Aliases)
{
    EXPECT_EQ(canonical_metric_id("BN_D"), "dbn");
    EXPECT_EQ(canonical_metric_id("DPA-SNR"), "dpa_snr");
    EXPECT_THROW(bounds_for("nonsense", 4, 4), PreconditionError);
}

TEST(Bounds, JsonRoundTrip)
{
    for (const auto& id : bound_ids()) {
        const auto e = bounds_for(id, 4, 4);
        EXPECT_EQ(bounds_from_json(to_json(e)), e) << id;
    }
    const auto cat = bounds_catalogue(4, 4);
    EXPECT_EQ(cat.at("bounds").size(), bound_ids().size());
}

TEST(Bounds, DpaRangeDependsOnBalance)
{
    EXPECT_EQ(bounds_for("dpa_snr", 4, 4, true).lb, 1);
    EXPECT_EQ(bounds_for("dpa_snr", 4, 4, false).lb, 0);
    EXPECT_EQ(bounds_for("dpa_snr", 4, 4).ub, 4);
}

TEST(Bounds, PolicyBand)
{
    const auto e = bounds_for("du", 4, 4);
    EXPECT_EQ(verdict(6, e, VerdictPolicy{0.1}).kind, VerdictKind::acceptable);
}

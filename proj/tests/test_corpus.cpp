#include <gtest/gtest.h>

#include <sboxkit/corpus.hpp>

using namespace sboxkit;

TEST(Corpus, PresentPrefix)
{
    const SBox s = builtin("present");
    EXPECT_EQ(s[0], 0xCu);
    EXPECT_EQ(s[1], 0x5u);
    EXPECT_EQ(s[2], 0x6u);
    EXPECT_EQ(s[3], 0xBu);
}

TEST(Corpus, AllBuiltinsLoad)
{
    ASSERT_EQ(builtin_entries().size(), 5u);
    for (const auto& e : builtin_entries()) {
        const SBox s = builtin(e.id);
        EXPECT_EQ(s.n(), e.width);
        EXPECT_TRUE(is_bijective(s));
        std::vector<std::uint32_t> t(e.table.begin(), e.table.end());
        EXPECT_EQ(table_checksum(t), e.checksum) << e.id;
        EXPECT_FALSE(e.citation.empty());
    }
}

TEST(Corpus, Aliases)
{
    EXPECT_EQ(builtin("isap"), builtin("ascon"));
    EXPECT_EQ(builtin("romulus").table().size(), 256u);
    EXPECT_EQ(builtin_entry("photon-beetle").id, "present");
    EXPECT_EQ(builtin_entry("elephant").id, "spongent");
    EXPECT_EQ(builtin_entry("gift-cofb").id, "gift");
    EXPECT_THROW(builtin("des"), PreconditionError);
}

TEST(Corpus, FinalistColumns)
{
    for (const auto& [label, id] : finalist_columns())
        EXPECT_EQ(builtin_entry(label).id, id);
}

TEST(Corpus, ChecksumSensitivity)
{
    std::vector<std::uint32_t> a = {1, 2, 3}, b = {1, 2, 4};
    EXPECT_NE(table_checksum(a), table_checksum(b));
}

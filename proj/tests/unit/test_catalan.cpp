#include <gtest/gtest.h>

#include <grovelab/catalan.hpp>

using namespace grovelab;

TEST(Catalan, CountsMatchBinomialFormula) {
    long long c = 1;
    for (int n = 1; n <= 8; ++n) {
        c = c * 2 * (2 * n - 1) / (n + 1);
        EXPECT_EQ(static_cast<long long>(enumerate_dyck(n).size()), c);
        if (n <= 6) {
            EXPECT_EQ(static_cast<long long>(enumerate_ncm(n).size()), c);
            EXPECT_EQ(static_cast<long long>(enumerate_ncp(n).size()), c);
        }
    }
}

TEST(Catalan, DyckPathToMatchingAndPartition) {
    auto p = DyckPath::parse("UUDDUUDUDD");
    auto m = matching_of_path(p);
    EXPECT_EQ(m.to_string(), "1,4|2,3|5,10|6,7|8,9");
    EXPECT_EQ(partition_of_matching(m).to_string(), "12|345");
    EXPECT_EQ(partition_of_path(p).to_string(), "12|345");
}

TEST(Catalan, MinimalPathGivesSingletons) {
    EXPECT_EQ(partition_of_path(DyckPath::parse("UDUDUD")).to_string(), "1|2|3");
}

TEST(Catalan, RoundTrips) {
    for (int n = 1; n <= 6; ++n) {
        for (auto& p : enumerate_dyck(n)) {
            EXPECT_EQ(path_of_matching(matching_of_path(p)), p);
            EXPECT_EQ(path_of_partition(partition_of_path(p)), p);
            EXPECT_EQ(matching_of_partition(partition_of_matching(matching_of_path(p))), matching_of_path(p));
            EXPECT_EQ(path_of_subset(catalan_subset(p), n), p);
        }
        for (auto& s : enumerate_ncp(n)) {
            EXPECT_EQ(partition_of_matching(matching_of_partition(s)), s);
            EXPECT_EQ(s.num_parts() + dual_partition(s).num_parts(), n + 1);
        }
    }
}

TEST(Catalan, DualPartitionExamples) {
    EXPECT_EQ(dual_partition(NoncrossingPartition::parse("1|236|45")).to_string(), "16|2|35|4");
    EXPECT_EQ(dual_partition(NoncrossingPartition::parse("1234")).to_string(), "1|2|3|4");
}

TEST(Catalan, DoubleDualIsRotation) {
    for (int n = 1; n <= 5; ++n)
        for (auto& s : enumerate_ncp(n)) {
            auto dd = dual_partition(dual_partition(s));
            std::vector<int> lab(n);
            for (int i = 0; i < n; ++i) lab[i] = dd.block((i + n - 1) % n);
            auto rotated = NoncrossingPartition(lab);
            std::vector<int> lab2(n);
            for (int i = 0; i < n; ++i) lab2[i] = dd.block((i + 1) % n);
            EXPECT_TRUE(rotated == s || NoncrossingPartition(lab2) == s) << s.to_string();
        }
}

TEST(Catalan, CompareExamples) {
    EXPECT_EQ(compare(DyckPath::parse("UDUD"), DyckPath::parse("UUDD")), PathOrder::below);
    auto p = DyckPath::parse("UUDDUD"), q = DyckPath::parse("UDUUDD");
    EXPECT_EQ(compare(p, q), PathOrder::incomparable);
    EXPECT_EQ(lex_compare(q, p), std::strong_ordering::less);
    EXPECT_EQ(compare(p, p), PathOrder::equal);
}

TEST(Catalan, BelowImpliesLexLeq) {
    for (int n = 1; n <= 5; ++n) {
        auto ps = enumerate_dyck(n);
        for (auto& p : ps)
            for (auto& q : ps)
                if (compare(p, q) == PathOrder::below) EXPECT_NE(lex_compare(p, q), std::strong_ordering::greater);
    }
}

TEST(Catalan, CatalanSubsets) {
    EXPECT_EQ(catalan_subset(DyckPath::parse("UUDUUUDDDDUD")), (std::vector<int>{1, 3, 4, 5, 10}));
    EXPECT_FALSE(is_catalan_subset({3}, 2));
    EXPECT_EQ(path_of_subset({2, 4}, 3).to_string(), "UDUDUD");
    EXPECT_THROW(path_of_subset({3}, 2), InputError);
}

TEST(Catalan, EnumerateSmall) {
    EXPECT_EQ(enumerate_matchings(1).size(), 1u);
    EXPECT_EQ(enumerate_matchings(3).size(), 15u);
    EXPECT_EQ(enumerate_chains(3, 2).size(), 14u);
    EXPECT_THROW(enumerate_dyck(0), InputError);
}

TEST(Catalan, ParseRejectsCrossingPartition) {
    EXPECT_THROW(NoncrossingPartition::parse("13|24"), InputError);
    EXPECT_THROW(DyckPath::parse("UDDU"), InputError);
}

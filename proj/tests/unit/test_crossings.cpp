#include <gtest/gtest.h>

#include <grovelab/crossings.hpp>

using namespace grovelab;

namespace {
const Matching kFive = Matching::parse("1,8|2,4|3,10|5,9|6,7");
}

TEST(Crossings, BasicCounts) {
    auto full = Matching::parse("14|25|36");
    EXPECT_EQ(crossings(full).size(), 3u);
    EXPECT_FALSE(is_three_noncrossing(full));
    EXPECT_TRUE(is_k_noncrossing(Matching::parse("12|34|56"), 2));
    EXPECT_TRUE(is_three_noncrossing(kFive));
    EXPECT_EQ(enumerate_tc(3).size(), 14u);
}

TEST(Crossings, RskExample) {
    auto [p1, p2] = phi_rsk(kFive);
    EXPECT_EQ(p1.to_string(), "UUDDUUDUDD");
    EXPECT_EQ(p2.to_string(), "UUUDUUDDDD");
}

TEST(Crossings, ResolutionExamples) {
    const auto k = crossings(kFive).size();
    auto [m0, l0] = resolve(kFive, ResolutionVector(k, 0));
    auto [m1, l1] = resolve(kFive, ResolutionVector(k, 1));
    EXPECT_EQ(m0.to_string(), "1,4|2,3|5,10|6,7|8,9");
    EXPECT_EQ(m1.to_string(), "1,10|2,9|3,4|5,8|6,7");
    EXPECT_EQ(l0, 0);
    EXPECT_EQ(l1, 0);
}

TEST(Crossings, NoncrossingFixedPoints) {
    for (auto& m : enumerate_ncm(4)) {
        auto [p, q] = phi_rsk(m);
        EXPECT_EQ(p, q);
        EXPECT_EQ(p, path_of_matching(m));
        EXPECT_EQ(resolve(m, {}).first, m);
    }
}

TEST(Crossings, PhiAgreesAndIsBijective) {
    for (int n = 1; n <= 4; ++n) {
        std::set<std::pair<DyckPath, DyckPath>> images;
        for (auto& m : enumerate_tc(n)) {
            auto img = phi_rsk(m);
            EXPECT_EQ(img, phi_resolution(m)) << m.to_string();
            EXPECT_TRUE(path_leq(img.first, img.second));
            images.insert(img);
            EXPECT_EQ(phi_inverse(img.first, img.second), m);
        }
        EXPECT_EQ(images.size(), enumerate_chains(n, 2).size());
    }
    EXPECT_EQ(phi_inverse(DyckPath::parse("UUDDUUDUDD"), DyckPath::parse("UUUDUUDDDD")), kFive);
}

TEST(Crossings, MaxResolution) {
    for (auto& m : enumerate_tc(3)) EXPECT_TRUE(max_resolution_check(m));
    auto m = Matching::parse("13|24");
    EXPECT_EQ(resolve(m, {0}).first.to_string(), "12|34");
    EXPECT_EQ(resolve(m, {1}).first.to_string(), "14|23");
}

TEST(Crossings, TopResolutionKeepsLeftEndpoints) {
    for (auto& m : enumerate_tc(4)) {
        auto top = resolve(m, ResolutionVector(crossings(m).size(), 1)).first;
        for (int i = 0; i < m.size(); ++i) EXPECT_EQ(m.is_left(i), top.is_left(i));
    }
}

TEST(Crossings, RskRejectsThreeCrossing) {
    EXPECT_THROW(phi_rsk(Matching::parse("14|25|36")), InputError);
}

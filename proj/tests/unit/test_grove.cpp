#include <gtest/gtest.h>

#include <random>

#include <grovelab/grove.hpp>

using namespace grovelab;

namespace {
NoncrossingPartition P(const char* s) { return NoncrossingPartition::parse(s); }
} // namespace

TEST(Grove, YGroves) {
    auto y = builtin_y3();
    auto gs = enumerate_groves(y);
    EXPECT_EQ(gs.size(), 7u);
    EXPECT_EQ(grove_measurement(y, P("123")).to_string(), "a*b*c");
    EXPECT_EQ(grove_measurement(y, P("1|2|3")).to_string(), "a + b + c");
    EXPECT_EQ(grove_measurement(y, P("12|3")).to_string(), "a*b");
    EXPECT_EQ(grove_measurement(y, P("13|2")).to_string(), "a*c");
}

TEST(Grove, SmallNetworks) {
    NetworkSpec s;
    s.n = 2;
    auto empty = build_network(s);
    ASSERT_EQ(enumerate_groves(empty).size(), 1u);
    EXPECT_EQ(enumerate_groves(empty)[0].sigma, P("1|2"));
    EXPECT_EQ(enumerate_double_groves(empty).size(), 1u);
    EXPECT_EQ(split_count(empty, P("1|2"), P("1|2")), 1);
    s.edges = {{"e", "b1", "b2"}};
    s.rotation = {{"b1", {"e"}}, {"b2", {"e"}}};
    auto one = build_network(s);
    EXPECT_EQ(enumerate_groves(one).size(), 2u);
    EXPECT_EQ(enumerate_double_groves(one).size(), 3u);
}

TEST(Grove, YDoubleGrovesAndSplits) {
    auto y = builtin_y3();
    EXPECT_EQ(enumerate_double_groves(y).size(), 27u);
    EXPECT_EQ(split_count(y, P("12|3"), P("1|2|3")), 1);
    Int total = 0;
    for (auto& s : enumerate_ncp(3)) total += split_count(y, P("123"), s);
    EXPECT_EQ(total, 0);
}

TEST(Grove, GrovePartitionsCoarsenZetaAndCountAtOnes) {
    std::mt19937_64 rng(3);
    std::vector<CactusNetwork> nets{builtin_y3(), builtin_fig3()};
    for (int i = 0; i < 20; ++i) nets.push_back(random_network(3 + i % 3, 6, rng));
    for (auto& g : nets) {
        auto gs = enumerate_groves(g);
        for (auto& f : gs) EXPECT_TRUE(f.sigma.coarsens(g.zeta()));
        std::map<std::string, Rat> ones;
        for (int k : g.alive_edges()) ones[g.E[k].id] = 1;
        Rat sum = 0;
        for (auto& [s, p] : all_measurements(g)) sum += p.eval(ones);
        EXPECT_EQ(sum, Rat(static_cast<long>(gs.size())));
    }
}

TEST(Grove, SplitCountMatchesSquarefreeExtraction) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        auto g = random_network(3, 5, rng);
        bool simple = true;
        for (int k : g.alive_edges())
            for (int l : g.alive_edges())
                if (k < l && std::minmax(g.E[k].u, g.E[k].v) == std::minmax(g.E[l].u, g.E[l].v)) simple = false;
        auto L = all_measurements(g);
        Monomial full = edge_monomial(g, g.alive_edges());
        for (auto& [s1, p1] : L)
            for (auto& [s2, p2] : L) {
                auto prod = p1 * p2;
                auto it = prod.terms().find(full);
                Int c = it == prod.terms().end() ? Int(0) : it->second;
                EXPECT_EQ(c, split_count(g, s1, s2)) << (simple ? "simple" : "multi");
            }
    }
}

#include <gtest/gtest.h>

#include <random>

#include <grovelab/network.hpp>

using namespace grovelab;

namespace {
Matching shifted(const Matching& m, int s) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : m.pairs()) pairs.emplace_back((a + s + m.size()) % m.size(), (b + s + m.size()) % m.size());
    return Matching::from_pairs(m.n(), pairs);
}
} // namespace

TEST(Network, YPairing) {
    auto y = builtin_y3();
    EXPECT_EQ(y.medial_pairing().to_string(), "14|25|36");
    EXPECT_TRUE(y.is_lensless());
    EXPECT_EQ(crossings(y.medial_pairing()).size(), 3u);
}

TEST(Network, SevenTerminalBuiltinPairing) {
    auto g = builtin_fig3();
    EXPECT_EQ(g.medial_pairing(), Matching::parse("1,2|3,11|4,13|5,12|6,8|7,9|10,14"));
    EXPECT_TRUE(g.is_lensless());
}

TEST(Network, EmptyNetwork) {
    NetworkSpec s;
    s.n = 4;
    auto g = build_network(s);
    EXPECT_EQ(g.medial_pairing().to_string(), "12|34|56|78");
    auto d = dual_network(g);
    EXPECT_EQ(d.zeta().num_parts(), 1);
}

TEST(Network, SingleEdges) {
    for (auto [a, b, want] : {std::tuple{"b1", "b2", "13|24|56"}, {"b2", "b3", "12|35|46"}, {"b3", "b1", "15|26|34"}}) {
        NetworkSpec s;
        s.n = 3;
        s.edges = {{"e", a, b}};
        s.rotation = {{a, {"e"}}, {b, {"e"}}};
        EXPECT_EQ(build_network(s).medial_pairing().to_string(), want);
    }
}

TEST(Network, ParallelEdgesAreNotReduced) {
    NetworkSpec s;
    s.n = 1;
    s.interior = {"x"};
    s.edges = {{"p", "b1", "x"}, {"q", "b1", "x"}};
    s.rotation = {{"x", {"p", "q"}}, {"b1", {"q", "p"}}};
    EXPECT_FALSE(build_network(s).is_lensless());
}

TEST(Network, RoundTripOnThreeNoncrossing) {
    for (int n = 1; n <= 4; ++n)
        for (auto& xi : enumerate_tc(n)) {
            auto g = network_of_matching(xi);
            EXPECT_EQ(g.medial_pairing(), xi) << xi.to_string();
            EXPECT_TRUE(g.is_lensless());
            EXPECT_EQ(g.num_edges(), static_cast<int>(crossings(xi).size()));
            for (int v : g.alive_vertices())
                if (!g.V[v].boundary) EXPECT_GE(g.degree(v), 4);
            EXPECT_TRUE(yd_sites(g).empty() || std::none_of(yd_sites(g).begin(), yd_sites(g).end(),
                                                             [](const YDSite& s) { return !s.star; }));
        }
    EXPECT_THROW(network_of_matching(Matching::parse("14|25|36")), InputError);
}

TEST(Network, NestedExampleHasThreeEdges) {
    auto g = network_of_matching(Matching::parse("1,9|2,4|3,6|5,7|8,10"));
    EXPECT_EQ(g.num_edges(), 3);
}

TEST(Network, DualShiftsPairing) {
    std::mt19937_64 rng(11);
    std::vector<CactusNetwork> nets{builtin_y3(), builtin_fig3()};
    for (int i = 0; i < 50; ++i) nets.push_back(random_network(3 + i % 3, 6, rng));
    for (auto& g : nets) {
        auto d = dual_network(g);
        EXPECT_EQ(d.num_edges(), g.num_edges());
        EXPECT_EQ(d.medial_pairing(), shifted(g.medial_pairing(), -1));
        auto dd = dual_network(d);
        EXPECT_EQ(dd.medial_pairing(), shifted(g.medial_pairing(), -2));
    }
}

TEST(Network, YDeltaOnY) {
    auto y = builtin_y3();
    auto t = y_to_delta(y, 3);
    EXPECT_EQ(t.num_edges(), 3);
    EXPECT_EQ(t.medial_pairing(), y.medial_pairing());
    auto sites = yd_sites(t);
    ASSERT_EQ(sites.size(), 1u);
    auto back = yd_move(t, sites[0]);
    EXPECT_EQ(back.medial_pairing(), y.medial_pairing());
    EXPECT_EQ(back.canonical_code(), y.canonical_code());
    EXPECT_THROW(y_to_delta(y, 0), InputError);
}

TEST(Network, YDeltaRandomInvariance) {
    std::mt19937_64 rng(5);
    int moves = 0;
    for (int trial = 0; trial < 2000 && moves < 50; ++trial) {
        auto g = random_reduced_network(3 + trial % 3, rng);
        auto sites = yd_sites(g);
        if (sites.empty()) continue;
        auto h = yd_move(g, sites[rng() % sites.size()]);
        h.validate();
        EXPECT_EQ(h.medial_pairing(), g.medial_pairing());
        ++moves;
    }
    EXPECT_EQ(moves, 50);
}

TEST(Network, SpecRoundTrip) {
    for (auto g : {builtin_y3(), builtin_fig3()}) {
        auto h = build_network(network_spec(g));
        EXPECT_EQ(h.canonical_code(), g.canonical_code());
    }
}

TEST(Network, InvalidEmbeddingsRejected) {
    NetworkSpec s;
    s.n = 4;
    s.edges = {{"p", "b1", "b3"}, {"q", "b2", "b4"}};
    s.rotation = {{"b1", {"p"}}, {"b3", {"p"}}, {"b2", {"q"}}, {"b4", {"q"}}};
    EXPECT_THROW(build_network(s), InputError);
    NetworkSpec t;
    t.n = 2;
    t.interior = {"z"};
    EXPECT_THROW(build_network(t), InputError);
}

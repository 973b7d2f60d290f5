#include <gtest/gtest.h>

#include <random>

#include <grovelab/grove.hpp>
#include <grovelab/network_json.hpp>

using namespace grovelab;

TEST(NetworkJson, BuiltinsRoundTrip) {
    for (const char* name : {"y3", "fig3"}) {
        auto g = builtin_network(name);
        auto text = network_to_json(g);
        auto h = network_from_json(text);
        EXPECT_EQ(network_to_json(h), text) << name;
        EXPECT_EQ(h.canonical_code(), g.canonical_code());
    }
}

TEST(NetworkJson, KeysAreSorted) {
    auto text = network_to_json(builtin_network("y3"), -1);
    EXPECT_LT(text.find("\"edges\""), text.find("\"interior\""));
    EXPECT_LT(text.find("\"n\""), text.find("\"rotation\""));
    EXPECT_LT(text.find("\"rotation\""), text.find("\"zeta\""));
}

TEST(NetworkJson, WeightsAreExactRationals) {
    const std::string text = R"({"n":3,"zeta":[[1],[2],[3]],"interior":["x"],
        "edges":[{"id":"a","ends":["b1","x"]},{"id":"b","ends":["b2","x"]},{"id":"c","ends":["b3","x"]}],
        "rotation":{"x":["a","b","c"],"b1":["a"],"b2":["b"],"b3":["c"]},
        "weights":{"a":"1/3","b":"2","c":"6/4"}})";
    auto g = network_from_json(text);
    auto back = nlohmann::json::parse(network_to_json(g));
    EXPECT_EQ(back["weights"]["a"], "1/3");
    EXPECT_EQ(back["weights"]["c"], "3/2");
    auto pt = weight_point(g);
    EXPECT_EQ(grove_measurement(g, NoncrossingPartition::parse("1|2|3")).eval(pt), Rat(23, 6));
}

TEST(NetworkJson, RandomNetworksRoundTrip) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto g = random_network(4, 7, rng);
        assign_random_weights(g, rng);
        auto text = network_to_json(g);
        EXPECT_EQ(network_to_json(network_from_json(text)), text);
    }
}

TEST(NetworkJson, MalformedInputIsAnInputError) {
    EXPECT_THROW(network_from_json("{"), InputError);
    EXPECT_THROW(network_from_json(R"({"n":3})"), InputError);
    EXPECT_THROW(network_from_json(R"({"n":1,"zeta":[[1]],"edges":[],"weights":{"a":"1/0"}})"), InputError);
    EXPECT_THROW(network_from_json(R"({"n":2,"zeta":[[1],[2]],"edges":[{"id":"a","ends":["b1"]}]})"), InputError);
    // an interior vertex cut off from the boundary
    EXPECT_THROW(network_from_json(R"({"n":1,"zeta":[[1]],"interior":["x","y"],
        "edges":[{"id":"a","ends":["x","y"]}],"rotation":{"x":["a"],"y":["a"]}})"), InputError);
}

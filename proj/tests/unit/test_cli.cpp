#include <gtest/gtest.h>

#include <sstream>

#include <grovelab/cli.hpp>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run call(std::vector<std::string> args) {
    args.insert(args.begin(), "grovelab");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = grovelab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, MeasureAndBushOnTheStar) {
    auto m = call({"measure", "--builtin", "y3", "--partition", "1|2|3"});
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(m.out, "a + b + c\n");
    auto b = call({"bush", "--builtin", "y3", "--xi", "15|26|34"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, "a^2*c + a*b*c + a*c^2\n");
}

TEST(Cli, AlphaOfTheStar) {
    auto r = call({"alpha", "--builtin", "y3"});
    EXPECT_EQ(r.out, "(12|35|46) + (13|24|56) + (15|26|34)\n");
}

TEST(Cli, MedialOfSevenTerminalBuiltin) {
    auto r = call({"medial", "--builtin", "fig3"});
    EXPECT_EQ(r.out, "1,2|3,11|4,13|5,12|6,8|7,9|10,14\n");
}

TEST(Cli, EnumAndConvert) {
    auto r = call({"enum", "tc", "--n", "3"});
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 14);
    EXPECT_EQ(call({"convert", "UUDDUUDUDD", "--to", "ncm"}).out, "1,4|2,3|5,10|6,7|8,9\n");
    EXPECT_EQ(call({"convert", "UUDDUUDUDD"}).out, "12|345\n");
    EXPECT_EQ(call({"convert", "1,4|2,3|5,10|6,7|8,9", "--from", "ncm", "--to", "dyck"}).out, "UUDDUUDUDD\n");
    EXPECT_EQ(call({"convert", "13|24", "--from", "ncm"}).code, 2);
}

TEST(Cli, VerifyProductExhaustive) {
    auto r = call({"verify", "product", "--n", "3", "--all"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "ok (25 pairs × all TC_3)\n");
}

TEST(Cli, DimsAndDelta) {
    EXPECT_EQ(call({"dims", "--n", "4", "--d", "2"}).out, "84\n");
    EXPECT_EQ(call({"delta", "1", "--n", "2"}).out, "(12)\n");
}

TEST(Cli, BetaRules) {
    EXPECT_EQ(call({"beta", "--xi", "12|34|56"}).out, "(tau=;T=2,4) + (tau=;T=2,6) + (tau=;T=4,6)\n");
    auto split = call({"beta", "--xi", "12|34|56", "--rule", "split"});
    EXPECT_NE(split.out.find("(tau=46;T=2)"), std::string::npos);
}

TEST(Cli, JsonOutput) {
    auto r = call({"measure", "--builtin", "y3", "--partition", "1|2|3", "--json"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["status"], "ok");
    EXPECT_EQ(j["result"], "a + b + c");
    auto d = call({"dual", "--builtin", "y3", "--json"});
    EXPECT_EQ(nlohmann::json::parse(d.out)["result"]["n"], 3);
}

TEST(Cli, InputErrorsExitWithTwo) {
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"nosuch"}).code, 2);
    EXPECT_EQ(call({"measure"}).code, 2);
    EXPECT_EQ(call({"measure", "--builtin", "nosuch"}).code, 2);
    EXPECT_EQ(call({"measure", "--network", "/nonexistent.json"}).code, 2);
    EXPECT_EQ(call({"bush", "--builtin", "y3", "--xi", "14|25|36"}).code, 2);
    EXPECT_EQ(call({"verify", "nosuch"}).code, 2);
    EXPECT_EQ(call({"enum", "tc", "--n", "zero"}).code, 2);
}

TEST(Cli, Deterministic) {
    auto a = call({"verify", "confluence", "--trials", "5"});
    auto b = call({"verify", "confluence", "--trials", "5"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0);
}

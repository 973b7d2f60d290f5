#include <gtest/gtest.h>

#include <random>

#include <grovelab/polyring.hpp>

using namespace grovelab;

namespace {
MultiPoly var(const char* s) { return MultiPoly::variable(s); }

MultiPoly random_poly(std::mt19937& rng) {
    const char* names[] = {"a", "b", "c", "d"};
    MultiPoly p;
    std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2), count(0, 4);
    for (int t = count(rng); t > 0; --t) {
        Monomial m;
        for (auto* v : names) m.emplace_back(v, expo(rng));
        p += MultiPoly::monomial(m, coeff(rng));
    }
    return p;
}
} // namespace

TEST(Polyring, GoldenOrdering) {
    auto a = var("a"), b = var("b"), c = var("c");
    auto p = a * b * c + a * a * c;
    p += a * c * c;
    EXPECT_EQ(p.to_string(), "a^2*c + a*b*c + a*c^2");
}

TEST(Polyring, Algebra) {
    auto a = var("a"), b = var("b");
    EXPECT_EQ((a + b) * (a - b), a * a - b * b);
    EXPECT_EQ((a * MultiPoly(1)), a);
    EXPECT_EQ((a - a).to_string(), "0");
    EXPECT_EQ((MultiPoly(2) * a - b * b * MultiPoly(3)).to_string(), "-3*b^2 + 2*a");
}

TEST(Polyring, Eval) {
    std::map<std::string, Rat> pt{{"a", 1}, {"b", 2}, {"c", 3}};
    auto p = MultiPoly::parse("a^2*c + a*b*c + a*c^2");
    EXPECT_EQ(p.eval(pt), 18);
    EXPECT_EQ(MultiPoly().eval({}), 0);
    EXPECT_THROW(var("z").eval(pt), InputError);
}

TEST(Polyring, RingAxiomsRandomized) {
    std::mt19937 rng(7);
    std::map<std::string, Rat> pt{{"a", Rat(1, 2)}, {"b", -3}, {"c", Rat(5, 7)}, {"d", 2}};
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ((p * q).eval(pt), p.eval(pt) * q.eval(pt));
        EXPECT_EQ((p + q).eval(pt), p.eval(pt) + q.eval(pt));
        EXPECT_EQ(MultiPoly::parse(p.to_string()), p);
        EXPECT_EQ(MultiPoly::parse(p.to_string()).to_string(), p.to_string());
    }
}

TEST(Polyring, ParseErrors) {
    EXPECT_THROW(MultiPoly::parse(""), InputError);
    EXPECT_THROW(MultiPoly::parse("a +"), InputError);
    EXPECT_THROW(MultiPoly::parse("a b"), InputError);
}

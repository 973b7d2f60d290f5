#include <gtest/gtest.h>

#include <random>

#include <grovelab/network.hpp>
#include <grovelab/straighten.hpp>

using namespace grovelab;

namespace {

std::vector<std::map<NoncrossingPartition, Rat>> sample_values(int n, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::map<NoncrossingPartition, Rat>> vals;
    for (int t = 0; t < count; ++t) {
        auto g = random_network(n, 8, rng);
        assign_random_weights(g, rng);
        vals.push_back(measurement_values(g));
    }
    return vals;
}

} // namespace

TEST(Straighten, DimFormulaSmallValues) {
    EXPECT_EQ(dim_formula(3, 1), 5);
    EXPECT_EQ(dim_formula(3, 2), 14);
    EXPECT_EQ(dim_formula(4, 2), 84);
    EXPECT_EQ(dim_formula(5, 0), 1);
    EXPECT_THROW(dim_formula(0, 1), InputError);
}

// Independent count: d = 2 chains equal the 2x2 Catalan determinant C_{n+2}C_n - C_{n+1}^2.
TEST(Straighten, CountStandardMatchesFormula) {
    const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(count_standard(n, 2), cat[n + 2] * cat[n] - cat[n + 1] * cat[n + 1]) << n;
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= 3; ++d) EXPECT_EQ(count_standard(n, d), dim_formula(n, d)) << n << "," << d;
}

TEST(Straighten, MonomialOrder) {
    auto paths = enumerate_dyck(3);
    std::sort(paths.begin(), paths.end());
    LMonomial one({paths[4]}), two({paths[0], paths[0]});
    EXPECT_TRUE(monomial_compare(one, two) < 0);
    LMonomial pp({paths[1], paths[1]}), pq({paths[1], paths[2]});
    EXPECT_TRUE(monomial_compare(pp, pq) < 0);
    EXPECT_TRUE(monomial_compare(pq, pq) == 0);
    // the larger factor decides first
    LMonomial a({paths[0], paths[3]}), b({paths[2], paths[2]});
    EXPECT_TRUE(monomial_compare(a, b) > 0);
}

TEST(Straighten, CatalanSubsetPathIsLexMinimalConcordant) {
    for (int n = 2; n <= 5; ++n)
        for (auto& p : enumerate_dyck(n)) {
            auto I = catalan_subset(p);
            auto E = concordant_set(I, n);
            ASSERT_FALSE(E.empty());
            DyckPath best = path_of_partition(E[0]);
            for (auto& s : E) best = std::min(best, path_of_partition(s));
            EXPECT_EQ(best, p) << p.to_string();
        }
}

TEST(Straighten, ExampleRelationTerms) {
    const int n = 4;
    auto P = path_of_subset({1, 2, 5}, n), Q = path_of_subset({1, 3, 4}, n);
    QuadraticForm expect = multiply(delta({1, 2, 5}, n), delta({1, 3, 4}, n)) +
                           multiply(delta({1, 2, 3}, n), delta({1, 4, 5}, n)) +
                           multiply(delta({1, 2, 4}, n), delta({1, 3, 5}, n)) * Int(-1);
    EXPECT_EQ(relation(P, Q), to_polynomial(expect));
    EXPECT_THROW(relation(Q, P), InputError);
    EXPECT_THROW(relation(P, P), InputError);
}

TEST(Straighten, LeadingTermIsTheNoncomparablePair) {
    for (int n = 2; n <= 4; ++n)
        for (auto& [P, Q] : noncomparable_pairs(n)) {
            auto r = relation(P, Q);
            LMonomial lead({Q, P});
            EXPECT_EQ(leading_monomial(r), lead) << lead.to_string();
            EXPECT_EQ(r.coeff(lead), 1);
        }
}

TEST(Straighten, RelationsVanish) {
    for (int n : {3, 4}) {
        auto vals = sample_values(n, 5, 11);
        for (auto& [P, Q] : noncomparable_pairs(n)) {
            auto r = relation(P, Q);
            for (auto& v : vals) ASSERT_EQ(evaluate(r, v), 0);
        }
    }
}

TEST(Straighten, QuadraticsReachStandardSupport) {
    for (int n : {3, 4}) {
        auto vals = sample_values(n, 4, 5);
        auto paths = enumerate_dyck(n);
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = i; j < paths.size(); ++j) {
                LMonomial m({paths[i], paths[j]});
                auto res = straighten_monomial(m);
                for (auto& [x, c] : res.standard.terms()) EXPECT_TRUE(x.is_standard());
                if (m.is_standard()) EXPECT_EQ(res.standard, LPolynomial(m));
                for (auto& v : vals) ASSERT_EQ(evaluate(res.standard, v), evaluate(LPolynomial(m), v));
            }
    }
}

TEST(Straighten, CubicStraightening) {
    auto vals = sample_values(3, 3, 9);
    auto paths = enumerate_dyck(3);
    for (auto& a : paths)
        for (auto& b : paths)
            for (auto& c : paths) {
                LMonomial m({a, b, c});
                auto res = straighten_monomial(m);
                for (auto& [x, k] : res.standard.terms()) ASSERT_TRUE(x.is_standard());
                for (auto& v : vals) ASSERT_EQ(evaluate(res.standard, v), evaluate(LPolynomial(m), v));
            }
}

TEST(Straighten, MonomialRoundTrip) {
    auto m = LMonomial::parse("12|3;1|2|3", 3);
    EXPECT_EQ(LMonomial::parse(m.to_string(), 3), m);
    EXPECT_THROW(LMonomial::parse("12|3;1|2", 3), InputError);
}

TEST(Straighten, MatrixRank) {
    std::vector<std::vector<Rat>> a{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(matrix_rank(a), 2);
    EXPECT_EQ(matrix_rank({}), 0);
}

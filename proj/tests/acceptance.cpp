// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <grovelab/verify.hpp>

using namespace grovelab;

namespace {

int failures = 0;

VerifyResult all_of(std::initializer_list<std::function<VerifyResult()>> checks) {
    std::string summary;
    for (auto& c : checks) {
        auto r = c();
        if (!r.ok) return r;
        summary += (summary.empty() ? "" : "; ") + r.message;
    }
    return {true, summary};
}

void criterion(int id, const std::string& title, double limit_s, const std::function<VerifyResult()>& check) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyResult r;
    try {
        r = check();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.ok && s > limit_s) r = {false, "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s"};
    if (!r.ok) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (r.ok ? "PASS" : "FAIL") << " " << id << " " << title << " [" << s << " s] " << r.message;
    std::cout << line.str() << std::endl;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name + ".expected");
    if (!in) throw std::runtime_error("missing golden " + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

VerifyResult expect_equal(const std::string& what, const std::string& got, const std::string& want) {
    if (got == want) return {true, what + " matches"};
    return counterexample(what + ": got '" + got + "', expected '" + want + "'");
}

constexpr std::uint64_t seed = 20240501;

} // namespace

int main() {
    criterion(1, "Catalan counts n=1..8", 5, [] {
        const long want[] = {1, 2, 5, 14, 42, 132, 429, 1430};
        for (int n = 1; n <= 8; ++n)
            if (static_cast<long>(enumerate_dyck(n).size()) != want[n - 1]) return counterexample("n=" + std::to_string(n));
        return verify_catalan_counts(8);
    });

    criterion(2, "|TC_n| = |C_n^(2)| for n=2..5", 30, [] {
        const long want[] = {3, 14, 84, 594};
        for (int n = 2; n <= 5; ++n) {
            const long tc = static_cast<long>(enumerate_tc(n).size());
            if (tc != want[n - 2] || count_standard(n, 2) != tc || dim_formula(n, 2) != tc)
                return counterexample("n=" + std::to_string(n));
        }
        return verify_dims(5);
    });

    criterion(3, "phi_rsk = phi_resolution on TC_n, n<=5", 60, [] { return verify_rsk(5); });

    criterion(4, "maximal resolution on TC_4", 60, [] { return verify_maxres(4); });

    criterion(5, "alpha confluence", 300, [] { return verify_confluence(3, 100, 200, seed); });

    criterion(6, "alpha(Y) and B_(15|26|34)(Y) goldens", 1, [] {
        auto y = builtin_y3();
        const std::string a = alpha(y).to_string(), b = bush_value(y, Matching::parse("15|26|34")).to_string();
        return all_of({
            [&] { return expect_equal("alpha(Y)", a, "(12|35|46) + (13|24|56) + (15|26|34)"); },
            [&] { return expect_equal("alpha(Y) golden file", a + "\n", read_golden("alpha_y3")); },
            [&] { return expect_equal("B(Y)", b, "a^2*c + a*b*c + a*c^2"); },
            [&] { return expect_equal("B(Y) golden file", b + "\n", read_golden("bush_y3")); },
        });
    });

    criterion(7, "L_s L_s' = sum a B_xi", 600, [] {
        return all_of({
            [] { return verify_product_on(builtin_y3(), "Y"); },
            [] { return verify_product_on(builtin_fig3(), "fig3"); },
            [] { return verify_product(3, false, 20, 5, seed); },
            [] { return verify_product(4, false, 20, 5, seed + 1); },
        });
    });

    criterion(8, "a_coeff = grove-splitting oracle on TC_4", 300, [] { return verify_a_coefficients(4); });

    criterion(9, "triangularity and rank 14 at n=3", 120, [] {
        auto r = verify_lift(3, 5, seed);
        if (r.ok && lift_bush(3).rank != 14) return counterexample("rank is not 14");
        return r;
    });

    criterion(10, "degree identity on TC_4 and the nested beta example", 300, [] {
        std::size_t selections = 0;
        for (auto rule : {BetaRule::single_root, BetaRule::split_roots})
            for (auto& xi : enumerate_tc(4)) {
                BipartiteN N(xi, rule);
                std::string bad;
                N.for_each_selection([&](const BipartiteN::Selection& s) {
                    ++selections;
                    for (auto& [p, c] : s.terms.terms())
                        if (2 * p.tau.size() + 2 * p.T.size() != 2 * 4 - 2 && bad.empty()) bad = xi.to_string() + " " + p.to_string();
                });
                if (!bad.empty()) return counterexample(bad);
            }
        const std::string got = beta(Matching::parse("12|34|56")).to_string();
        auto ex = expect_equal("beta(12|34|56)", got, "(tau=;T=2,4) + (tau=;T=2,6) + (tau=;T=4,6)");
        if (!ex.ok) return ex;
        return verified(std::to_string(selections) + " selections; " + ex.message);
    });

    criterion(11, "Delta_I Delta_J = sum F_{tau,T}", 600, [] {
        auto r = all_of({
            [] { return verify_delta_products(3, true); },
            [] { return verify_delta_products(4, false, 200, seed); },
        });
        if (!r.ok) return r;
        // the single-root reading of beta, for the record
        ImmanantContext literal(3);
        int broken = 0;
        for (auto& I : all_index_sets(3))
            for (auto& J : all_index_sets(3)) broken += !verify_delta_product(literal, I, J).ok;
        r.message += "; F built from split-root beta, single-root beta fails " + std::to_string(broken) + "/225 at n=3";
        return r;
    });

    criterion(12, "Pluecker relations and r_{P,Q} vanish", 300, [] {
        return all_of({[] { return verify_plucker(3, 20, seed); }, [] { return verify_plucker(4, 20, seed + 1); }});
    });

    criterion(13, "leading terms, straightening, dimensions, evaluation rank", 600,
              [] { return verify_grobner(4, 20, seed); });

    criterion(14, "fig3 builtin medial pairing", 1, [] {
        auto got = builtin_fig3().medial_pairing();
        auto want = Matching::from_pairs(7, {{0, 1}, {2, 10}, {3, 12}, {4, 11}, {5, 7}, {6, 8}, {9, 13}});
        return expect_equal("medial pairing", got.to_string(), want.to_string());
    });

    criterion(15, "Y-Delta invariance of the medial pairing", 30, [] {
        std::mt19937_64 rng(seed);
        int moves = 0, graphs = 0;
        while (moves < 50) {
            if (++graphs > 5000) return counterexample("could not find 50 applicable moves");
            auto g = random_reduced_network(3 + graphs % 3, rng);
            const auto tau = g.medial_pairing();
            for (int step = 0; step < 3 && moves < 50; ++step) {
                auto sites = yd_sites(g);
                if (sites.empty()) break;
                g = yd_move(g, sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)]);
                g.validate();
                ++moves;
                if (!(g.medial_pairing() == tau)) return counterexample("move " + std::to_string(moves) + " on " + tau.to_string());
            }
        }
        return verified(std::to_string(moves) + " moves on " + std::to_string(graphs) + " random reduced networks");
    });

    std::cout << (failures ? "FAILED " + std::to_string(failures) + " criteria" : std::string("ALL 15 CRITERIA PASS")) << std::endl;
    return failures ? 1 : 0;
}

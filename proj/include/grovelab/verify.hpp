#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bush.hpp"
#include "catalan.hpp"
#include "crossings.hpp"
#include "grove.hpp"
#include "immanant.hpp"
#include "network.hpp"
#include "straighten.hpp"

namespace grovelab {

struct VerifyResult {
    bool ok = true;
    std::string message; ///< "ok (...)" or the first counterexample
};

inline VerifyResult verified(std::string what) { return {true, "ok (" + what + ")"}; }
inline VerifyResult counterexample(std::string what) { return {false, "counterexample: " + what}; }

// ---------------------------------------------------------------------------
// Parallel loops with deterministic aggregation

inline int thread_count() {
    if (const char* env = std::getenv("GROVELAB_THREADS"); env && *env) {
        int t = 0;
        try {
            t = detail::parse_positive(env);
        } catch (const InputError&) {
            throw InputError("GROVELAB_THREADS must be a positive integer");
        }
        return t;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs f(i) for i < count; the exception of the smallest failing index is rethrown.
template <class F>
void parallel_for(std::size_t count, F&& f) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// First failing message in index order, or ok with the given summary.
inline VerifyResult first_failure(const std::vector<VerifyResult>& parts, std::string summary) {
    for (auto& r : parts)
        if (!r.ok) return r;
    return verified(std::move(summary));
}

namespace detail {

inline Int binomial(int n, int k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

inline std::string pair_string(const PartitionPair& p) { return p.first.to_string() + ";" + p.second.to_string(); }

} // namespace detail

// ---------------------------------------------------------------------------
// Catalan and dimension counts

inline VerifyResult verify_catalan_counts(int max_n = 8) {
    for (int n = 1; n <= max_n; ++n) {
        Int c = detail::binomial(2 * n, n) / (n + 1);
        auto sizes = {enumerate_dyck(n).size(), enumerate_ncm(n).size(), enumerate_ncp(n).size()};
        for (auto s : sizes)
            if (Int(static_cast<unsigned long>(s)) != c)
                return counterexample("n=" + std::to_string(n) + " count " + std::to_string(s) + " != " + c.get_str());
    }
    return verified("C_n for n=1.." + std::to_string(max_n));
}

inline VerifyResult verify_dims(int max_n = 5) {
    for (int n = 2; n <= max_n; ++n) {
        Int tc(static_cast<unsigned long>(enumerate_tc(n).size()));
        Int chains = count_standard(n, 2), formula = dim_formula(n, 2);
        if (tc != chains || chains != formula)
            return counterexample("n=" + std::to_string(n) + ": |TC_n|=" + tc.get_str() + " chains=" + chains.get_str() +
                                  " formula=" + formula.get_str());
    }
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; d <= 3; ++d)
            if (count_standard(n, d) != dim_formula(n, d))
                return counterexample("n=" + std::to_string(n) + " d=" + std::to_string(d));
    return verified("|TC_n| = chains = product formula for n=2.." + std::to_string(max_n) + ", d<=3");
}

// ---------------------------------------------------------------------------
// Matchings and resolutions

inline VerifyResult verify_rsk(int max_n = 5) {
    std::size_t total = 0;
    for (int n = 1; n <= max_n; ++n)
        for (auto& m : enumerate_tc(n)) {
            ++total;
            if (phi_rsk(m) != phi_resolution(m)) return counterexample(m.to_string());
        }
    return verified(std::to_string(total) + " matchings, n<=" + std::to_string(max_n));
}

inline VerifyResult verify_maxres(int n = 4) {
    auto tc = enumerate_tc(n);
    for (auto& m : tc)
        if (!max_resolution_check(m)) return counterexample(m.to_string());
    return verified(std::to_string(tc.size()) + " matchings × all resolutions at n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Alpha and the Bush basis

inline VerifyResult verify_confluence(int n = 3, int trials = 100, int random_graphs = 200, std::uint64_t seed = 1) {
    auto tc = enumerate_tc(n);
    std::vector<VerifyResult> parts(tc.size());
    std::vector<std::size_t> counts(tc.size());
    parallel_for(tc.size(), [&](std::size_t i) {
        auto g = network_of_matching(tc[i]);
        auto hs = enumerate_double_groves(g);
        counts[i] = hs.size();
        for (std::size_t j = 0; j < hs.size(); ++j)
            if (!alpha_confluence_check(realize(g, hs[j]), trials, seed + 7919 * i + j)) {
                parts[i] = counterexample("double grove " + std::to_string(j) + " of Gamma(" + tc[i].to_string() + ")");
                return;
            }
    });
    std::size_t groves = 0;
    for (auto c : counts) groves += c;
    // random multigraphs: a random double grove of a random network with at most 6 edges
    std::vector<VerifyResult> rparts(static_cast<std::size_t>(random_graphs));
    parallel_for(rparts.size(), [&](std::size_t r) {
        std::mt19937_64 rng(seed * 1000003 + r);
        const int m = 3 + static_cast<int>(r % 2);
        auto g = random_network(m, 6, rng);
        auto hs = enumerate_double_groves(g);
        auto h = realize(g, hs[std::uniform_int_distribution<std::size_t>(0, hs.size() - 1)(rng)]);
        if (!alpha_confluence_check(h, trials, rng())) rparts[r] = counterexample("random multigraph #" + std::to_string(r));
    });
    parts.insert(parts.end(), rparts.begin(), rparts.end());
    return first_failure(parts, std::to_string(groves) + " double groves over TC_" + std::to_string(n) + " and " +
                                    std::to_string(random_graphs) + " random multigraphs, " + std::to_string(trials) +
                                    " orders each");
}

inline VerifyResult verify_product_on(const CactusNetwork& g, const std::string& name) {
    auto rep = verify_product_all(g);
    if (!rep.ok) return counterexample(name + " at " + detail::pair_string(*rep.counterexample));
    return verified(std::to_string(rep.pairs_total) + " pairs on " + name);
}

/// --all: every Gamma(xi), xi in TC_n. Otherwise `count` seeded random networks.
inline VerifyResult verify_product(int n, bool all, int count = 20, int max_edges = 5, std::uint64_t seed = 1) {
    const auto pairs = enumerate_ncp(n).size() * enumerate_ncp(n).size();
    std::vector<CactusNetwork> nets;
    std::vector<std::string> names;
    if (all) {
        for (auto& xi : enumerate_tc(n)) {
            nets.push_back(network_of_matching(xi));
            names.push_back("Gamma(" + xi.to_string() + ")");
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < count; ++t) {
            nets.push_back(random_network(n, max_edges, rng));
            names.push_back("random network #" + std::to_string(t));
        }
    }
    std::vector<VerifyResult> parts(nets.size());
    parallel_for(nets.size(), [&](std::size_t i) { parts[i] = verify_product_on(nets[i], names[i]); });
    std::string scope = all ? "all TC_" + std::to_string(n) : std::to_string(count) + " random networks";
    return first_failure(parts, std::to_string(pairs) + " pairs × " + scope);
}

inline VerifyResult verify_a_coefficients(int n = 4) {
    auto tc = enumerate_tc(n);
    auto pairs = partition_pairs(n);
    std::vector<VerifyResult> parts(tc.size());
    parallel_for(tc.size(), [&](std::size_t i) {
        auto table = a_table(tc[i]);
        for (auto& p : pairs) {
            auto it = table.find(p);
            Int fast = it == table.end() ? Int(0) : it->second;
            if (fast != a_coeff_oracle(tc[i], p.first, p.second)) {
                parts[i] = counterexample("xi=" + tc[i].to_string() + " pair " + detail::pair_string(p));
                return;
            }
        }
    });
    return first_failure(parts, std::to_string(tc.size()) + " matchings × " + std::to_string(pairs.size()) + " pairs");
}

inline VerifyResult verify_lift(int n = 3, int samples = 5, std::uint64_t seed = 1) {
    auto tc = tc_by_crossings(n);
    for (auto& xi : tc) {
        auto g = network_of_matching(xi);
        auto B = bush_values(g);
        const auto cx = crossings(xi).size();
        for (auto& mu : tc) {
            auto it = B.find(mu);
            const bool zero = it == B.end() || it->second.is_zero();
            if (mu == xi) {
                if (zero || !(it->second == network_weight(g)))
                    return counterexample("B_xi(Gamma(xi)) != wt for xi=" + xi.to_string());
            } else if (cx <= crossings(mu).size() && !zero) {
                return counterexample("B_" + mu.to_string() + "(Gamma(" + xi.to_string() + ")) != 0");
            }
        }
    }
    auto lift = lift_bush(n);
    if (lift.rank != static_cast<int>(tc.size()))
        return counterexample("a-matrix rank " + std::to_string(lift.rank) + " != " + std::to_string(tc.size()));
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        auto g = random_network(n, 6, rng);
        assign_random_weights(g, rng);
        auto pt = weight_point(g);
        auto L = measurement_values(g);
        auto B = bush_values(g);
        for (std::size_t r = 0; r < lift.rows.size(); ++r) {
            Rat lhs = 0;
            if (auto it = B.find(lift.rows[r]); it != B.end()) lhs = it->second.eval(pt);
            Rat rhs = 0;
            for (std::size_t j = 0; j < lift.pivots.size(); ++j) {
                auto& p = lift.all_columns[lift.pivots[j]];
                auto a = L.find(p.first), b = L.find(p.second);
                if (a != L.end() && b != L.end()) rhs += lift.coeff[r][j] * a->second * b->second;
            }
            if (lhs != rhs) return counterexample("lifted B_" + lift.rows[r].to_string() + " on sample " + std::to_string(s));
        }
    }
    return verified("triangularity over TC_" + std::to_string(n) + ", rank " + std::to_string(lift.rank) + ", lift checked on " +
                    std::to_string(samples) + " networks");
}

// ---------------------------------------------------------------------------
// Immanants

inline std::vector<IndexSet> all_index_sets(int n) {
    std::vector<std::vector<int>> subs;
    detail::k_subsets(2 * n, n - 1, subs);
    for (auto& s : subs)
        for (auto& x : s) ++x;
    return subs;
}

/// --all: every ordered (I, J). Otherwise `count` seeded random pairs.
inline VerifyResult verify_delta_products(int n, bool all, int count = 200, std::uint64_t seed = 1) {
    ImmanantContext ctx(n, BetaRule::split_roots);
    auto sets = all_index_sets(n);
    std::vector<std::pair<IndexSet, IndexSet>> pairs;
    if (all) {
        for (auto& I : sets)
            for (auto& J : sets) pairs.emplace_back(I, J);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
        for (int t = 0; t < count; ++t) pairs.emplace_back(sets[pick(rng)], sets[pick(rng)]);
    }
    std::vector<VerifyResult> parts(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i) {
        if (!verify_delta_product(ctx, pairs[i].first, pairs[i].second).ok)
            parts[i] = counterexample("I=" + to_string(pairs[i].first) + " J=" + to_string(pairs[i].second));
    });
    return first_failure(parts, std::to_string(pairs.size()) + " (I,J) pairs at n=" + std::to_string(n));
}

inline std::vector<std::map<NoncrossingPartition, Rat>> sample_measurements(int n, int count, std::uint64_t seed, int max_edges = 8) {
    std::mt19937_64 rng(seed);
    std::vector<std::map<NoncrossingPartition, Rat>> out;
    for (int t = 0; t < count; ++t) {
        auto g = random_network(n, max_edges, rng);
        assign_random_weights(g, rng);
        out.push_back(measurement_values(g));
    }
    return out;
}

inline VerifyResult verify_plucker(int n, int networks = 20, std::uint64_t seed = 1) {
    auto vals = sample_measurements(n, networks, seed);
    auto sets = all_index_sets(n);
    std::size_t forms = 0;
    for (auto& I : sets)
        for (auto& J : sets)
            for (int k = 1; k < n - 1; ++k) {
                auto r = plucker_relation(I, J, k, n);
                ++forms;
                for (std::size_t s = 0; s < vals.size(); ++s)
                    if (evaluate(r, vals[s]) != 0)
                        return counterexample("Pluecker I=" + to_string(I) + " J=" + to_string(J) + " k=" + std::to_string(k) +
                                              " on sample " + std::to_string(s));
            }
    for (auto& [P, Q] : noncomparable_pairs(n)) {
        auto r = relation(P, Q);
        ++forms;
        for (std::size_t s = 0; s < vals.size(); ++s)
            if (evaluate(r, vals[s]) != 0)
                return counterexample("r_{P,Q} with P=" + P.to_string() + " Q=" + Q.to_string() + " on sample " + std::to_string(s));
    }
    return verified(std::to_string(forms) + " relations × " + std::to_string(networks) + " networks at n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Straightening

/// Rank of the standard quadratic monomials evaluated on random weightings of the network
/// whose pairing joins i with i+n (the star for n = 3).
inline int standard_evaluation_rank(int n, int networks, std::uint64_t seed) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, i + n);
    auto top = network_of_arrangement(Arrangement(Matching::from_pairs(n, pairs)));
    std::mt19937_64 rng(seed);
    auto chains = enumerate_chains(n, 2);
    std::vector<std::vector<Rat>> rows(chains.size());
    for (int t = 0; t < networks; ++t) {
        auto g = top;
        assign_random_weights(g, rng);
        auto L = measurement_values(g);
        for (std::size_t c = 0; c < chains.size(); ++c) rows[c].push_back(evaluate(LPolynomial(LMonomial(chains[c])), L));
    }
    return matrix_rank(rows);
}

inline VerifyResult verify_grobner(int max_n = 4, int networks = 20, std::uint64_t seed = 1) {
    std::size_t pairs = 0, monomials = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (auto& [P, Q] : noncomparable_pairs(n)) {
            auto r = relation(P, Q);
            LMonomial lead({Q, P});
            ++pairs;
            if (!(leading_monomial(r) == lead) || r.coeff(lead) != 1)
                return counterexample("leading term of r_{P,Q}, P=" + P.to_string() + " Q=" + Q.to_string());
        }
        auto vals = sample_measurements(n, 3, seed + n);
        auto paths = enumerate_dyck(n);
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = i; j < paths.size(); ++j) {
                LMonomial m({paths[i], paths[j]});
                auto res = straighten_monomial(m);
                ++monomials;
                for (auto& [x, c] : res.standard.terms())
                    if (!x.is_standard()) return counterexample("straightening of " + m.to_string() + " left " + x.to_string());
                for (auto& v : vals)
                    if (evaluate(res.standard, v) != evaluate(LPolynomial(m), v))
                        return counterexample("straightening of " + m.to_string() + " changes its value");
            }
    }
    for (int n : {3, 4})
        if (count_standard(n, 2) != dim_formula(n, 2)) return counterexample("standard count at n=" + std::to_string(n));
    const int rank = standard_evaluation_rank(3, networks, seed);
    if (rank != 14) return counterexample("evaluation rank " + std::to_string(rank) + " != 14 at n=3");
    return verified(std::to_string(pairs) + " leading terms, " + std::to_string(monomials) +
                    " quadratics straightened, evaluation rank 14 at n=3");
}

} // namespace grovelab

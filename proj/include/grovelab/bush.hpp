#pragma once

#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "formal_sum.hpp"
#include "grove.hpp"

namespace grovelab {

using MatchingSum = FormalSum<Matching>;

namespace detail {

enum class MoveKind { zero, contract, parallel, degree2, degree3, triangle };

struct AlphaMove {
    MoveKind kind;
    int a = -1, b = -1;
};

/// Applicable moves in priority order (0),(2),(5),(3),(4),(6),(7),(8).
inline std::vector<AlphaMove> alpha_moves(const CactusGraph& g, bool first_only) {
    std::vector<AlphaMove> out;
    auto push = [&](AlphaMove m) {
        out.push_back(m);
        return first_only;
    };
    const auto edges = g.alive_edges();
    const auto verts = g.alive_vertices();
    for (int k : edges)
        if (g.E[k].mult >= 3 && push({MoveKind::zero, k})) return out;
    for (int k : edges)
        if (g.E[k].u == g.E[k].v && push({MoveKind::zero, k})) return out;
    for (int v : verts)
        if (!g.V[v].boundary && g.degree(v) <= 1 && push({MoveKind::zero, v})) return out;
    if (g.has_floating_component() && push({MoveKind::zero})) return out;
    for (int k : edges)
        if (g.E[k].mult == 2 && g.E[k].u != g.E[k].v && push({MoveKind::contract, k})) return out;
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int k : edges) {
        const auto& e = g.E[k];
        if (e.mult == 1 && e.u != e.v) bundles[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(k);
    }
    for (auto& [ends, ks] : bundles) {
        if (ks.size() >= 3 && push({MoveKind::zero, ks[0]})) return out;
        if (ks.size() == 2 && push({MoveKind::parallel, ks[0], ks[1]})) return out;
    }
    auto simple_star = [&](int v, std::size_t deg) {
        const auto& r = g.V[v].rot;
        if (g.V[v].boundary || r.size() != deg) return false;
        std::set<int> nb;
        for (int d : r) {
            if (g.E[d >> 1].mult != 1) return false;
            nb.insert(g.head(d));
        }
        return nb.size() == deg && !nb.count(v);
    };
    for (int v : verts)
        if (simple_star(v, 2) && push({MoveKind::degree2, v})) return out;
    for (int v : verts)
        if (simple_star(v, 3) && push({MoveKind::degree3, v})) return out;
    for (auto& f : g.faces()) {
        if (f.size() != 3) continue;
        try {
            auto t = triangle_darts(g, f.front());
            bool simple = std::all_of(t.begin(), t.end(), [&](int x) { return g.E[x >> 1].mult == 1; });
            if (simple && push({MoveKind::triangle, f.front()})) return out;
        } catch (const InputError&) {
        }
    }
    return out;
}

/// Weighted successor states of a non-zero move.
inline std::vector<std::pair<Int, CactusGraph>> apply_alpha_move(const CactusGraph& g, const AlphaMove& m) {
    std::vector<std::pair<Int, CactusGraph>> out;
    switch (m.kind) {
    case MoveKind::zero: break;
    case MoveKind::contract: {
        CactusGraph h = g;
        h.contract_edge(m.a);
        out.emplace_back(1, std::move(h));
        break;
    }
    case MoveKind::parallel: {
        CactusGraph h = g;
        h.delete_edge(m.b);
        h.contract_edge(m.a);
        out.emplace_back(2, std::move(h));
        break;
    }
    case MoveKind::degree2: {
        CactusGraph h = g;
        h.remove_vertex_with_edges(m.a);
        out.emplace_back(2, std::move(h));
        break;
    }
    case MoveKind::degree3: {
        const auto d = g.V[m.a].rot;
        for (int i = 0; i < 3; ++i) {
            CactusGraph h = g;
            const int d1 = d[(i + 1) % 3], d2 = d[(i + 2) % 3];
            const int k = h.add_edge("", h.head(d1), h.head(d2));
            h.delete_edge(d[i] >> 1);
            h.replace_in_rotation(CactusGraph::rev(d1), {2 * k});
            h.replace_in_rotation(CactusGraph::rev(d2), {2 * k + 1});
            h.E[d1 >> 1].alive = h.E[d2 >> 1].alive = false;
            h.V[m.a].rot.clear();
            h.V[m.a].alive = false;
            out.emplace_back(1, std::move(h));
        }
        break;
    }
    case MoveKind::triangle: {
        const auto f = triangle_darts(g, m.a);
        for (int i = 0; i < 3; ++i) {
            CactusGraph h = g;
            h.delete_edge(f[(i + 2) % 3] >> 1);
            h.contract_edge(f[i] >> 1);
            out.emplace_back(1, std::move(h));
        }
        break;
    }
    }
    return out;
}

inline MatchingSum alpha_terminal(const CactusGraph& g) {
    if (!g.is_lensless()) throw InternalError("alpha reached an irreducible state that is not lensless");
    auto xi = g.medial_pairing();
    if (!is_three_noncrossing(xi)) throw InternalError("alpha reached a state whose pairing is not 3-noncrossing");
    return MatchingSum(xi);
}

inline std::string code_key(const std::vector<int>& code) {
    return std::string(reinterpret_cast<const char*>(code.data()), code.size() * sizeof(int));
}

} // namespace detail

/// Deterministic evaluation of alpha with a memo keyed by the rooted-map code.
class AlphaEvaluator {
public:
    MatchingSum operator()(const CactusGraph& g) {
        auto moves = detail::alpha_moves(g, true);
        if (moves.empty()) return detail::alpha_terminal(g);
        if (moves.front().kind == detail::MoveKind::zero) return {};
        auto key = detail::code_key(g.canonical_code());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        MatchingSum total;
        for (auto& [c, h] : detail::apply_alpha_move(g, moves.front())) total += (*this)(h) * c;
        memo_.emplace(std::move(key), total);
        return total;
    }
    std::size_t memo_size() const { return memo_.size(); }

private:
    std::unordered_map<std::string, MatchingSum> memo_;
};

inline MatchingSum alpha(const CactusGraph& g) { return AlphaEvaluator()(g); }

/// Alpha with a uniformly random applicable move at every step, without memo.
template <class Rng>
MatchingSum alpha_random(const CactusGraph& g, Rng& rng) {
    auto moves = detail::alpha_moves(g, false);
    if (moves.empty()) return detail::alpha_terminal(g);
    const auto& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    MatchingSum total;
    for (auto& [c, h] : detail::apply_alpha_move(g, m)) total += alpha_random(h, rng) * c;
    return total;
}

inline bool alpha_confluence_check(const CactusGraph& g, int trials, std::uint64_t seed = 1) {
    if (trials < 2) throw InputError("confluence check needs at least 2 trials");
    std::mt19937_64 rng(seed);
    const auto reference = alpha(g);
    for (int t = 0; t < trials; ++t)
        if (!(alpha_random(g, rng) == reference)) return false;
    return true;
}

/// B_xi(G) for every xi in the support, from all 3^#edges double groves.
inline std::map<Matching, MultiPoly> bush_values(const CactusNetwork& g, AlphaEvaluator& eval) {
    std::map<Matching, MultiPoly> out;
    for (auto& h : enumerate_double_groves(g)) {
        auto a = eval(realize(g, h));
        if (a.is_zero()) continue;
        auto w = double_grove_weight(g, h);
        for (auto& [xi, c] : a.terms()) out[xi] += w * c;
    }
    return out;
}

inline std::map<Matching, MultiPoly> bush_values(const CactusNetwork& g) {
    AlphaEvaluator eval;
    return bush_values(g, eval);
}

inline MultiPoly bush_value(const CactusNetwork& g, const Matching& xi) {
    if (xi.n() != g.n) throw InputError("matching size does not match the network");
    if (!is_three_noncrossing(xi)) throw InputError("matching " + xi.to_string() + " is not 3-noncrossing");
    auto all = bush_values(g);
    auto it = all.find(xi);
    return it == all.end() ? MultiPoly() : it->second;
}

// ---------------------------------------------------------------------------
// Coefficients a_{xi,(sigma,sigma')}

using PartitionPair = std::pair<NoncrossingPartition, NoncrossingPartition>;

/// All nonzero a_{xi,(s,s')}: valid opposite loopless resolutions, grouped by partitions.
inline std::map<PartitionPair, Int> a_table(const Matching& xi) {
    ArcDiagram diagram(xi);
    const std::size_t k = diagram.crossing_list().size();
    if (k > 24) throw InputError("too many crossings");
    std::map<PartitionPair, Int> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        ResolutionVector v(k), w(k);
        for (std::size_t q = 0; q < k; ++q) {
            v[q] = (mask >> q) & 1;
            w[q] = 1 - v[q];
        }
        auto [m1, l1] = diagram.resolve(v);
        if (l1) continue;
        auto [m2, l2] = diagram.resolve(w);
        if (l2) continue;
        out[{partition_of_matching(m1), partition_of_matching(m2)}] += 1;
    }
    return out;
}

inline Int a_coeff(const Matching& xi, const NoncrossingPartition& s1, const NoncrossingPartition& s2) {
    auto t = a_table(xi);
    auto it = t.find({s1, s2});
    return it == t.end() ? Int(0) : it->second;
}

inline Int a_coeff_oracle(const Matching& xi, const NoncrossingPartition& s1, const NoncrossingPartition& s2) {
    return split_count(network_of_matching(xi), s1, s2);
}

// ---------------------------------------------------------------------------
// Product identity L_s L_s' = sum_xi a B_xi

struct ProductReport {
    bool ok = true;
    std::size_t pairs_total = 0;   ///< all (s,s') over NP_n
    std::size_t pairs_nonzero = 0; ///< pairs where either side could be nonzero, all compared
    std::optional<PartitionPair> counterexample;
};

/// Checks the identity for every pair. Pairs outside NZ x NZ and outside every a-table
/// have both sides identically zero, so only the remaining pairs are expanded.
inline ProductReport verify_product_all(const CactusNetwork& g, AlphaEvaluator& eval) {
    ProductReport rep;
    const auto L = all_measurements(g);
    const auto B = bush_values(g, eval);
    std::map<PartitionPair, MultiPoly> rhs;
    for (auto& [xi, b] : B)
        for (auto& [pair, c] : a_table(xi)) rhs[pair] += b * c;
    std::set<PartitionPair> pairs;
    for (auto& [p, v] : rhs) pairs.insert(p);
    for (auto& [s1, l1] : L)
        for (auto& [s2, l2] : L) pairs.insert({s1, s2});
    const auto ncp = enumerate_ncp(g.n).size();
    rep.pairs_total = ncp * ncp;
    rep.pairs_nonzero = pairs.size();
    for (auto& p : pairs) {
        MultiPoly lhs;
        auto i1 = L.find(p.first), i2 = L.find(p.second);
        if (i1 != L.end() && i2 != L.end()) lhs = i1->second * i2->second;
        auto ir = rhs.find(p);
        MultiPoly r = ir == rhs.end() ? MultiPoly() : ir->second;
        if (!(lhs == r)) {
            rep.ok = false;
            rep.counterexample = p;
            return rep;
        }
    }
    return rep;
}

inline ProductReport verify_product_all(const CactusNetwork& g) {
    AlphaEvaluator eval;
    return verify_product_all(g, eval);
}

inline bool verify_product(const CactusNetwork& g, const NoncrossingPartition& s1, const NoncrossingPartition& s2) {
    auto lhs = grove_measurement(g, s1) * grove_measurement(g, s2);
    MultiPoly rhs;
    for (auto& [xi, b] : bush_values(g)) rhs += b * a_coeff(xi, s1, s2);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Lift of B_xi to quadratic monomials in the L_sigma

struct LiftedBush {
    std::vector<Matching> rows;             ///< TC_n by (#crossings, partner array)
    std::vector<PartitionPair> all_columns; ///< NP_n x NP_n by canonical strings
    std::vector<int> pivots;                ///< indices into all_columns
    int rank = 0;
    std::vector<std::vector<Rat>> coeff;    ///< coeff[row][j] multiplies L_s L_s' of pivot j
    std::vector<std::vector<Int>> a_matrix; ///< rows x all_columns
};

inline std::vector<Matching> tc_by_crossings(int n) {
    auto tc = enumerate_tc(n);
    std::stable_sort(tc.begin(), tc.end(), [](const Matching& x, const Matching& y) {
        auto cx = crossings(x).size(), cy = crossings(y).size();
        return cx != cy ? cx < cy : x < y;
    });
    return tc;
}

inline std::vector<PartitionPair> partition_pairs(int n) {
    auto ps = enumerate_ncp(n);
    std::sort(ps.begin(), ps.end(), [](auto& a, auto& b) { return a.to_string() < b.to_string(); });
    std::vector<PartitionPair> out;
    for (auto& a : ps)
        for (auto& b : ps) out.emplace_back(a, b);
    return out;
}

namespace detail {

/// Inverts a square rational matrix; throws InternalError when singular.
inline std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
    const std::size_t k = m.size();
    std::vector<std::vector<Rat>> inv(k, std::vector<Rat>(k, 0));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && m[p][c] == 0) ++p;
        if (p == k) throw InternalError("singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = m[c][c];
        for (std::size_t j = 0; j < k; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (std::size_t j = 0; j < k; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace detail

inline LiftedBush lift_bush(int n) {
    if (n < 1 || n > 4) throw InputError("lift_bush supports 1 <= n <= 4");
    LiftedBush out;
    out.rows = tc_by_crossings(n);
    out.all_columns = partition_pairs(n);
    std::map<PartitionPair, std::size_t> col_index;
    for (std::size_t j = 0; j < out.all_columns.size(); ++j) col_index[out.all_columns[j]] = j;
    const std::size_t R = out.rows.size();
    out.a_matrix.assign(R, std::vector<Int>(out.all_columns.size(), 0));
    for (std::size_t i = 0; i < R; ++i)
        for (auto& [p, c] : a_table(out.rows[i])) out.a_matrix[i][col_index.at(p)] = c;
    // fraction-free elimination over columns, keeping the earliest independent ones
    std::vector<std::vector<Int>> basis; // reduced column vectors with their pivot row
    std::vector<std::size_t> pivot_row;
    for (std::size_t j = 0; j < out.all_columns.size() && basis.size() < R; ++j) {
        std::vector<Int> col(R);
        for (std::size_t i = 0; i < R; ++i) col[i] = out.a_matrix[i][j];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Int& f = col[pivot_row[b]];
            if (f == 0) continue;
            const Int p = basis[b][pivot_row[b]];
            for (std::size_t i = 0; i < R; ++i) col[i] = col[i] * p - basis[b][i] * f;
            Int g = 0;
            for (auto& x : col) g = gcd(g, x);
            if (g > 1)
                for (auto& x : col) x /= g;
        }
        std::size_t pr = 0;
        while (pr < R && col[pr] == 0) ++pr;
        if (pr == R) continue;
        basis.push_back(col);
        pivot_row.push_back(pr);
        out.pivots.push_back(static_cast<int>(j));
    }
    out.rank = static_cast<int>(out.pivots.size());
    if (out.rank != static_cast<int>(R)) throw InternalError("a-matrix is rank deficient");
    // products p_j = sum_xi a[xi][j] B_xi, so B = (M^T)^{-1} p
    std::vector<std::vector<Rat>> mt(R, std::vector<Rat>(R));
    for (std::size_t j = 0; j < R; ++j)
        for (std::size_t i = 0; i < R; ++i) mt[j][i] = Rat(out.a_matrix[i][out.pivots[j]]);
    out.coeff = detail::invert(mt);
    return out;
}

} // namespace grovelab

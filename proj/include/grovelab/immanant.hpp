#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bush.hpp"

namespace grovelab {

/// Sorted 1-based index multiset, as used for Delta_I.
using IndexSet = std::vector<int>;

inline std::string to_string(const IndexSet& I) {
    std::string s = "{";
    for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
    return s + "}";
}

inline IndexSet parse_index_set(std::string_view src) {
    std::string s = detail::strip(src);
    if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    IndexSet out;
    if (detail::strip(s).empty()) return out;
    for (auto& tok : detail::split(s, ',')) out.push_back(detail::parse_positive(tok));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Concordance and Delta_I

/// Every part of sigma (on odd positions) and of its dual (on even positions) misses I exactly once.
inline bool concordant(const IndexSet& I, const NoncrossingPartition& sigma) {
    const int n = sigma.n();
    if (static_cast<int>(I.size()) != n - 1) throw InputError("index set must have n-1 elements");
    std::set<int> in(I.begin(), I.end());
    for (int x : I)
        if (x < 1 || x > 2 * n) throw InputError("index out of range");
    auto check = [&](const NoncrossingPartition& p, int offset) {
        for (auto& part : p.parts()) {
            int missing = 0;
            for (int i : part) missing += !in.count(2 * i + 1 + offset);
            if (missing != 1) return false;
        }
        return true;
    };
    return check(sigma, 0) && check(dual_partition(sigma), 1);
}

inline std::vector<NoncrossingPartition> concordant_set(const IndexSet& I, int n) {
    if (static_cast<int>(I.size()) != n - 1) throw InputError("index set must have n-1 elements");
    std::vector<NoncrossingPartition> out;
    for (auto& s : enumerate_ncp(n))
        if (concordant(I, s)) out.push_back(s);
    return out;
}

using PartitionSum = FormalSum<NoncrossingPartition>;

/// Delta_I as a sum of L_sigma; zero when I has a repeated entry.
inline PartitionSum delta(IndexSet I, int n) {
    std::sort(I.begin(), I.end());
    if (std::adjacent_find(I.begin(), I.end()) != I.end()) return {};
    PartitionSum out;
    for (auto& s : concordant_set(I, n)) out.add(s, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Partial noncrossing matchings and beta

struct PartialNCMatching {
    int n = 0;
    std::vector<std::pair<int, int>> tau; ///< 0-based, sorted, a < b
    std::vector<int> T;                   ///< 0-based, sorted

    auto operator<=>(const PartialNCMatching&) const = default;

    std::string to_string() const {
        const bool wide = 2 * n >= 10;
        std::string s = "tau=";
        for (std::size_t i = 0; i < tau.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(tau[i].first + 1) + (wide ? "-" : "") + std::to_string(tau[i].second + 1);
        }
        s += ";T=";
        for (std::size_t i = 0; i < T.size(); ++i) s += (i ? "," : "") + std::to_string(T[i] + 1);
        return s;
    }

    static PartialNCMatching parse(std::string_view src, int n) {
        PartialNCMatching p;
        p.n = n;
        auto halves = detail::split(src, ';');
        if (halves.size() != 2 || detail::strip(halves[0]).rfind("tau=", 0) != 0 || detail::strip(halves[1]).rfind("T=", 0) != 0)
            throw InputError("expected 'tau=...;T=...'");
        std::string ts = detail::strip(halves[0]).substr(4), Ts = detail::strip(halves[1]).substr(2);
        if (!ts.empty())
            for (auto& tok : detail::split(ts, ',')) {
                auto t = detail::strip(tok);
                int a, b;
                if (auto dash = t.find('-'); dash != std::string::npos) {
                    a = detail::parse_positive(t.substr(0, dash));
                    b = detail::parse_positive(t.substr(dash + 1));
                } else {
                    if (t.size() != 2) throw InputError("pair '" + t + "' needs a dash");
                    a = t[0] - '0';
                    b = t[1] - '0';
                }
                p.tau.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
            }
        if (!Ts.empty())
            for (auto& tok : detail::split(Ts, ',')) p.T.push_back(detail::parse_positive(tok) - 1);
        std::sort(p.tau.begin(), p.tau.end());
        std::sort(p.T.begin(), p.T.end());
        p.validate();
        return p;
    }

    void validate() const {
        std::set<int> used;
        for (auto [a, b] : tau) {
            if (a < 0 || b >= 2 * n || a == b || !used.insert(a).second || !used.insert(b).second)
                throw InputError("invalid partial matching");
        }
        for (int x : T)
            if (x < 0 || x >= 2 * n || !used.insert(x).second) throw InputError("invalid partial matching");
        for (auto [a, b] : tau)
            for (auto [c, d] : tau)
                if (a < c && c < b && b < d) throw InputError("partial matching is crossing");
        if (2 * tau.size() + 2 * T.size() != static_cast<std::size_t>(2 * n - 2))
            throw InputError("partial matching has the wrong size");
    }
};

using PartialSum = FormalSum<PartialNCMatching>;

/// How an unselected boundary block contributes to (tau, T).
enum class BetaRule {
    single_root, ///< drop one element j, the rest goes to T
    split_roots  ///< additionally: a pair (j, j') goes to tau, the rest to T
};

/// N(xi): regions of the semicircle picture as black vertices, crossings as white ones.
class BipartiteN {
public:
    explicit BipartiteN(const Matching& xi, BetaRule rule = BetaRule::single_root) : xi_(xi), A_(xi), rule_(rule) {
        for (int f = 0; f < A_.num_faces(); ++f) {
            if (f == A_.lower_face()) continue;
            index_[f] = static_cast<int>(regions_.size());
            Region r;
            for (int p : A_.segments_of_face(f)) r.block.push_back(p); // boundary vertex p+1
            r.white = A_.white(f);
            regions_.push_back(r);
        }
        for (int q = 0; q < A_.num_crossings(); ++q) {
            std::array<int, 2> w{-1, -1}, b{-1, -1};
            int nw = 0, nb = 0;
            for (int d : A_.crossing_darts(q)) {
                int f = index_.at(A_.face_of(d));
                if (regions_[f].white) w[nw++] = f;
                else b[nb++] = f;
            }
            white_.push_back(w);
            black_.push_back(b);
        }
    }

    struct Region {
        std::vector<int> block; ///< 0-based boundary vertices; empty for interior regions
        bool white = false;
    };

    struct Selection {
        std::vector<std::array<int, 2>> edges; ///< per crossing: chosen white region, chosen black region
        int cycles = 0;
        PartialSum terms; ///< all (tau,T) from representative choices, each with weight 1
    };

    int n() const { return xi_.n(); }
    int num_crossings() const { return static_cast<int>(white_.size()); }
    const std::vector<Region>& regions() const { return regions_; }

    /// Calls f(selection) for every valid half-edge selection.
    template <class F>
    void for_each_selection(F&& f) const {
        const int X = num_crossings();
        if (X > 12) throw InputError("too many crossings for selection enumeration");
        const int R = static_cast<int>(regions_.size());
        std::vector<int> deg(R);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * X)); ++mask) {
            std::fill(deg.begin(), deg.end(), 0);
            Selection s;
            s.edges.resize(X);
            for (int q = 0; q < X; ++q) {
                s.edges[q] = {white_[q][(mask >> (2 * q)) & 1], black_[q][(mask >> (2 * q + 1)) & 1]};
                ++deg[s.edges[q][0]];
                ++deg[s.edges[q][1]];
            }
            bool ok = true;
            for (int r = 0; r < R && ok; ++r)
                ok = regions_[r].block.empty() ? deg[r] == 2 : deg[r] <= 2;
            if (!ok) continue;
            decompose(s, deg);
            f(s);
        }
    }

private:
    void decompose(Selection& s, const std::vector<int>& deg) const {
        const int X = num_crossings(), R = static_cast<int>(regions_.size());
        // node ids: regions 0..R-1, crossings R..R+X-1
        std::vector<std::vector<int>> adj(R + X);
        for (int q = 0; q < X; ++q)
            for (int r : s.edges[q]) {
                adj[R + q].push_back(r);
                adj[r].push_back(R + q);
            }
        std::vector<char> seen(R + X, 0);
        std::vector<std::pair<int, int>> paths; // pairs of region endpoints
        for (int r = 0; r < R; ++r) {
            if (deg[r] != 1 || seen[r]) continue;
            int prev = -1, cur = r;
            for (;;) {
                seen[cur] = 1;
                int next = -1;
                for (int x : adj[cur])
                    if (x != prev && !seen[x]) next = x;
                if (next < 0) break;
                prev = cur;
                cur = next;
            }
            if (cur >= R || deg[cur] != 1) throw InternalError("selection path does not end in a boundary block");
            paths.emplace_back(r, cur);
        }
        s.cycles = 0;
        for (int v = 0; v < R + X; ++v) {
            if (seen[v] || adj[v].empty()) continue;
            ++s.cycles;
            std::vector<int> stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
        }
        // representative choices: degree-0 blocks drop one element, paths pair one element of each end
        struct Partial {
            std::vector<std::pair<int, int>> tau;
            std::vector<int> T;
        };
        std::vector<Partial> acc{Partial{}};
        auto extend = [&](auto&& gen) {
            std::vector<Partial> next;
            for (auto& p : acc) gen(p, next);
            acc.swap(next);
        };
        for (int r = 0; r < R; ++r) {
            const auto& z = regions_[r].block;
            if (z.empty()) continue;
            if (deg[r] == 2) {
                for (auto& p : acc) p.T.insert(p.T.end(), z.begin(), z.end());
            } else if (deg[r] == 0) {
                extend([&](const Partial& p, std::vector<Partial>& out) {
                    for (int j : z) {
                        Partial q = p;
                        for (int x : z)
                            if (x != j) q.T.push_back(x);
                        out.push_back(q);
                    }
                    if (rule_ != BetaRule::split_roots) return;
                    for (std::size_t a = 0; a < z.size(); ++a)
                        for (std::size_t b = a + 1; b < z.size(); ++b) {
                            Partial q = p;
                            q.tau.emplace_back(std::min(z[a], z[b]), std::max(z[a], z[b]));
                            for (int x : z)
                                if (x != z[a] && x != z[b]) q.T.push_back(x);
                            out.push_back(q);
                        }
                });
            }
        }
        for (auto [r1, r2] : paths) {
            const auto &z1 = regions_[r1].block, &z2 = regions_[r2].block;
            extend([&](const Partial& p, std::vector<Partial>& out) {
                for (int j : z1)
                    for (int k : z2) {
                        Partial q = p;
                        q.tau.emplace_back(std::min(j, k), std::max(j, k));
                        for (int x : z1)
                            if (x != j) q.T.push_back(x);
                        for (int x : z2)
                            if (x != k) q.T.push_back(x);
                        out.push_back(q);
                    }
            });
        }
        s.terms = PartialSum();
        for (auto& p : acc) {
            PartialNCMatching m;
            m.n = n();
            m.tau = p.tau;
            m.T = p.T;
            std::sort(m.tau.begin(), m.tau.end());
            std::sort(m.T.begin(), m.T.end());
            s.terms.add(m, 1);
        }
    }

    Matching xi_;
    Arrangement A_;
    BetaRule rule_;
    std::map<int, int> index_;
    std::vector<Region> regions_;
    std::vector<std::array<int, 2>> white_, black_;
};

inline PartialSum beta(const Matching& xi, BetaRule rule = BetaRule::single_root) {
    if (!is_three_noncrossing(xi)) throw InputError("matching " + xi.to_string() + " is not 3-noncrossing");
    BipartiteN N(xi, rule);
    PartialSum out;
    N.for_each_selection([&](const BipartiteN::Selection& s) {
        Int w = 1;
        for (int c = 0; c < s.cycles; ++c) w *= 2;
        out += s.terms * w;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Immanants and the Delta product

/// Per-n cache of a-tables and beta for every xi in TC_n.
class ImmanantContext {
public:
    explicit ImmanantContext(int n, BetaRule rule = BetaRule::single_root) : n_(n), tc_(tc_by_crossings(n)) {
        for (auto& xi : tc_) {
            a_.push_back(a_table(xi));
            beta_.push_back(beta(xi, rule));
        }
    }
    int n() const { return n_; }
    const std::vector<Matching>& tc() const { return tc_; }
    const std::map<PartitionPair, Int>& a(std::size_t i) const { return a_[i]; }
    const PartialSum& beta_of(std::size_t i) const { return beta_[i]; }

    MatchingSum f_immanant(const PartialNCMatching& p) const {
        if (p.n != n_) throw InputError("partial matching size mismatch");
        p.validate();
        MatchingSum out;
        for (std::size_t i = 0; i < tc_.size(); ++i) out.add(tc_[i], beta_[i].coeff(p));
        return out;
    }

    /// Product of two linear forms in L, expressed in B coordinates.
    MatchingSum product_in_b(const PartitionSum& x, const PartitionSum& y) const {
        MatchingSum out;
        for (std::size_t i = 0; i < tc_.size(); ++i) {
            Int c = 0;
            for (auto& [pair, a] : a_[i]) c += a * x.coeff(pair.first) * y.coeff(pair.second);
            out.add(tc_[i], c);
        }
        return out;
    }

private:
    int n_;
    std::vector<Matching> tc_;
    std::vector<std::map<PartitionPair, Int>> a_;
    std::vector<PartialSum> beta_;
};

inline MatchingSum f_immanant(const PartialNCMatching& p) { return ImmanantContext(p.n).f_immanant(p); }

namespace detail {

/// Noncrossing perfect matchings of sorted points where each pair joins the two sides.
inline void bipartite_nc(const std::vector<int>& pts, const std::set<int>& left,
                         std::vector<std::pair<int, int>>& cur,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pts.empty()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t j = 1; j < pts.size(); j += 2) {
        if (left.count(pts[0]) == left.count(pts[j])) continue;
        std::vector<int> inner(pts.begin() + 1, pts.begin() + j), outer(pts.begin() + j + 1, pts.end());
        std::vector<std::vector<std::pair<int, int>>> ins, outs;
        std::vector<std::pair<int, int>> tmp;
        bipartite_nc(inner, left, tmp, ins);
        tmp.clear();
        bipartite_nc(outer, left, tmp, outs);
        for (auto& a : ins)
            for (auto& b : outs) {
                auto m = cur;
                m.emplace_back(pts[0], pts[j]);
                m.insert(m.end(), a.begin(), a.end());
                m.insert(m.end(), b.begin(), b.end());
                out.push_back(m);
            }
    }
}

} // namespace detail

inline std::vector<PartialNCMatching> compatible_pairs(const IndexSet& I, const IndexSet& J, int n) {
    if (static_cast<int>(I.size()) != n - 1 || static_cast<int>(J.size()) != n - 1)
        throw InputError("index sets must have n-1 elements");
    std::vector<int> common, only_i, only_j;
    std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(common));
    std::set_difference(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(only_i));
    std::set_difference(J.begin(), J.end(), I.begin(), I.end(), std::back_inserter(only_j));
    std::vector<int> pts(only_i);
    pts.insert(pts.end(), only_j.begin(), only_j.end());
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<std::pair<int, int>>> taus;
    std::vector<std::pair<int, int>> cur;
    detail::bipartite_nc(pts, std::set<int>(only_i.begin(), only_i.end()), cur, taus);
    std::vector<PartialNCMatching> out;
    for (auto& tau : taus) {
        PartialNCMatching p;
        p.n = n;
        for (auto [a, b] : tau) p.tau.emplace_back(a - 1, b - 1);
        for (int t : common) p.T.push_back(t - 1);
        std::sort(p.tau.begin(), p.tau.end());
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DeltaProductReport {
    bool ok = true;
    MatchingSum lhs, rhs;
};

inline DeltaProductReport verify_delta_product(const ImmanantContext& ctx, const IndexSet& I, const IndexSet& J) {
    DeltaProductReport rep;
    rep.lhs = ctx.product_in_b(delta(I, ctx.n()), delta(J, ctx.n()));
    for (auto& p : compatible_pairs(I, J, ctx.n())) rep.rhs += ctx.f_immanant(p);
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

inline bool verify_delta_product(const IndexSet& I, const IndexSet& J, int n) {
    return verify_delta_product(ImmanantContext(n), I, J).ok;
}

// ---------------------------------------------------------------------------
// Quadratic forms in the L_sigma

/// Unordered pair of partitions, stored sorted; the key of a quadratic L-monomial.
struct LPair {
    NoncrossingPartition a, b;
    LPair(NoncrossingPartition x, NoncrossingPartition y) : a(std::move(x)), b(std::move(y)) {
        if (b < a) std::swap(a, b);
    }
    auto operator<=>(const LPair&) const = default;
    std::string to_string() const { return a.to_string() + ";" + b.to_string(); }
};

using QuadraticForm = FormalSum<LPair>;

inline QuadraticForm multiply(const PartitionSum& x, const PartitionSum& y) {
    QuadraticForm out;
    for (auto& [s, c] : x.terms())
        for (auto& [t, d] : y.terms()) out.add(LPair(s, t), c * d);
    return out;
}

namespace detail {

inline int inversions(const std::vector<int>& v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j];
    return inv;
}

inline void k_subsets(int m, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < m; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

/// sign * Delta_{I'} Delta_{J'} in L coordinates; sign from sorting both sequences.
inline QuadraticForm signed_delta_product(const std::vector<int>& Ip, const std::vector<int>& Jp, int n) {
    auto si = Ip, sj = Jp;
    std::sort(si.begin(), si.end());
    std::sort(sj.begin(), sj.end());
    auto q = multiply(delta(si, n), delta(sj, n));
    if ((inversions(Ip) + inversions(Jp)) % 2) q *= Int(-1);
    return q;
}

} // namespace detail

/// Delta_I Delta_J minus the signed sum over exchanges of the last k entries of J with
/// k-subsets of I.
inline QuadraticForm plucker_relation(const IndexSet& I, const IndexSet& J, int k, int n) {
    if (static_cast<int>(I.size()) != n - 1 || static_cast<int>(J.size()) != n - 1)
        throw InputError("index sets must have n-1 elements");
    if (k < 1 || k >= n - 1) throw InputError("need 1 <= k < n-1");
    QuadraticForm r = multiply(delta(I, n), delta(J, n));
    std::vector<std::vector<int>> subs;
    detail::k_subsets(n - 1, k, subs);
    for (auto& sub : subs) {
        auto Ip = I, Jp = J;
        for (int t = 0; t < k; ++t) std::swap(Ip[sub[t]], Jp[n - 1 - k + t]);
        r += detail::signed_delta_product(Ip, Jp, n) * Int(-1);
    }
    return r;
}

inline Rat evaluate(const QuadraticForm& q, const std::map<NoncrossingPartition, Rat>& L) {
    Rat total = 0;
    for (auto& [p, c] : q.terms()) {
        auto a = L.find(p.a), b = L.find(p.b);
        if (a == L.end() || b == L.end()) continue;
        total += Rat(c) * a->second * b->second;
    }
    return total;
}

/// Numeric L_sigma values of a weighted network.
inline std::map<NoncrossingPartition, Rat> measurement_values(const CactusNetwork& g) {
    auto pt = weight_point(g);
    std::map<NoncrossingPartition, Rat> out;
    for (auto& [s, p] : all_measurements(g)) out[s] = p.eval(pt);
    return out;
}

} // namespace grovelab

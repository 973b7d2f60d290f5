#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "catalan.hpp"

namespace grovelab {

/// (a,b,c,d) with a<b<c<d and (a,c),(b,d) in the matching; 0-based.
using Crossing = std::array<int, 4>;
using ResolutionVector = std::vector<std::uint8_t>;

inline std::vector<Crossing> crossings(const Matching& m) {
    std::vector<Crossing> out;
    for (auto [a, c] : m.pairs())
        for (int b = a + 1; b < c; ++b) {
            int d = m.partner(b);
            if (d > c) out.push_back({a, b, c, d});
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// True when no k pairs cross pairwise.
inline bool is_k_noncrossing(const Matching& m, int k) {
    if (k <= 1) return m.size() == 0;
    auto arcs = m.pairs();
    const int r = static_cast<int>(arcs.size());
    auto cross = [&](int i, int j) {
        auto [a, c] = arcs[i];
        auto [b, d] = arcs[j];
        return (a < b && b < c && c < d) || (b < a && a < d && d < c);
    };
    std::vector<int> clique;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(clique.size()) == k) return true;
        for (int i = from; i < r; ++i) {
            bool ok = true;
            for (int j : clique) ok = ok && cross(i, j);
            if (!ok) continue;
            clique.push_back(i);
            if (self(self, i + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    return !rec(rec, 0);
}

inline bool is_three_noncrossing(const Matching& m) { return is_k_noncrossing(m, 3); }

inline std::vector<Matching> enumerate_tc(int n) {
    std::vector<Matching> out;
    for (auto& m : enumerate_matchings(n))
        if (is_three_noncrossing(m)) out.push_back(m);
    return out;
}

// ---------------------------------------------------------------------------
// RSK reading

namespace detail {

using Tableau = std::vector<std::vector<int>>;

inline void row_insert(Tableau& t, int x) {
    for (auto& row : t) {
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return;
        }
        std::swap(*it, x);
    }
    t.push_back({x});
}

inline void remove_value(Tableau& t, int x) {
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (t[r].empty() || t[r].back() != x) continue;
        if (r + 1 < t.size() && t[r + 1].size() >= t[r].size()) break;
        t[r].pop_back();
        if (t[r].empty()) t.erase(t.begin() + r);
        return;
    }
    throw InternalError("tableau cell is not removable");
}

inline DyckPath path_from_heights(const std::vector<int>& h) {
    std::vector<std::uint8_t> up;
    for (std::size_t j = 1; j < h.size(); ++j) {
        if (h[j] - h[j - 1] == 1) up.push_back(1);
        else if (h[j] - h[j - 1] == -1) up.push_back(0);
        else throw InternalError("height sequence is not a lattice path");
    }
    return DyckPath(std::move(up));
}

} // namespace detail

/// Tableau sequence T_0..T_{2n} (entries 1-based) built right to left.
inline std::vector<detail::Tableau> rsk_tableaux(const Matching& m) {
    const int len = m.size();
    std::vector<detail::Tableau> seq(len + 1);
    detail::Tableau t;
    for (int j = len - 1; j >= 0; --j) {
        if (m.is_left(j)) detail::remove_value(t, j + 1);
        else detail::row_insert(t, m.partner(j) + 1);
        if (t.size() > 2) throw InputError("matching " + m.to_string() + " is not 3-noncrossing");
        seq[j] = t;
    }
    return seq;
}

inline std::pair<DyckPath, DyckPath> phi_rsk(const Matching& m) {
    auto seq = rsk_tableaux(m);
    std::vector<int> lo(seq.size()), hi(seq.size());
    for (std::size_t j = 0; j < seq.size(); ++j) {
        int x = seq[j].size() > 0 ? static_cast<int>(seq[j][0].size()) : 0;
        int y = seq[j].size() > 1 ? static_cast<int>(seq[j][1].size()) : 0;
        lo[j] = x - y;
        hi[j] = x + y;
    }
    return {detail::path_from_heights(lo), detail::path_from_heights(hi)};
}

// ---------------------------------------------------------------------------
// Resolutions in the semicircle drawing

/// Arcs drawn as upper semicircles; crossings ordered along each arc by exact abscissa.
class ArcDiagram {
public:
    explicit ArcDiagram(const Matching& m) : m_(m), cr_(crossings(m)) {
        auto arcs = m.pairs();
        arc_of_.assign(m.size(), -1);
        for (std::size_t k = 0; k < arcs.size(); ++k) arc_of_[arcs[k].first] = arc_of_[arcs[k].second] = static_cast<int>(k);
        on_arc_.assign(arcs.size(), {});
        for (std::size_t q = 0; q < cr_.size(); ++q) {
            on_arc_[arc_of_[cr_[q][0]]].push_back(static_cast<int>(q));
            on_arc_[arc_of_[cr_[q][1]]].push_back(static_cast<int>(q));
        }
        for (auto& list : on_arc_) {
            std::sort(list.begin(), list.end(), [&](int p, int q) { return less(p, q); });
            for (std::size_t t = 1; t < list.size(); ++t)
                if (!less(list[t - 1], list[t]))
                    throw InputError("matching " + m.to_string() + " has concurrent crossings in its drawing");
        }
        base_.assign(arcs.size() + 1, 0);
        for (std::size_t k = 0; k < arcs.size(); ++k) base_[k + 1] = base_[k] + static_cast<int>(on_arc_[k].size()) + 1;
        slot_.assign(cr_.size(), {0, 0});
        for (std::size_t k = 0; k < arcs.size(); ++k)
            for (std::size_t t = 0; t < on_arc_[k].size(); ++t) {
                int q = on_arc_[k][t];
                (arc_of_[cr_[q][0]] == static_cast<int>(k) ? slot_[q].first : slot_[q].second) = static_cast<int>(t);
            }
    }

    const Matching& matching() const { return m_; }
    const std::vector<Crossing>& crossing_list() const { return cr_; }
    /// Crossing indices along arc k from its left endpoint.
    const std::vector<int>& crossings_on_arc(int k) const { return on_arc_[k]; }
    int arc_of(int point) const { return arc_of_[point]; }
    int num_segments() const { return base_.back(); }

    /// Segment of arc k between its (t-1)-th and t-th crossing.
    int segment(int k, int t) const { return base_[k] + t; }
    int left_segment_of_arc_at(int q, bool first_arc) const {
        int k = arc_of_[cr_[q][first_arc ? 0 : 1]];
        return segment(k, first_arc ? slot_[q].first : slot_[q].second);
    }

    /// Returns the resolved boundary matching and the number of closed loops.
    std::pair<Matching, int> resolve(const ResolutionVector& v) const {
        if (v.size() != cr_.size()) throw InputError("resolution vector has the wrong length");
        detail::UnionFind uf(num_segments());
        for (std::size_t q = 0; q < cr_.size(); ++q) {
            int al = left_segment_of_arc_at(static_cast<int>(q), true), ar = al + 1;
            int bl = left_segment_of_arc_at(static_cast<int>(q), false), br = bl + 1;
            if (v[q] == 0) {
                uf.unite(al, bl);
                uf.unite(ar, br);
            } else {
                uf.unite(al, br);
                uf.unite(bl, ar);
            }
        }
        std::vector<int> end_seg(m_.size());
        for (int p = 0; p < m_.size(); ++p) {
            int k = arc_of_[p];
            end_seg[p] = m_.is_left(p) ? segment(k, 0) : segment(k, static_cast<int>(on_arc_[k].size()));
        }
        std::map<int, int> first_point;
        std::vector<int> partner(m_.size(), -1);
        std::vector<std::uint8_t> has_end(num_segments(), 0);
        for (int p = 0; p < m_.size(); ++p) {
            int r = uf.find(end_seg[p]);
            has_end[r] = 1;
            auto it = first_point.find(r);
            if (it == first_point.end()) {
                first_point[r] = p;
            } else {
                partner[p] = it->second;
                partner[it->second] = p;
            }
        }
        int loops = 0;
        for (int s = 0; s < num_segments(); ++s)
            if (uf.find(s) == s && !has_end[s]) ++loops;
        return {Matching(std::move(partner)), loops};
    }

private:
    /// Abscissa of crossing q as a fraction num/den with den > 0.
    std::pair<long long, long long> abscissa(int q) const {
        long long a = cr_[q][0], b = cr_[q][1], c = cr_[q][2], d = cr_[q][3];
        long long num = a * c - b * d, den = (a + c) - (b + d);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return {num, den};
    }
    bool less(int p, int q) const {
        auto [n1, d1] = abscissa(p);
        auto [n2, d2] = abscissa(q);
        return n1 * d2 < n2 * d1;
    }

    Matching m_;
    std::vector<Crossing> cr_;
    std::vector<int> arc_of_;
    std::vector<std::vector<int>> on_arc_;
    std::vector<int> base_;
    std::vector<std::pair<int, int>> slot_;
};

inline std::pair<Matching, int> resolve(const Matching& m, const ResolutionVector& v) {
    return ArcDiagram(m).resolve(v);
}

inline std::pair<DyckPath, DyckPath> phi_resolution(const Matching& m) {
    if (!is_three_noncrossing(m)) throw InputError("matching " + m.to_string() + " is not 3-noncrossing");
    ArcDiagram diagram(m);
    const std::size_t k = diagram.crossing_list().size();
    auto low = diagram.resolve(ResolutionVector(k, 0)).first;
    auto high = diagram.resolve(ResolutionVector(k, 1)).first;
    return {path_of_matching(low), path_of_matching(high)};
}

inline Matching phi_inverse(const DyckPath& p1, const DyckPath& p2) {
    if (p1.semilength() != p2.semilength()) throw InputError("paths of different semilength");
    if (!path_leq(p1, p2)) throw InputError("first path is not below the second");
    if (p1.semilength() > 6) throw InputError("phi_inverse is limited to n <= 6");
    for (auto& m : enumerate_tc(p1.semilength()))
        if (phi_rsk(m) == std::make_pair(p1, p2)) return m;
    throw InternalError("no 3-noncrossing preimage found");
}

/// Every resolution path lies weakly below the all-ones resolution, with equality only there.
inline bool max_resolution_check(const Matching& m) {
    ArcDiagram diagram(m);
    const std::size_t k = diagram.crossing_list().size();
    if (k > 20) throw InputError("too many crossings for an exhaustive check");
    auto top = path_of_matching(diagram.resolve(ResolutionVector(k, 1)).first);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        ResolutionVector v(k);
        for (std::size_t q = 0; q < k; ++q) v[q] = (mask >> q) & 1;
        auto p = path_of_matching(diagram.resolve(v).first);
        auto o = compare(p, top);
        const bool all_ones = mask + 1 == (std::uint64_t{1} << k);
        if (all_ones ? o != PathOrder::equal : o != PathOrder::below) return false;
    }
    return true;
}

} // namespace grovelab

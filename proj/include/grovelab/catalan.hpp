#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace grovelab {

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline int parse_positive(std::string_view s) {
    if (s.empty() || s.size() > 6) throw InputError("bad integer '" + std::string(s) + "'");
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw InputError("bad integer '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
    }
    if (v <= 0) throw InputError("expected a positive integer, got '" + std::string(s) + "'");
    return v;
}

/// Splits "125" into {1,2,5} and "1,12" into {1,12}.
inline std::vector<int> parse_label_list(std::string_view tok) {
    std::string t = strip(tok);
    std::vector<int> out;
    if (t.find(',') != std::string::npos) {
        for (auto& part : split(t, ',')) out.push_back(parse_positive(strip(part)));
    } else {
        for (char c : t) out.push_back(parse_positive(std::string_view(&c, 1)));
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n = 0) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace detail

/// Lattice path of up (1) and down (0) steps that never goes below zero.
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::vector<std::uint8_t> up) : up_(std::move(up)) {
        if (up_.size() % 2) throw InputError("Dyck path has odd length");
        int h = 0;
        for (auto s : up_) {
            h += s ? 1 : -1;
            if (h < 0) throw InputError("Dyck path goes below the axis");
        }
        if (h != 0) throw InputError("Dyck path does not return to the axis");
    }

    static DyckPath parse(std::string_view s) {
        std::vector<std::uint8_t> up;
        for (char c : detail::strip(s)) {
            if (c == 'U' || c == 'u' || c == '1') up.push_back(1);
            else if (c == 'D' || c == 'd' || c == '0') up.push_back(0);
            else throw InputError("bad Dyck step '" + std::string(1, c) + "'");
        }
        if (up.empty()) throw InputError("empty Dyck path");
        return DyckPath(std::move(up));
    }

    int semilength() const { return static_cast<int>(up_.size() / 2); }
    int length() const { return static_cast<int>(up_.size()); }
    bool up(int j) const { return up_[j] != 0; }
    const std::vector<std::uint8_t>& steps() const { return up_; }

    std::vector<int> heights() const {
        std::vector<int> h(up_.size() + 1, 0);
        for (std::size_t j = 0; j < up_.size(); ++j) h[j + 1] = h[j] + (up_[j] ? 1 : -1);
        return h;
    }

    std::string to_string() const {
        std::string s;
        for (auto u : up_) s.push_back(u ? 'U' : 'D');
        return s;
    }

    auto operator<=>(const DyckPath&) const = default;
    bool operator==(const DyckPath&) const = default;

private:
    std::vector<std::uint8_t> up_;
};

/// Perfect matching on 0..2n-1 stored as a partner array.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<int> partner) : p_(std::move(partner)) {
        if (p_.size() % 2) throw InputError("matching on an odd number of points");
        const int m = static_cast<int>(p_.size());
        for (int i = 0; i < m; ++i) {
            if (p_[i] < 0 || p_[i] >= m || p_[i] == i || p_[p_[i]] != i)
                throw InputError("partner array is not a fixed-point-free involution");
        }
    }

    /// Pairs are 0-based.
    static Matching from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<int> p(2 * n, -1);
        for (auto [a, b] : pairs) {
            if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || p[a] != -1 || p[b] != -1 || a == b)
                throw InputError("invalid pair list for a matching");
            p[a] = b;
            p[b] = a;
        }
        if (std::find(p.begin(), p.end(), -1) != p.end())
            throw InputError("pair list does not cover every point");
        return Matching(std::move(p));
    }

    /// Accepts "15|26|34" or "1,4|2,3|5,10"; an optional surrounding "{}" or "()" is ignored.
    static Matching parse(std::string_view s) {
        std::string t = detail::strip(s);
        if (!t.empty() && (t.front() == '{' || t.front() == '(')) t = t.substr(1);
        if (!t.empty() && (t.back() == '}' || t.back() == ')')) t.pop_back();
        if (t.empty()) throw InputError("empty matching");
        std::vector<std::pair<int, int>> pairs;
        for (auto& tok : detail::split(t, '|')) {
            auto v = detail::parse_label_list(tok);
            if (v.size() != 2) throw InputError("matching block '" + tok + "' is not a pair");
            pairs.emplace_back(v[0] - 1, v[1] - 1);
        }
        return from_pairs(static_cast<int>(pairs.size()), pairs);
    }

    int n() const { return static_cast<int>(p_.size() / 2); }
    int size() const { return static_cast<int>(p_.size()); }
    int partner(int i) const { return p_[i]; }
    bool is_left(int i) const { return p_[i] > i; }
    const std::vector<int>& partners() const { return p_; }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < size(); ++i)
            if (p_[i] > i) out.emplace_back(i, p_[i]);
        return out;
    }

    bool is_noncrossing() const {
        for (auto [a, c] : pairs())
            for (int b = a + 1; b < c; ++b)
                if (p_[b] < a || p_[b] > c) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        const bool commas = n() >= 5;
        for (auto [a, b] : pairs()) {
            if (!s.empty()) s += '|';
            s += std::to_string(a + 1);
            if (commas) s += ',';
            s += std::to_string(b + 1);
        }
        return s;
    }

    auto operator<=>(const Matching&) const = default;
    bool operator==(const Matching&) const = default;

private:
    std::vector<int> p_;
};

/// Noncrossing set partition of 0..n-1, stored as a restricted growth string.
class NoncrossingPartition {
public:
    NoncrossingPartition() = default;

    /// Any labelling of blocks; normalized on construction.
    explicit NoncrossingPartition(const std::vector<int>& labels) : b_(normalize(labels)) {
        if (!noncrossing(b_)) throw InputError("partition is crossing");
    }

    static NoncrossingPartition from_parts(int n, const std::vector<std::vector<int>>& parts) {
        std::vector<int> lab(n, -1);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (parts[k].empty()) throw InputError("empty part");
            for (int x : parts[k]) {
                if (x < 0 || x >= n || lab[x] != -1) throw InputError("parts do not partition the ground set");
                lab[x] = static_cast<int>(k);
            }
        }
        if (std::find(lab.begin(), lab.end(), -1) != lab.end()) throw InputError("parts do not cover the ground set");
        return NoncrossingPartition(lab);
    }

    static NoncrossingPartition singletons(int n) {
        std::vector<int> lab(n);
        std::iota(lab.begin(), lab.end(), 0);
        return NoncrossingPartition(lab);
    }

    static NoncrossingPartition one_part(int n) { return NoncrossingPartition(std::vector<int>(n, 0)); }

    /// Accepts "12|3" or "1,2|3"; if n is given, the labels must cover 1..n exactly.
    static NoncrossingPartition parse(std::string_view s, int n = -1) {
        std::string t = detail::strip(s);
        if (!t.empty() && t.front() == '(') t = t.substr(1);
        if (!t.empty() && t.back() == ')') t.pop_back();
        if (t.empty()) throw InputError("empty partition");
        std::vector<std::vector<int>> parts;
        int mx = 0;
        for (auto& tok : detail::split(t, '|')) {
            auto v = detail::parse_label_list(tok);
            if (v.empty()) throw InputError("empty part in '" + std::string(s) + "'");
            for (int& x : v) {
                mx = std::max(mx, x);
                --x;
            }
            parts.push_back(v);
        }
        if (n >= 0 && mx != n) throw InputError("partition labels do not match n=" + std::to_string(n));
        return from_parts(n >= 0 ? n : mx, parts);
    }

    int n() const { return static_cast<int>(b_.size()); }
    int block(int i) const { return b_[i]; }
    const std::vector<int>& blocks() const { return b_; }
    int num_parts() const { return b_.empty() ? 0 : *std::max_element(b_.begin(), b_.end()) + 1; }
    bool same(int i, int j) const { return b_[i] == b_[j]; }

    std::vector<std::vector<int>> parts() const {
        std::vector<std::vector<int>> out(num_parts());
        for (int i = 0; i < n(); ++i) out[b_[i]].push_back(i);
        return out;
    }

    /// True when every part of `finer` lies inside a part of *this.
    bool coarsens(const NoncrossingPartition& finer) const {
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (finer.same(i, j) && !same(i, j)) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        const bool commas = n() >= 10;
        for (auto& part : parts()) {
            if (!s.empty()) s += '|';
            for (std::size_t k = 0; k < part.size(); ++k) {
                if (commas && k) s += ',';
                s += std::to_string(part[k] + 1);
            }
        }
        return s;
    }

    auto operator<=>(const NoncrossingPartition&) const = default;
    bool operator==(const NoncrossingPartition&) const = default;

    static bool noncrossing(const std::vector<int>& lab) {
        const int n = static_cast<int>(lab.size());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (lab[b] == lab[a]) continue;
                for (int c = b + 1; c < n; ++c) {
                    if (lab[c] != lab[a]) continue;
                    for (int d = c + 1; d < n; ++d)
                        if (lab[d] == lab[b]) return false;
                }
            }
        return true;
    }

private:
    static std::vector<int> normalize(const std::vector<int>& lab) {
        std::vector<int> out(lab.size());
        std::vector<std::pair<int, int>> seen;
        for (std::size_t i = 0; i < lab.size(); ++i) {
            auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == lab[i]; });
            if (it == seen.end()) {
                seen.emplace_back(lab[i], static_cast<int>(seen.size()));
                out[i] = seen.back().second;
            } else {
                out[i] = it->second;
            }
        }
        return out;
    }

    std::vector<int> b_;
};

using PathChain = std::vector<DyckPath>;

// ---------------------------------------------------------------------------
// Bijections

inline Matching matching_of_path(const DyckPath& p) {
    std::vector<int> partner(p.length(), -1), stack;
    for (int j = 0; j < p.length(); ++j) {
        if (p.up(j)) {
            stack.push_back(j);
        } else {
            int i = stack.back();
            stack.pop_back();
            partner[i] = j;
            partner[j] = i;
        }
    }
    return Matching(std::move(partner));
}

inline DyckPath path_of_matching(const Matching& m) {
    if (!m.is_noncrossing()) throw InputError("matching " + m.to_string() + " is crossing");
    std::vector<std::uint8_t> up(m.size());
    for (int i = 0; i < m.size(); ++i) up[i] = m.is_left(i) ? 1 : 0;
    return DyckPath(std::move(up));
}

/// Label i sits between points 2i and 2i+1; labels in a common region form a part.
inline NoncrossingPartition partition_of_matching(const Matching& m) {
    if (!m.is_noncrossing()) throw InputError("matching " + m.to_string() + " is crossing");
    std::vector<int> lab(m.n());
    for (int i = 0; i < m.n(); ++i) {
        int inner = -1;
        for (auto [a, b] : m.pairs())
            if (a <= 2 * i && 2 * i + 1 <= b) inner = std::max(inner, a);
        lab[i] = inner;
    }
    return NoncrossingPartition(lab);
}

/// Repeatedly strips the leftmost interval part.
inline Matching matching_of_partition(const NoncrossingPartition& s) {
    const int n = s.n();
    std::vector<int> labels(n), pos(2 * n), partner(2 * n, -1);
    std::iota(labels.begin(), labels.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    while (!labels.empty()) {
        const int m = static_cast<int>(labels.size());
        int start = -1, len = 0;
        for (int a = 0; a < m && start < 0; ++a) {
            const int blk = s.block(labels[a]);
            if (a > 0 && s.block(labels[a - 1]) == blk) continue;
            int k = a;
            while (k < m && s.block(labels[k]) == blk) ++k;
            bool rest = false;
            for (int r = k; r < m; ++r) rest |= s.block(labels[r]) == blk;
            if (!rest) {
                start = a;
                len = k - a;
            }
        }
        if (start < 0) throw InternalError("no interval part in a noncrossing partition");
        auto link = [&](int x, int y) {
            partner[pos[x]] = pos[y];
            partner[pos[y]] = pos[x];
        };
        link(2 * start, 2 * start + 2 * len - 1);
        for (int t = 2 * start + 1; t + 1 < 2 * start + 2 * len - 1; t += 2) link(t, t + 1);
        labels.erase(labels.begin() + start, labels.begin() + start + len);
        pos.erase(pos.begin() + 2 * start, pos.begin() + 2 * start + 2 * len);
    }
    return Matching(std::move(partner));
}

/// Label i is the lattice point after step 2i+1; equal heights not separated by the path share a part.
inline NoncrossingPartition partition_of_path(const DyckPath& p) {
    const int n = p.semilength();
    auto h = p.heights();
    detail::UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        const int hi = h[2 * i + 1];
        for (int x = 2 * i + 2; x <= 2 * n; ++x) {
            if (h[x] < hi) break;
            if (x % 2 == 1 && h[x] == hi) {
                uf.unite(i, (x - 1) / 2);
                break;
            }
        }
    }
    std::vector<int> lab(n);
    for (int i = 0; i < n; ++i) lab[i] = uf.find(i);
    return NoncrossingPartition(lab);
}

namespace detail {
inline void path_of_labels(const NoncrossingPartition& s, const std::vector<int>& labels, std::size_t lo,
                           std::size_t hi, std::vector<std::uint8_t>& out) {
    while (lo < hi) {
        const int blk = s.block(labels[lo]);
        std::vector<std::size_t> members;
        for (std::size_t k = lo; k < hi; ++k)
            if (s.block(labels[k]) == blk) members.push_back(k);
        out.push_back(1);
        for (std::size_t t = 0; t + 1 < members.size(); ++t) {
            out.push_back(1);
            path_of_labels(s, labels, members[t] + 1, members[t + 1], out);
            out.push_back(0);
        }
        out.push_back(0);
        lo = members.back() + 1;
    }
}
} // namespace detail

inline DyckPath path_of_partition(const NoncrossingPartition& s) {
    std::vector<int> labels(s.n());
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<std::uint8_t> up;
    detail::path_of_labels(s, labels, 0, labels.size(), up);
    return DyckPath(std::move(up));
}

/// Dual label i sits between labels i and i+1 (cyclically).
inline NoncrossingPartition dual_partition(const NoncrossingPartition& s) {
    const int n = s.n();
    auto parts = s.parts();
    detail::UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool separated = false;
            for (auto& part : parts) {
                bool in = false, out = false;
                for (int x : part) (x > i && x <= j ? in : out) = true;
                if (in && out) {
                    separated = true;
                    break;
                }
            }
            if (!separated) uf.unite(i, j);
        }
    std::vector<int> lab(n);
    for (int i = 0; i < n; ++i) lab[i] = uf.find(i);
    return NoncrossingPartition(lab);
}

// ---------------------------------------------------------------------------
// Orders

enum class PathOrder { below, above, equal, incomparable };

inline const char* to_string(PathOrder o) {
    switch (o) {
    case PathOrder::below: return "below";
    case PathOrder::above: return "above";
    case PathOrder::equal: return "equal";
    default: return "incomparable";
    }
}

inline PathOrder compare(const DyckPath& p, const DyckPath& q) {
    if (p.semilength() != q.semilength()) throw InputError("paths of different semilength");
    auto hp = p.heights(), hq = q.heights();
    bool le = true, ge = true;
    for (std::size_t j = 0; j < hp.size(); ++j) {
        le &= hp[j] <= hq[j];
        ge &= hp[j] >= hq[j];
    }
    if (le && ge) return PathOrder::equal;
    if (le) return PathOrder::below;
    if (ge) return PathOrder::above;
    return PathOrder::incomparable;
}

inline bool path_leq(const DyckPath& p, const DyckPath& q) {
    auto o = compare(p, q);
    return o == PathOrder::below || o == PathOrder::equal;
}

/// Lexicographic comparison of the up/down vectors.
inline std::strong_ordering lex_compare(const DyckPath& p, const DyckPath& q) {
    if (p.semilength() != q.semilength()) throw InputError("paths of different semilength");
    return p <=> q;
}

// ---------------------------------------------------------------------------
// Catalan subsets (1-based)

inline std::vector<int> catalan_subset(const DyckPath& p) {
    std::vector<int> out;
    for (int j = 1; j < p.length(); ++j)
        if (p.up(j)) out.push_back(j);
    return out;
}

inline bool is_catalan_subset(const std::vector<int>& I, int n) {
    if (static_cast<int>(I.size()) != n - 1) return false;
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (I[i] < 1 || (i && I[i] <= I[i - 1])) return false;
        if (I[i] > 2 * static_cast<int>(i + 1)) return false;
    }
    return true;
}

inline DyckPath path_of_subset(const std::vector<int>& I, int n) {
    if (!is_catalan_subset(I, n)) throw InputError("not a Catalan subset");
    std::vector<std::uint8_t> up(2 * n, 0);
    up[0] = 1;
    for (int a : I) up[a] = 1;
    return DyckPath(std::move(up));
}

// ---------------------------------------------------------------------------
// Enumeration

inline std::vector<DyckPath> enumerate_dyck(int n) {
    if (n < 1) throw InputError("n must be positive");
    std::vector<DyckPath> out;
    std::vector<std::uint8_t> cur;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == n && downs == n) {
            out.emplace_back(cur);
            return;
        }
        if (downs < ups) {
            cur.push_back(0);
            self(self, ups, downs + 1);
            cur.pop_back();
        }
        if (ups < n) {
            cur.push_back(1);
            self(self, ups + 1, downs);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// All (2n-1)!! matchings, ordered lexicographically by partner array.
inline std::vector<Matching> enumerate_matchings(int n) {
    if (n < 1) throw InputError("n must be positive");
    std::vector<Matching> out;
    std::vector<int> p(2 * n, -1);
    auto rec = [&](auto&& self) -> void {
        int i = static_cast<int>(std::find(p.begin(), p.end(), -1) - p.begin());
        if (i == 2 * n) {
            out.emplace_back(p);
            return;
        }
        for (int j = i + 1; j < 2 * n; ++j) {
            if (p[j] != -1) continue;
            p[i] = j;
            p[j] = i;
            self(self);
            p[i] = p[j] = -1;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Matching> enumerate_ncm(int n) {
    std::vector<Matching> out;
    for (auto& p : enumerate_dyck(n)) out.push_back(matching_of_path(p));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<NoncrossingPartition> enumerate_ncp(int n) {
    std::vector<NoncrossingPartition> out;
    for (auto& p : enumerate_dyck(n)) out.push_back(partition_of_path(p));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<PathChain> enumerate_chains(int n, int d) {
    if (d < 0) throw InputError("chain length must be nonnegative");
    auto paths = enumerate_dyck(n);
    std::vector<PathChain> out;
    PathChain cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (auto& p : paths) {
            if (!cur.empty() && !path_leq(cur.back(), p)) continue;
            cur.push_back(p);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline std::string to_string(const PathChain& c) {
    std::string s;
    for (auto& p : c) {
        if (!s.empty()) s += ';';
        s += p.to_string();
    }
    return s;
}

} // namespace grovelab

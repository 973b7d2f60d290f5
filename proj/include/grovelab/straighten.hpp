#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "catalan.hpp"
#include "formal_sum.hpp"
#include "immanant.hpp"

namespace grovelab {

/// Product of L_P over a multiset of Dyck paths, factors kept in lex order.
struct LMonomial {
    std::vector<DyckPath> factors;

    LMonomial() = default;
    explicit LMonomial(std::vector<DyckPath> f) : factors(std::move(f)) { std::sort(factors.begin(), factors.end()); }

    int degree() const { return static_cast<int>(factors.size()); }
    bool is_standard() const {
        for (std::size_t i = 1; i < factors.size(); ++i)
            if (!path_leq(factors[i - 1], factors[i])) return false;
        return true;
    }
    /// First adjacent pair that is not a chain step, or -1.
    int first_noncomparable() const {
        for (std::size_t i = 1; i < factors.size(); ++i)
            if (!path_leq(factors[i - 1], factors[i])) return static_cast<int>(i - 1);
        return -1;
    }
    LMonomial operator*(const LMonomial& o) const {
        auto f = factors;
        f.insert(f.end(), o.factors.begin(), o.factors.end());
        return LMonomial(std::move(f));
    }
    auto operator<=>(const LMonomial&) const = default;
    bool operator==(const LMonomial&) const = default;

    std::string to_string() const {
        std::string s;
        for (auto& p : factors) {
            if (!s.empty()) s += ';';
            s += partition_of_path(p).to_string();
        }
        return s.empty() ? "1" : s;
    }
    static LMonomial parse(std::string_view src, int n) {
        std::vector<DyckPath> f;
        for (auto& tok : detail::split(src, ';')) {
            auto p = NoncrossingPartition::parse(detail::strip(tok));
            if (p.n() != n) throw InputError("partition size does not match n");
            f.push_back(path_of_partition(p));
        }
        return LMonomial(std::move(f));
    }
};

using LPolynomial = FormalSum<LMonomial>;

/// Term order: lower degree first, then compare factors from the largest down.
inline std::strong_ordering monomial_compare(const LMonomial& x, const LMonomial& y) {
    if (x.degree() != y.degree()) return x.degree() <=> y.degree();
    for (int i = x.degree() - 1; i >= 0; --i)
        if (auto c = x.factors[i] <=> y.factors[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

/// Smallest monomial with nonzero coefficient.
inline LMonomial leading_monomial(const LPolynomial& f) {
    if (f.is_zero()) throw InputError("zero polynomial has no leading term");
    const LMonomial* best = nullptr;
    for (auto& [m, c] : f.terms())
        if (!best || monomial_compare(m, *best) < 0) best = &m;
    return *best;
}

inline LPolynomial to_polynomial(const QuadraticForm& q) {
    LPolynomial out;
    for (auto& [pair, c] : q.terms()) out.add(LMonomial({path_of_partition(pair.a), path_of_partition(pair.b)}), c);
    return out;
}

inline LPolynomial operator*(const LPolynomial& f, const LMonomial& m) {
    LPolynomial out;
    for (auto& [x, c] : f.terms()) out.add(x * m, c);
    return out;
}

/// r_{P,Q} for noncomparable P, Q with Q lex-below P.
inline LPolynomial relation(const DyckPath& P, const DyckPath& Q) {
    if (P.semilength() != Q.semilength()) throw InputError("paths of different semilength");
    if (compare(P, Q) != PathOrder::incomparable) throw InputError("relation needs noncomparable paths");
    if (P < Q) throw InputError("relation needs the first path lex-above the second");
    const int n = P.semilength();
    auto I = catalan_subset(P), J = catalan_subset(Q);
    int k = 0;
    while (k < n - 1 && I[k] <= J[k]) ++k;
    if (k == n - 1) throw InternalError("no index with a_k > b_k");
    const int m = n - 1 - k;
    QuadraticForm r = multiply(delta(I, n), delta(J, n));
    std::vector<std::vector<int>> subs;
    detail::k_subsets(n - 1, m, subs);
    for (auto& sub : subs) {
        std::vector<int> Ip(I.begin(), I.begin() + k), Jp = J;
        for (int t = 0; t < m; ++t) {
            Ip.push_back(J[sub[t]]);
            Jp[sub[t]] = I[k + t];
        }
        r += detail::signed_delta_product(Ip, Jp, n) * Int(-1);
    }
    return to_polynomial(r);
}

struct StraightenResult {
    LPolynomial standard;
    int rewrites = 0;
};

/// Rewrites the smallest nonstandard monomial until only chains remain.
inline StraightenResult straighten(LPolynomial f, int max_rewrites = 100000) {
    StraightenResult res;
    for (;;) {
        const LMonomial* worst = nullptr;
        for (auto& [m, c] : f.terms())
            if (!m.is_standard() && (!worst || monomial_compare(m, *worst) < 0)) worst = &m;
        if (!worst) break;
        if (++res.rewrites > max_rewrites) throw InternalError("straightening did not terminate");
        LMonomial q = *worst;
        Int c = f.coeff(q);
        int i = q.first_noncomparable();
        std::vector<DyckPath> rest;
        for (int t = 0; t < q.degree(); ++t)
            if (t != i && t != i + 1) rest.push_back(q.factors[t]);
        auto r = relation(q.factors[i + 1], q.factors[i]) * LMonomial(std::move(rest));
        f += r * Int(-c);
        if (f.coeff(q) != 0) throw InternalError("rewrite did not cancel " + q.to_string());
    }
    res.standard = std::move(f);
    return res;
}

inline StraightenResult straighten_monomial(const LMonomial& m) { return straighten(LPolynomial(m)); }

/// prod over 1 <= i <= j <= n-1 of (i+j+2d)/(i+j).
inline Int dim_formula(int n, int d) {
    if (n < 1 || d < 0) throw InputError("need n >= 1 and d >= 0");
    Rat p = 1;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) p *= Rat(i + j + 2 * d, i + j);
    p.canonicalize();
    if (p.get_den() != 1) throw InternalError("dimension product is not an integer");
    return p.get_num();
}

inline Int count_standard(int n, int d) { return Int(static_cast<unsigned long>(enumerate_chains(n, d).size())); }

inline Rat evaluate(const LPolynomial& f, const std::map<NoncrossingPartition, Rat>& L) {
    Rat total = 0;
    for (auto& [m, c] : f.terms()) {
        Rat v = c;
        for (auto& p : m.factors) {
            auto it = L.find(partition_of_path(p));
            v *= it == L.end() ? Rat(0) : it->second;
        }
        total += v;
    }
    return total;
}

/// All (P, Q) with P lex-above Q and the two paths noncomparable.
inline std::vector<std::pair<DyckPath, DyckPath>> noncomparable_pairs(int n) {
    auto paths = enumerate_dyck(n);
    std::sort(paths.begin(), paths.end());
    std::vector<std::pair<DyckPath, DyckPath>> out;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (compare(paths[i], paths[j]) == PathOrder::incomparable) out.emplace_back(paths[i], paths[j]);
    return out;
}

/// Rank of a rational matrix (rows are copied).
inline int matrix_rank(std::vector<std::vector<Rat>> a) {
    int rank = 0;
    const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[rank][c];
            for (int t = c; t < cols; ++t) a[r][t] -= f * a[rank][t];
        }
        ++rank;
    }
    return rank;
}

} // namespace grovelab

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "network.hpp"

namespace grovelab {

struct Grove {
    std::vector<int> edges; ///< edge indices into the network
    NoncrossingPartition sigma;
};

namespace detail {

/// Alive non-arc edges ordered by id.
inline std::vector<int> edges_by_id(const CactusNetwork& g) {
    auto es = g.alive_edges();
    std::sort(es.begin(), es.end(), [&](int a, int b) { return g.E[a].id < g.E[b].id; });
    return es;
}

/// Boundary partition of the edge subset if it is a grove.
inline std::optional<NoncrossingPartition> grove_partition(const CactusNetwork& g, const std::vector<int>& subset) {
    UnionFind uf(static_cast<int>(g.V.size()));
    for (int k : subset)
        if (!uf.unite(g.E[k].u, g.E[k].v)) return std::nullopt;
    std::vector<char> touches(g.V.size(), 0);
    for (int i = 0; i < g.n; ++i) touches[uf.find(g.label_vertex[i])] = 1;
    for (int v : g.alive_vertices())
        if (!touches[uf.find(v)]) return std::nullopt;
    std::vector<int> lab(g.n);
    for (int i = 0; i < g.n; ++i) lab[i] = uf.find(g.label_vertex[i]);
    return NoncrossingPartition(lab);
}

inline std::vector<int> subset_of_mask(const std::vector<int>& es, std::uint64_t mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < es.size(); ++i)
        if ((mask >> i) & 1) out.push_back(es[i]);
    return out;
}

inline void check_enumerable(const std::vector<int>& es, std::size_t limit = 24) {
    if (es.size() > limit) throw InputError("network has too many edges for exhaustive enumeration");
}

} // namespace detail

inline std::vector<Grove> enumerate_groves(const CactusNetwork& g) {
    auto es = detail::edges_by_id(g);
    detail::check_enumerable(es);
    std::vector<Grove> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << es.size()); ++mask) {
        auto sub = detail::subset_of_mask(es, mask);
        if (auto s = detail::grove_partition(g, sub)) out.push_back({sub, *s});
    }
    return out;
}

inline Monomial edge_monomial(const CactusNetwork& g, const std::vector<int>& edges, const std::vector<int>& mult = {}) {
    Monomial m;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        unsigned e = mult.empty() ? 1 : mult[i];
        if (e) m.emplace_back(g.E[edges[i]].id, e);
    }
    std::sort(m.begin(), m.end());
    return m;
}

inline std::map<NoncrossingPartition, MultiPoly> all_measurements(const CactusNetwork& g) {
    std::map<NoncrossingPartition, MultiPoly> out;
    for (auto& f : enumerate_groves(g)) out[f.sigma] += MultiPoly::monomial(edge_monomial(g, f.edges));
    return out;
}

inline MultiPoly grove_measurement(const CactusNetwork& g, const NoncrossingPartition& sigma) {
    if (sigma.n() != g.n) throw InputError("partition size does not match the network");
    auto all = all_measurements(g);
    auto it = all.find(sigma);
    return it == all.end() ? MultiPoly() : it->second;
}

/// Numeric weights of the network; edges without one are missing from the map.
inline std::map<std::string, Rat> weight_point(const CactusNetwork& g) {
    std::map<std::string, Rat> out;
    for (int k : g.alive_edges())
        if (g.E[k].weight) out[g.E[k].id] = *g.E[k].weight;
    return out;
}

/// Product of all edge symbols.
inline MultiPoly network_weight(const CactusNetwork& g) {
    return MultiPoly::monomial(edge_monomial(g, g.alive_edges()));
}

struct DoubleGrove {
    std::vector<int> edges; ///< all edges of the base network, ordered by id
    std::vector<int> mult;  ///< 0, 1 or 2 per edge
};

inline std::vector<DoubleGrove> enumerate_double_groves(const CactusNetwork& g) {
    auto es = detail::edges_by_id(g);
    detail::check_enumerable(es, 14);
    std::vector<DoubleGrove> out;
    std::vector<int> mult(es.size(), 0);
    for (;;) {
        out.push_back({es, mult});
        std::size_t i = 0;
        while (i < mult.size() && mult[i] == 2) mult[i++] = 0;
        if (i == mult.size()) break;
        ++mult[i];
    }
    return out;
}

inline MultiPoly double_grove_weight(const CactusNetwork& g, const DoubleGrove& h) {
    return MultiPoly::monomial(edge_monomial(g, h.edges, h.mult));
}

/// Embedded multigraph of a double grove: absent edges deleted, all vertices kept.
inline CactusGraph realize(const CactusNetwork& g, const DoubleGrove& h) {
    CactusGraph out = g;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (h.mult[i] == 0) out.delete_edge(h.edges[i]);
        else out.E[h.edges[i]].mult = h.mult[i];
    }
    return out;
}

inline Int split_count(const CactusNetwork& g, const NoncrossingPartition& s1, const NoncrossingPartition& s2) {
    auto es = detail::edges_by_id(g);
    detail::check_enumerable(es);
    Int count = 0;
    const std::uint64_t full = (std::uint64_t{1} << es.size()) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        auto a = detail::grove_partition(g, detail::subset_of_mask(es, mask));
        if (!a || !(*a == s1)) continue;
        auto b = detail::grove_partition(g, detail::subset_of_mask(es, full ^ mask));
        if (b && *b == s2) ++count;
    }
    return count;
}

} // namespace grovelab

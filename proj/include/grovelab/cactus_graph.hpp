#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catalan.hpp"
#include "crossings.hpp"
#include "polyring.hpp"

namespace grovelab {

/// Edge of an embedded cactus graph. Dart 2k leaves `u`, dart 2k+1 leaves `v`.
struct GEdge {
    std::string id;
    int u = -1, v = -1;
    int mult = 1;
    bool arc = false;
    bool alive = true;
    std::optional<Rat> weight;
};

struct GVertex {
    std::string name;
    bool boundary = false;
    bool alive = true;
    std::vector<int> labels;
    std::vector<int> rot; ///< clockwise darts leaving the vertex
};

/// Rotation-system entry used while building a map: a dart, or a boundary label
/// marker that expands to (reverse of arc label-1, arc label).
struct RotToken {
    bool marker = false;
    int value = 0;
    static RotToken dart(int d) { return {false, d}; }
    static RotToken label(int i) { return {true, i}; }
};

/// Result of tracing medial wires from the 2n boundary terminals.
struct MedialTrace {
    Matching pairing;
    std::vector<std::vector<int>> wires; ///< edge indices crossed, indexed by starting terminal
    bool closed_curves = false;
};

/// Planar multigraph embedded in a cactus. Boundary arcs are stored as the first n
/// edges: arc j runs clockwise from the vertex of label j to the vertex of label j+1.
class CactusGraph {
public:
    int n = 0;
    std::vector<GVertex> V;
    std::vector<GEdge> E;
    std::vector<int> label_vertex;

    static int rev(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }

    int tail(int d) const { return (d & 1) ? E[d >> 1].v : E[d >> 1].u; }
    int head(int d) const { return tail(d ^ 1); }
    bool is_arc(int d) const { return E[d >> 1].arc; }

    int pos_in_rot(int d) const {
        const auto& r = V[tail(d)].rot;
        auto it = std::find(r.begin(), r.end(), d);
        if (it == r.end()) throw InternalError("dart missing from its rotation");
        return static_cast<int>(it - r.begin());
    }
    int next_cw(int d) const {
        const auto& r = V[tail(d)].rot;
        return r[(pos_in_rot(d) + 1) % r.size()];
    }
    int prev_cw(int d) const {
        const auto& r = V[tail(d)].rot;
        return r[(pos_in_rot(d) + r.size() - 1) % r.size()];
    }
    /// Next dart along the face lying to the right of d.
    int face_next(int d) const { return prev_cw(rev(d)); }

    // -----------------------------------------------------------------------
    // Construction

    /// Boundary vertices and arcs only; rotations follow the block structure of zeta.
    static CactusGraph empty_cactus(const NoncrossingPartition& zeta) {
        CactusGraph g;
        g.n = zeta.n();
        g.label_vertex.assign(g.n, -1);
        for (auto& part : zeta.parts()) {
            GVertex v;
            v.boundary = true;
            v.labels = part;
            v.name = "b" + std::to_string(part.front() + 1);
            int id = static_cast<int>(g.V.size());
            for (int lab : part) g.label_vertex[lab] = id;
            g.V.push_back(v);
        }
        for (int j = 0; j < g.n; ++j) {
            GEdge e;
            e.id = "~" + std::to_string(j + 1);
            e.arc = true;
            e.u = g.label_vertex[j];
            e.v = g.label_vertex[(j + 1) % g.n];
            g.E.push_back(e);
        }
        for (std::size_t v = 0; v < g.V.size(); ++v) {
            std::vector<RotToken> toks;
            for (int lab : g.V[v].labels) toks.push_back(RotToken::label(lab));
            g.set_rotation(static_cast<int>(v), toks);
        }
        return g;
    }

    int add_vertex(const std::string& name) {
        GVertex v;
        v.name = name;
        V.push_back(v);
        return static_cast<int>(V.size()) - 1;
    }

    /// Adds an edge without touching rotations.
    int add_edge(const std::string& id, int u, int v, int mult = 1) {
        GEdge e;
        e.id = id;
        e.u = u;
        e.v = v;
        e.mult = mult;
        E.push_back(e);
        return static_cast<int>(E.size()) - 1;
    }

    void set_rotation(int vertex, const std::vector<RotToken>& toks) {
        auto& r = V[vertex].rot;
        r.clear();
        for (auto& t : toks) {
            if (t.marker) {
                r.push_back(2 * ((t.value + n - 1) % n) + 1);
                r.push_back(2 * t.value);
            } else {
                r.push_back(t.value);
            }
        }
    }

    // -----------------------------------------------------------------------
    // Queries

    std::vector<int> alive_edges() const {
        std::vector<int> out;
        for (int k = n; k < static_cast<int>(E.size()); ++k)
            if (E[k].alive) out.push_back(k);
        return out;
    }
    int num_edges() const { return static_cast<int>(alive_edges().size()); }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(V.size()); ++v)
            if (V[v].alive) out.push_back(v);
        return out;
    }

    /// Degree counting edge multiplicity; arcs excluded, loops counted twice.
    int degree(int v) const {
        int d = 0;
        for (int x : V[v].rot)
            if (!is_arc(x)) d += E[x >> 1].mult;
        return d;
    }

    NoncrossingPartition zeta() const {
        std::vector<int> lab(n);
        for (int i = 0; i < n; ++i) lab[i] = label_vertex[i];
        return NoncrossingPartition(lab);
    }

    std::vector<std::vector<int>> faces() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(2 * E.size(), 0);
        for (int d = 0; d < static_cast<int>(2 * E.size()); ++d) {
            if (!E[d >> 1].alive || seen[d]) continue;
            std::vector<int> walk;
            int x = d;
            do {
                if (seen[x]) throw InternalError("face walk revisits a dart");
                seen[x] = 1;
                walk.push_back(x);
                x = face_next(x);
            } while (x != d);
            out.push_back(walk);
        }
        return out;
    }

    /// Vertices reachable from the boundary through edges and arcs.
    std::vector<char> reachable_from_boundary() const {
        std::vector<char> seen(V.size(), 0);
        std::vector<int> stack;
        for (int i = 0; i < n; ++i) {
            int v = label_vertex[i];
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : V[v].rot) {
                int w = head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }

    bool has_floating_component() const {
        auto seen = reachable_from_boundary();
        for (int v = 0; v < static_cast<int>(V.size()); ++v)
            if (V[v].alive && !seen[v]) return true;
        return false;
    }

    /// Throws InputError unless the rotation system is a planar map in the cactus.
    void validate() const {
        std::vector<int> count(2 * E.size(), 0);
        for (int v = 0; v < static_cast<int>(V.size()); ++v) {
            if (!V[v].alive) continue;
            for (int d : V[v].rot) {
                if (d < 0 || d >= static_cast<int>(2 * E.size()) || !E[d >> 1].alive || tail(d) != v)
                    throw InputError("rotation at '" + V[v].name + "' lists a dart that does not leave it");
                ++count[d];
            }
        }
        for (int d = 0; d < static_cast<int>(2 * E.size()); ++d)
            if (E[d >> 1].alive && count[d] != 1) throw InputError("edge '" + E[d >> 1].id + "' is not listed exactly once at each end");
        if (has_floating_component()) throw InputError("some interior vertex is not connected to the boundary");
        int nv = 0, ne = 0;
        for (auto& v : V) nv += v.alive;
        for (auto& e : E) ne += e.alive;
        auto fs = faces();
        if (nv - ne + static_cast<int>(fs.size()) != 2) throw InputError("rotation system is not planar");
        for (auto& f : fs) {
            bool outer = std::any_of(f.begin(), f.end(), [&](int d) { return is_arc(d) && (d & 1); });
            if (!outer) continue;
            if (static_cast<int>(f.size()) != n || !std::all_of(f.begin(), f.end(), [&](int d) { return is_arc(d) && (d & 1); }))
                throw InputError("edges are not embedded inside the cactus");
        }
    }

    // -----------------------------------------------------------------------
    // Mutation

    void delete_edge(int k) {
        for (int d : {2 * k, 2 * k + 1}) {
            auto& r = V[tail(d)].rot;
            r.erase(std::find(r.begin(), r.end(), d));
        }
        E[k].alive = false;
    }

    /// Contracts a non-loop edge; returns the surviving vertex.
    int contract_edge(int k) {
        const int u = E[k].u, w = E[k].v;
        if (u == w) throw InternalError("cannot contract a loop");
        auto cyc_after = [&](int vertex, int d) {
            const auto& r = V[vertex].rot;
            std::vector<int> out;
            int p = static_cast<int>(std::find(r.begin(), r.end(), d) - r.begin());
            for (std::size_t s = 1; s < r.size(); ++s) out.push_back(r[(p + s) % r.size()]);
            return out;
        };
        auto lu = cyc_after(u, 2 * k), lw = cyc_after(w, 2 * k + 1);
        const int keep = (V[w].boundary && !V[u].boundary) ? w : u;
        const int gone = keep == u ? w : u;
        for (int d : V[gone].rot) {
            if ((d >> 1) == k) continue;
            (d & 1 ? E[d >> 1].v : E[d >> 1].u) = keep;
        }
        std::vector<int> merged = lu;
        merged.insert(merged.end(), lw.begin(), lw.end());
        if (V[gone].boundary) {
            for (int lab : V[gone].labels) label_vertex[lab] = keep;
            V[keep].labels.insert(V[keep].labels.end(), V[gone].labels.begin(), V[gone].labels.end());
            std::sort(V[keep].labels.begin(), V[keep].labels.end());
            V[keep].boundary = true;
        }
        V[keep].rot = merged;
        V[gone].rot.clear();
        V[gone].alive = false;
        E[k].alive = false;
        return keep;
    }

    void remove_vertex_with_edges(int v) {
        while (!V[v].rot.empty()) {
            int d = V[v].rot.front();
            if (is_arc(d)) throw InternalError("cannot remove a boundary vertex");
            delete_edge(d >> 1);
        }
        V[v].alive = false;
    }

    /// Replaces dart `old_d` in its tail's rotation by `repl`, in order.
    void replace_in_rotation(int old_d, const std::vector<int>& repl) {
        auto& r = V[tail(old_d)].rot;
        auto it = std::find(r.begin(), r.end(), old_d);
        if (it == r.end()) throw InternalError("dart missing from its rotation");
        it = r.erase(it);
        r.insert(it, repl.begin(), repl.end());
    }

    // -----------------------------------------------------------------------
    // Medial graph

    MedialTrace trace_medial() const {
        const int T = 2 * n;
        std::vector<int> partner(T, -1);
        std::vector<int> visits(E.size(), 0);
        MedialTrace out;
        out.wires.assign(T, {});
        const int guard = 4 * static_cast<int>(E.size()) + 8;
        for (int t = 0; t < T; ++t) {
            if (partner[t] != -1) continue;
            int first;
            bool toward_first;
            if (t % 2 == 0) {
                const int i = t / 2;
                first = prev_cw(2 * ((i + n - 1) % n) + 1);
                toward_first = true;
            } else {
                first = 2 * ((t - 1) / 2);
                toward_first = false;
            }
            std::vector<int> wire;
            int end = -1;
            for (int step = 0; step < guard && end < 0; ++step) {
                if (toward_first) {
                    const int a = first;
                    if (is_arc(a)) {
                        if (a & 1) throw InputError("inconsistent embedding at a boundary vertex");
                        end = 2 * (a >> 1) + 1;
                    } else {
                        wire.push_back(a >> 1);
                        first = rev(a);
                        toward_first = false;
                    }
                } else {
                    const int b = next_cw(first);
                    if (is_arc(b)) {
                        if (!(b & 1)) throw InputError("inconsistent embedding at a boundary vertex");
                        end = 2 * (((b >> 1) + 1) % n);
                    } else {
                        wire.push_back(b >> 1);
                        first = prev_cw(rev(b));
                        toward_first = true;
                    }
                }
            }
            if (end < 0 || end == t || partner[end] != -1) throw InputError("medial wire tracing failed");
            partner[t] = end;
            partner[end] = t;
            for (int k : wire) ++visits[k];
            out.wires[t] = wire;
            std::vector<int> back(wire.rbegin(), wire.rend());
            out.wires[end] = back;
        }
        for (int k = n; k < static_cast<int>(E.size()); ++k)
            if (E[k].alive && visits[k] != 2) out.closed_curves = true;
        out.pairing = Matching(std::move(partner));
        return out;
    }

    Matching medial_pairing() const { return trace_medial().pairing; }

    /// No wire crosses itself, no two wires cross twice, and no closed medial curves.
    bool is_lensless() const {
        auto tr = trace_medial();
        if (tr.closed_curves) return false;
        const int T = 2 * n;
        std::vector<std::vector<int>> wires;
        for (int t = 0; t < T; ++t)
            if (t < tr.pairing.partner(t)) {
                auto w = tr.wires[t];
                std::sort(w.begin(), w.end());
                if (std::adjacent_find(w.begin(), w.end()) != w.end()) return false;
                wires.push_back(w);
            }
        for (std::size_t a = 0; a < wires.size(); ++a)
            for (std::size_t b = a + 1; b < wires.size(); ++b) {
                std::vector<int> common;
                std::set_intersection(wires[a].begin(), wires[a].end(), wires[b].begin(), wires[b].end(),
                                      std::back_inserter(common));
                if (common.size() >= 2) return false;
            }
        return true;
    }

    // -----------------------------------------------------------------------
    // Canonical form

    /// Rooted-map code from arc 0; independent of vertex and edge naming.
    std::vector<int> canonical_code() const {
        std::vector<int> num(V.size(), -1), code;
        std::deque<std::pair<int, int>> queue;
        const int root = label_vertex[0];
        num[root] = 0;
        int next = 1;
        queue.emplace_back(root, 0);
        code.push_back(n);
        while (!queue.empty()) {
            auto [v, entry] = queue.front();
            queue.pop_front();
            const auto& r = V[v].rot;
            int p = static_cast<int>(std::find(r.begin(), r.end(), entry) - r.begin());
            code.push_back(-1000);
            for (std::size_t s = 0; s < r.size(); ++s) {
                int d = r[(p + s) % r.size()];
                code.push_back(is_arc(d) ? -(d + 1) : E[d >> 1].mult);
                int w = head(d);
                if (num[w] < 0) {
                    num[w] = next++;
                    queue.emplace_back(w, rev(d));
                }
                code.push_back(num[w]);
            }
        }
        return code;
    }
};

} // namespace grovelab

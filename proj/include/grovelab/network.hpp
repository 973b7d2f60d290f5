#pragma once

#include <map>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "cactus_graph.hpp"

namespace grovelab {

using CactusNetwork = CactusGraph;

/// Plain description of a network: the in-memory form of the JSON format.
struct NetworkSpec {
    struct EdgeSpec {
        std::string id;
        std::string end0, end1;
    };
    int n = 0;
    std::vector<std::vector<int>> zeta; ///< 1-based parts
    std::vector<std::string> interior;
    std::vector<EdgeSpec> edges;
    /// Interior vertex: clockwise edge ids. Boundary label "bi": edge ids of the wedge
    /// following label i, counterclockwise from the far end of that wedge.
    std::map<std::string, std::vector<std::string>> rotation;
    std::map<std::string, Rat> weights;
};

namespace detail {

inline bool is_symbol(const std::string& s) {
    static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
    return std::regex_match(s, re);
}

inline int boundary_label(const std::string& name, int n) {
    static const std::regex re("b([1-9][0-9]*)");
    std::smatch m;
    if (!std::regex_match(name, m, re)) return -1;
    int i = std::stoi(m[1]);
    return i <= n ? i - 1 : -1;
}

} // namespace detail

inline CactusNetwork build_network(const NetworkSpec& s) {
    if (s.n < 1) throw InputError("network needs n >= 1");
    NoncrossingPartition zeta = s.zeta.empty() ? NoncrossingPartition::singletons(s.n) : [&] {
        std::vector<std::vector<int>> parts;
        for (auto& p : s.zeta) {
            std::vector<int> q;
            for (int x : p) {
                if (x < 1 || x > s.n) throw InputError("zeta label out of range");
                q.push_back(x - 1);
            }
            parts.push_back(q);
        }
        return NoncrossingPartition::from_parts(s.n, parts);
    }();
    CactusNetwork g = CactusNetwork::empty_cactus(zeta);
    std::map<std::string, int> vertex_of;
    for (auto& name : s.interior) {
        if (detail::boundary_label(name, s.n) >= 0 || name.empty() || vertex_of.count(name))
            throw InputError("bad interior vertex name '" + name + "'");
        vertex_of[name] = g.add_vertex(name);
    }
    auto resolve_end = [&](const std::string& name) {
        int lab = detail::boundary_label(name, s.n);
        if (lab >= 0) return g.label_vertex[lab];
        auto it = vertex_of.find(name);
        if (it == vertex_of.end()) throw InputError("unknown vertex '" + name + "'");
        return it->second;
    };
    std::map<std::string, int> edge_of;
    for (auto& e : s.edges) {
        if (!detail::is_symbol(e.id) || edge_of.count(e.id)) throw InputError("bad or duplicate edge id '" + e.id + "'");
        int k = g.add_edge(e.id, resolve_end(e.end0), resolve_end(e.end1));
        edge_of[e.id] = k;
        auto w = s.weights.find(e.id);
        if (w != s.weights.end()) g.E[k].weight = w->second;
    }
    for (auto& [id, w] : s.weights)
        if (!edge_of.count(id)) throw InputError("weight given for unknown edge '" + id + "'");

    std::map<std::pair<int, int>, int> seen; // (vertex, edge) -> occurrences so far
    auto dart_at = [&](int vertex, const std::string& id) {
        auto it = edge_of.find(id);
        if (it == edge_of.end()) throw InputError("rotation names unknown edge '" + id + "'");
        const int k = it->second;
        const auto& e = g.E[k];
        int occ = seen[{vertex, k}]++;
        if (e.u == vertex && e.v == vertex) {
            if (occ > 1) throw InputError("loop '" + id + "' listed too often");
            return 2 * k + occ;
        }
        if (occ > 0) throw InputError("edge '" + id + "' listed twice at one vertex");
        if (e.u == vertex) return 2 * k;
        if (e.v == vertex) return 2 * k + 1;
        throw InputError("edge '" + id + "' is listed at a vertex it does not touch");
    };
    auto list_of = [&](const std::string& key) -> std::vector<std::string> {
        auto it = s.rotation.find(key);
        return it == s.rotation.end() ? std::vector<std::string>{} : it->second;
    };
    for (auto& [key, list] : s.rotation)
        if (!vertex_of.count(key) && detail::boundary_label(key, s.n) < 0)
            throw InputError("rotation given for unknown vertex '" + key + "'");
    for (auto& name : s.interior) {
        int v = vertex_of[name];
        std::vector<RotToken> toks;
        for (auto& id : list_of(name)) toks.push_back(RotToken::dart(dart_at(v, id)));
        g.set_rotation(v, toks);
    }
    for (int v = 0; v < static_cast<int>(g.V.size()); ++v) {
        if (!g.V[v].boundary) continue;
        std::vector<RotToken> toks;
        for (int lab : g.V[v].labels) {
            toks.push_back(RotToken::label(lab));
            auto list = list_of("b" + std::to_string(lab + 1));
            for (auto it = list.rbegin(); it != list.rend(); ++it) toks.push_back(RotToken::dart(dart_at(v, *it)));
        }
        g.set_rotation(v, toks);
    }
    g.validate();
    return g;
}

/// Inverse of build_network up to the choice of rotation starting points.
inline NetworkSpec network_spec(const CactusNetwork& g) {
    NetworkSpec s;
    s.n = g.n;
    for (auto& part : g.zeta().parts()) {
        std::vector<int> p;
        for (int x : part) p.push_back(x + 1);
        s.zeta.push_back(p);
    }
    std::vector<std::string> end_name(2 * g.E.size());
    for (int v : g.alive_vertices()) {
        const auto& V = g.V[v];
        if (!V.boundary) {
            s.interior.push_back(V.name);
            auto& list = s.rotation[V.name];
            for (int d : V.rot) {
                list.push_back(g.E[d >> 1].id);
                end_name[d] = V.name;
            }
            continue;
        }
        for (int lab : V.labels) {
            std::vector<std::string> ids;
            int d = g.next_cw(2 * lab);
            while (!g.is_arc(d)) {
                ids.push_back(g.E[d >> 1].id);
                end_name[d] = "b" + std::to_string(lab + 1);
                d = g.next_cw(d);
            }
            std::reverse(ids.begin(), ids.end());
            if (!ids.empty()) s.rotation["b" + std::to_string(lab + 1)] = ids;
        }
    }
    for (int k : g.alive_edges()) {
        s.edges.push_back({g.E[k].id, end_name[2 * k], end_name[2 * k + 1]});
        if (g.E[k].weight) s.weights[g.E[k].id] = *g.E[k].weight;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Built-in networks

inline CactusNetwork builtin_y3() {
    NetworkSpec s;
    s.n = 3;
    s.interior = {"x"};
    s.edges = {{"a", "b1", "x"}, {"b", "b2", "x"}, {"c", "b3", "x"}};
    s.rotation = {{"x", {"a", "b", "c"}}, {"b1", {"a"}}, {"b2", {"b"}}, {"b3", {"c"}}};
    return build_network(s);
}

inline CactusNetwork builtin_fig3() {
    NetworkSpec s;
    s.n = 7;
    s.zeta = {{1}, {2}, {3, 5}, {4}, {6}, {7}};
    s.interior = {"x", "y"};
    s.edges = {{"a", "b2", "x"}, {"b", "b7", "x"}, {"c", "x", "y"},
               {"d", "b6", "y"}, {"e", "b5", "y"}, {"f", "b3", "b4"}};
    s.rotation = {{"x", {"a", "c", "b"}}, {"y", {"c", "e", "d"}}, {"b2", {"a"}}, {"b7", {"b"}},
                  {"b6", {"d"}},           {"b5", {"e"}},           {"b3", {"f"}}, {"b4", {"f"}}};
    return build_network(s);
}

inline CactusNetwork builtin_network(const std::string& name) {
    if (name == "y3") return builtin_y3();
    if (name == "fig3") return builtin_fig3();
    throw InputError("unknown builtin network '" + name + "'");
}

// ---------------------------------------------------------------------------
// Semicircle arrangement of a matching: the medial picture read back as a map

/// Planar map of a matching drawn with semicircles over a line. Faces are the regions;
/// regions over segments (2i-1,2i) are white, the rest alternate.
class Arrangement {
public:
    explicit Arrangement(const Matching& m) : diagram_(m) {
        const int P = m.size();
        const auto& cr = diagram_.crossing_list();
        const int X = static_cast<int>(cr.size());
        nv_ = P + X;
        const int arc_edges = diagram_.num_segments();
        // edges: arc segments first, then line segments L_0..L_{P-2}, then L_inf
        line_base_ = arc_edges;
        const int ne = arc_edges + P;
        tail_.assign(2 * ne, -1);
        rot_.assign(nv_, {});
        auto arcs = m.pairs();
        for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
            const auto& on = diagram_.crossings_on_arc(k);
            std::vector<int> nodes{arcs[k].first};
            for (int q : on) nodes.push_back(P + q);
            nodes.push_back(arcs[k].second);
            for (std::size_t t = 0; t + 1 < nodes.size(); ++t) {
                int e = diagram_.segment(k, static_cast<int>(t));
                tail_[2 * e] = nodes[t];
                tail_[2 * e + 1] = nodes[t + 1];
            }
        }
        for (int p = 0; p < P; ++p) {
            int e = line_base_ + p; // L_p joins P_p to P_{p+1}; L_{P-1} joins P_{P-1} to P_0
            tail_[2 * e] = p;
            tail_[2 * e + 1] = (p + 1) % P;
        }
        for (int p = 0; p < P; ++p) {
            int k = diagram_.arc_of(p);
            int arc_dart = m.is_left(p) ? 2 * diagram_.segment(k, 0)
                                        : 2 * diagram_.segment(k, static_cast<int>(diagram_.crossings_on_arc(k).size())) + 1;
            int left = 2 * (line_base_ + (p + P - 1) % P) + 1;
            int right = 2 * (line_base_ + p);
            rot_[p] = {left, arc_dart, right};
        }
        for (int q = 0; q < X; ++q) {
            int al = diagram_.left_segment_of_arc_at(q, true), bl = diagram_.left_segment_of_arc_at(q, false);
            // clockwise: B toward d, A toward c, B toward b, A toward a
            rot_[P + q] = {2 * (bl + 1), 2 * (al + 1), 2 * bl + 1, 2 * al + 1};
        }
        pos_.assign(2 * ne, -1);
        for (int v = 0; v < nv_; ++v)
            for (std::size_t i = 0; i < rot_[v].size(); ++i) pos_[rot_[v][i]] = static_cast<int>(i);
        face_of_.assign(2 * ne, -1);
        for (int d = 0; d < 2 * ne; ++d) {
            if (face_of_[d] >= 0) continue;
            int f = static_cast<int>(faces_.size());
            faces_.push_back({});
            int x = d;
            do {
                face_of_[x] = f;
                faces_[f].push_back(x);
                x = face_next(x);
            } while (x != d);
        }
        // colours by alternation across arc segments, starting from label segments
        colour_.assign(faces_.size(), -1);
        std::vector<int> stack;
        for (int p = 0; p < P; p += 2) {
            int f = face_of_[2 * (line_base_ + p) + 1];
            colour_[f] = 1;
            stack.push_back(f);
        }
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int d : faces_[f]) {
                if (is_line(d)) continue;
                int g = face_of_[d ^ 1];
                if (colour_[g] < 0) {
                    colour_[g] = 1 - colour_[f];
                    stack.push_back(g);
                } else if (colour_[g] == colour_[f]) {
                    throw InternalError("arrangement regions are not two-colourable");
                }
            }
        }
        lower_face_ = face_of_[2 * line_base_];
    }

    const ArcDiagram& diagram() const { return diagram_; }
    int num_points() const { return diagram_.matching().size(); }
    int num_crossings() const { return static_cast<int>(diagram_.crossing_list().size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    const std::vector<int>& face(int f) const { return faces_[f]; }
    int face_of(int d) const { return face_of_[d]; }
    bool white(int f) const { return colour_[f] == 1; }
    int lower_face() const { return lower_face_; }
    int tail(int d) const { return tail_[d]; }
    bool is_line(int d) const { return (d >> 1) >= line_base_; }
    /// For a westward line dart: the segment index p, lying between points p and p+1 (cyclically).
    int line_segment(int d) const { return (d >> 1) - line_base_; }
    bool is_crossing_vertex(int v) const { return v >= num_points(); }
    int crossing_of(int v) const { return v - num_points(); }

    /// Darts leaving crossing q in clockwise order; corner i lies in face_of(dart i).
    const std::vector<int>& crossing_darts(int q) const { return rot_[num_points() + q]; }

    /// Line segments (point-index p for the segment between p and p+1) bordering face f.
    std::vector<int> segments_of_face(int f) const {
        std::vector<int> out;
        if (f == lower_face_) return out;
        for (int d : faces_[f])
            if (is_line(d)) out.push_back(line_segment(d));
        std::sort(out.begin(), out.end());
        return out;
    }

    int next_cw(int d) const {
        const auto& r = rot_[tail_[d]];
        return r[(pos_[d] + 1) % r.size()];
    }
    int prev_cw(int d) const {
        const auto& r = rot_[tail_[d]];
        return r[(pos_[d] + r.size() - 1) % r.size()];
    }
    int face_next(int d) const { return prev_cw(d ^ 1); }

private:
    ArcDiagram diagram_;
    int nv_ = 0, line_base_ = 0, lower_face_ = -1;
    std::vector<int> tail_, pos_, face_of_, colour_;
    std::vector<std::vector<int>> rot_, faces_;
};

/// Reduced network read off the semicircle picture of m (any matching without concurrent crossings).
inline CactusNetwork network_of_arrangement(const Arrangement& A) {
    const int P = A.num_points(), n = P / 2;
    const int X = A.num_crossings();
    // white corners of each crossing: end 0 and end 1 of edge e_{q+1}
    std::vector<std::array<int, 2>> corner_dart(X);
    std::map<int, std::pair<int, int>> end_of_dart; // corner dart -> (crossing, end)
    for (int q = 0; q < X; ++q) {
        int c = 0;
        for (int d : A.crossing_darts(q))
            if (A.white(A.face_of(d))) {
                if (c > 1) throw InternalError("crossing with more than two white corners");
                corner_dart[q][c] = d;
                end_of_dart[d] = {q, c};
                ++c;
            }
        if (c != 2) throw InternalError("crossing without two white corners");
    }
    std::vector<int> lab(n, -1);
    std::vector<int> white_faces;
    for (int f = 0; f < A.num_faces(); ++f)
        if (A.white(f)) white_faces.push_back(f);
    std::map<int, int> part_of_face;
    for (int f : white_faces) {
        auto segs = A.segments_of_face(f);
        for (int p : segs) {
            if (p % 2) throw InternalError("white region over a dual segment");
            lab[p / 2] = f;
        }
    }
    for (int i = 0; i < n; ++i)
        if (lab[i] < 0) throw InternalError("label segment without region");
    CactusNetwork g = CactusNetwork::empty_cactus(NoncrossingPartition(lab));
    std::map<int, int> vertex_of_face;
    int counter = 0;
    for (int f : white_faces) {
        auto segs = A.segments_of_face(f);
        vertex_of_face[f] = segs.empty() ? g.add_vertex("v" + std::to_string(++counter)) : g.label_vertex[segs.front() / 2];
    }
    for (int q = 0; q < X; ++q)
        g.add_edge("e" + std::to_string(q + 1), vertex_of_face[A.face_of(corner_dart[q][0])],
                   vertex_of_face[A.face_of(corner_dart[q][1])]);
    for (int f : white_faces) {
        std::vector<RotToken> toks;
        const auto& walk = A.face(f);
        for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
            int d = *it;
            if (A.is_line(d)) {
                toks.push_back(RotToken::label(A.line_segment(d) / 2));
            } else if (A.is_crossing_vertex(A.tail(d))) {
                auto [q, end] = end_of_dart.at(d);
                toks.push_back(RotToken::dart(2 * (n + q) + end));
            }
        }
        int v = vertex_of_face[f];
        g.set_rotation(v, toks);
    }
    g.validate();
    return g;
}

inline CactusNetwork network_of_matching(const Matching& xi) {
    if (!is_three_noncrossing(xi)) throw InputError("matching " + xi.to_string() + " is not 3-noncrossing");
    return network_of_arrangement(Arrangement(xi));
}

// ---------------------------------------------------------------------------
// Dual network

inline CactusNetwork dual_network(const CactusNetwork& g) {
    auto faces = g.faces();
    std::vector<int> face_of(2 * g.E.size(), -1);
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (int d : faces[f]) face_of[d] = static_cast<int>(f);
    std::vector<int> lab(g.n, -1);
    for (int j = 0; j < g.n; ++j) lab[j] = face_of[2 * j];
    CactusNetwork h = CactusNetwork::empty_cactus(NoncrossingPartition(lab));
    std::map<int, int> vertex_of_face;
    int counter = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        bool outer = false;
        int label = -1;
        for (int d : faces[f])
            if (g.is_arc(d)) {
                if (d & 1) outer = true;
                else if (label < 0) label = d >> 1;
            }
        if (outer) continue;
        vertex_of_face[static_cast<int>(f)] = label >= 0 ? h.label_vertex[label] : h.add_vertex("v" + std::to_string(++counter));
    }
    // dual edge k keeps index k so that dual dart d crosses primal dart d
    for (int k = g.n; k < static_cast<int>(g.E.size()); ++k) {
        int u = g.E[k].alive ? vertex_of_face.at(face_of[2 * k]) : 0;
        int v = g.E[k].alive ? vertex_of_face.at(face_of[2 * k + 1]) : 0;
        int id = h.add_edge(g.E[k].id, u, v, g.E[k].mult);
        h.E[id].alive = g.E[k].alive;
    }
    for (auto& [f, v] : vertex_of_face) {
        std::vector<RotToken> toks;
        for (int d : faces[f]) toks.push_back(g.is_arc(d) ? RotToken::label(d >> 1) : RotToken::dart(d));
        h.set_rotation(v, toks);
    }
    h.validate();
    return h;
}

// ---------------------------------------------------------------------------
// Unweighted Y-Delta moves

struct YDSite {
    bool star = true; ///< true: interior degree-3 vertex; false: triangular face
    int where = -1;   ///< vertex index, or a dart of the face
};

inline std::string fresh_edge_id(const CactusNetwork& g, const std::string& prefix = "t") {
    std::set<std::string> used;
    for (auto& e : g.E) used.insert(e.id);
    for (int i = 1;; ++i) {
        std::string id = prefix + std::to_string(i);
        if (!used.count(id)) return id;
    }
}

inline std::string fresh_vertex_name(const CactusNetwork& g) {
    std::set<std::string> used;
    for (auto& v : g.V) used.insert(v.name);
    for (int i = 1;; ++i) {
        std::string id = "w" + std::to_string(i);
        if (!used.count(id)) return id;
    }
}

/// Darts d1,d2,d3 of a Y site, or throws.
inline std::vector<int> star_darts(const CactusNetwork& g, int v) {
    if (v < 0 || v >= static_cast<int>(g.V.size()) || !g.V[v].alive || g.V[v].boundary)
        throw InputError("Y site must be an interior vertex");
    const auto& r = g.V[v].rot;
    if (r.size() != 3) throw InputError("Y site must have degree 3");
    std::set<int> nb;
    for (int d : r) {
        if (g.E[d >> 1].mult != 1) throw InputError("Y site has a multiple edge");
        nb.insert(g.head(d));
    }
    if (nb.size() != 3 || nb.count(v)) throw InputError("Y site neighbours are not distinct");
    return r;
}

/// Darts f1,f2,f3 of a triangular face through dart d (no arcs, distinct vertices and edges), or throws.
inline std::vector<int> triangle_darts(const CactusNetwork& g, int d) {
    if (d < 0 || d >= static_cast<int>(2 * g.E.size()) || !g.E[d >> 1].alive) throw InputError("bad triangle site");
    std::vector<int> f{d};
    for (int x = g.face_next(d); x != d; x = g.face_next(x)) {
        f.push_back(x);
        if (f.size() > 3) throw InputError("face is not a triangle");
    }
    if (f.size() != 3) throw InputError("face is not a triangle");
    std::set<int> vs, es;
    for (int x : f) {
        if (g.is_arc(x)) throw InputError("face touches the boundary circle");
        vs.insert(g.tail(x));
        es.insert(x >> 1);
    }
    if (vs.size() != 3 || es.size() != 3) throw InputError("degenerate triangle");
    return f;
}

inline std::vector<YDSite> yd_sites(const CactusNetwork& g) {
    std::vector<YDSite> out;
    for (int v : g.alive_vertices()) try {
            star_darts(g, v);
            out.push_back({true, v});
        } catch (const InputError&) {
        }
    for (auto& f : g.faces()) try {
            auto t = triangle_darts(g, f.front());
            bool simple = true;
            for (int x : t) simple = simple && g.E[x >> 1].mult == 1;
            if (simple) out.push_back({false, *std::min_element(f.begin(), f.end())});
        } catch (const InputError&) {
        }
    return out;
}

inline CactusNetwork y_to_delta(CactusNetwork g, int v) {
    auto d = star_darts(g, v);
    int nb[3];
    for (int i = 0; i < 3; ++i) nb[i] = g.head(d[i]);
    int tri[3]; // tri[i] joins nb[i] -> nb[i+1]
    for (int i = 0; i < 3; ++i) tri[i] = g.add_edge(fresh_edge_id(g), nb[i], nb[(i + 1) % 3]);
    for (int i = 0; i < 3; ++i) {
        int to_next = 2 * tri[i], to_prev = 2 * tri[(i + 2) % 3] + 1;
        g.replace_in_rotation(g.rev(d[i]), {to_next, to_prev});
    }
    for (int i = 0; i < 3; ++i) g.E[d[i] >> 1].alive = false;
    g.V[v].rot.clear();
    g.V[v].alive = false;
    return g;
}

inline CactusNetwork delta_to_y(CactusNetwork g, int face_dart) {
    auto f = triangle_darts(g, face_dart);
    for (int x : f)
        if (g.E[x >> 1].mult != 1) throw InputError("triangle has a multiple edge");
    int vs[3];
    for (int i = 0; i < 3; ++i) vs[i] = g.tail(f[i]);
    int c = g.add_vertex(fresh_vertex_name(g));
    int spoke[3];
    for (int i = 0; i < 3; ++i) spoke[i] = g.add_edge(fresh_edge_id(g), vs[i], c);
    for (int i = 0; i < 3; ++i) {
        // at vs[i] the face corner sits between f[i] and rev f[i-1]
        auto& r = g.V[vs[i]].rot;
        int a = f[i], b = g.rev(f[(i + 2) % 3]);
        auto pa = std::find(r.begin(), r.end(), a) - r.begin();
        if (r[(pa + 1) % r.size()] != b) throw InternalError("triangle corner is not consecutive");
        r[pa] = 2 * spoke[i];
        r.erase(r.begin() + (pa + 1) % r.size());
    }
    for (int x : f) g.E[x >> 1].alive = false;
    g.V[c].rot = {2 * spoke[0] + 1, 2 * spoke[1] + 1, 2 * spoke[2] + 1};
    return g;
}

inline CactusNetwork yd_move(const CactusNetwork& g, const YDSite& site) {
    return site.star ? y_to_delta(g, site.where) : delta_to_y(g, site.where);
}

// ---------------------------------------------------------------------------
// Random networks

/// Removes interior vertices that cannot reach the boundary, with their edges.
inline void prune_floating(CactusNetwork& g) {
    auto seen = g.reachable_from_boundary();
    for (int v = 0; v < static_cast<int>(g.V.size()); ++v)
        if (g.V[v].alive && !seen[v]) g.remove_vertex_with_edges(v);
}

/// Random matching without concurrent crossings; if `three_noncrossing`, from TC_n.
template <class Rng>
Matching random_drawable_matching(int n, Rng& rng, bool three_noncrossing = false) {
    for (;;) {
        std::vector<int> pts(2 * n);
        std::iota(pts.begin(), pts.end(), 0);
        std::shuffle(pts.begin(), pts.end(), rng);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i) pairs.emplace_back(pts[2 * i], pts[2 * i + 1]);
        auto m = Matching::from_pairs(n, pairs);
        if (three_noncrossing && !is_three_noncrossing(m)) continue;
        try {
            ArcDiagram check(m);
        } catch (const InputError&) {
            continue;
        }
        return m;
    }
}

/// Random reduced network: the picture network of a random drawable matching.
template <class Rng>
CactusNetwork random_reduced_network(int n, Rng& rng) {
    return network_of_arrangement(Arrangement(random_drawable_matching(n, rng)));
}

/// Random cactus network with at most max_edges edges, obtained from a reduced one by
/// deletions, contractions, parallel duplication and subdivision.
template <class Rng>
CactusNetwork random_network(int n, int max_edges, Rng& rng) {
    CactusNetwork g = random_reduced_network(n, rng);
    auto pick = [&](const std::vector<int>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
    std::uniform_int_distribution<int> coin(0, 3);
    for (int step = 0; step < 6; ++step) {
        auto es = g.alive_edges();
        if (es.empty()) break;
        int k = pick(es);
        switch (coin(rng)) {
        case 0: g.delete_edge(k); break;
        case 1:
            if (g.E[k].u != g.E[k].v) g.contract_edge(k);
            break;
        case 2: {
            int k2 = g.add_edge(fresh_edge_id(g, "p"), g.E[k].u, g.E[k].v);
            g.replace_in_rotation(2 * k, {2 * k, 2 * k2});
            g.replace_in_rotation(2 * k + 1, {2 * k2 + 1, 2 * k + 1});
            break;
        }
        default: {
            int w = g.add_vertex(fresh_vertex_name(g));
            int k2 = g.add_edge(fresh_edge_id(g, "s"), w, g.E[k].v);
            g.replace_in_rotation(2 * k + 1, {2 * k2 + 1});
            g.E[k].v = w;
            g.V[w].rot = {2 * k + 1, 2 * k2};
        }
        }
        for (int e : g.alive_edges())
            if (g.E[e].u == g.E[e].v) g.delete_edge(e);
        prune_floating(g);
    }
    while (g.num_edges() > max_edges) {
        g.delete_edge(pick(g.alive_edges()));
        prune_floating(g);
    }
    // compact edge ids to e1.. for readable polynomials
    int counter = 0;
    for (int k : g.alive_edges()) g.E[k].id = "e" + std::to_string(++counter);
    g.validate();
    return g;
}

template <class Rng>
void assign_random_weights(CactusNetwork& g, Rng& rng) {
    std::uniform_int_distribution<int> num(1, 40), den(1, 13);
    for (int k : g.alive_edges()) g.E[k].weight = Rat(num(rng), den(rng));
    for (int k : g.alive_edges()) g.E[k].weight->canonicalize();
}

} // namespace grovelab

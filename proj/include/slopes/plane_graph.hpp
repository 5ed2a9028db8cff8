#pragma once

#include "slopes/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace slopes {

using VertexId = int;

struct InsertionStep {
    std::string v;
    std::array<std::string, 3> face;
};

// Construction recipe for a plane 3-tree: an outer triangle plus a sequence of
// vertex insertions into existing inner faces (addressed as vertex triples).
struct InsertionSequence {
    std::array<std::string, 3> base;
    std::vector<InsertionStep> steps;
};

// Combinatorial plane graph as a rotation system. Half-edges come in twin
// pairs (2e, 2e+1); rot_next is the counterclockwise successor around the
// origin vertex. The face lying to the left of h is traced by face_next.
class PlaneGraph {
public:
    struct HalfEdge {
        VertexId origin = -1;
        int rot_next = -1;
        int rot_prev = -1;
        bool alive = false;
    };

    // --- vertices ---

    VertexId add_vertex(const std::string& name) {
        if (name_index_.count(name)) throw error("DuplicateVertex: " + name);
        VertexId v = static_cast<VertexId>(names_.size());
        names_.push_back(name);
        name_index_.emplace(name, v);
        first_out_.push_back(-1);
        insertion_order_.push_back(-1);
        return v;
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(VertexId v) const { return names_[v]; }
    VertexId vertex(const std::string& name) const {
        auto it = name_index_.find(name);
        if (it == name_index_.end()) throw error("unknown vertex: " + name);
        return it->second;
    }
    bool has_vertex(const std::string& name) const { return name_index_.count(name) > 0; }

    void set_insertion_order(VertexId v, int order) { insertion_order_[v] = order; }
    int insertion_order(VertexId v) const { return insertion_order_[v]; }

    // --- half-edge access ---

    static int twin(int h) { return h ^ 1; }
    VertexId origin(int h) const { return he_[h].origin; }
    VertexId target(int h) const { return he_[twin(h)].origin; }
    int rot_next(int h) const { return he_[h].rot_next; }
    int rot_prev(int h) const { return he_[h].rot_prev; }
    bool alive(int h) const { return h >= 0 && he_[h].alive; }
    int halfedge_count() const { return static_cast<int>(he_.size()); }

    int face_next(int h) const { return rot_prev(twin(h)); }
    int face_prev(int h) const { return twin(rot_next(h)); }

    int first_out(VertexId v) const { return first_out_[v]; }

    int degree(VertexId v) const {
        int h = first_out_[v];
        if (h < 0) return 0;
        int d = 0, cur = h;
        do {
            ++d;
            cur = rot_next(cur);
        } while (cur != h);
        return d;
    }

    std::vector<VertexId> neighbors_ccw(VertexId v) const {
        std::vector<VertexId> out;
        int h = first_out_[v];
        if (h < 0) return out;
        int cur = h;
        do {
            out.push_back(target(cur));
            cur = rot_next(cur);
        } while (cur != h);
        return out;
    }

    std::vector<int> out_halfedges_ccw(VertexId v) const {
        std::vector<int> out;
        int h = first_out_[v];
        if (h < 0) return out;
        int cur = h;
        do {
            out.push_back(cur);
            cur = rot_next(cur);
        } while (cur != h);
        return out;
    }

    int halfedge_between(VertexId u, VertexId v) const {
        int h = first_out_[u];
        if (h < 0) return -1;
        int cur = h;
        do {
            if (target(cur) == v) return cur;
            cur = rot_next(cur);
        } while (cur != h);
        return -1;
    }

    bool has_edge(VertexId u, VertexId v) const { return halfedge_between(u, v) >= 0; }

    int edge_count() const { return edge_count_; }

    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (int h = 0; h < static_cast<int>(he_.size()); h += 2) {
            if (!he_[h].alive) continue;
            out.emplace_back(origin(h), target(h));
        }
        return out;
    }

    // --- structure edits ---

    // Creates the twin pair u->v / v->u but does not link rotations; returns
    // the index of u->v. Callers must splice both half-edges.
    int new_edge(VertexId u, VertexId v) {
        int h = static_cast<int>(he_.size());
        he_.push_back(HalfEdge{u, -1, -1, true});
        he_.push_back(HalfEdge{v, -1, -1, true});
        ++edge_count_;
        return h;
    }

    // Splices h into the rotation at its origin immediately ccw-after `after`
    // (h and `after` share the origin). For a vertex with no edges yet pass
    // after = -1.
    void splice_after(int h, int after) {
        VertexId v = he_[h].origin;
        if (after < 0) {
            he_[h].rot_next = h;
            he_[h].rot_prev = h;
            first_out_[v] = h;
            return;
        }
        int nxt = he_[after].rot_next;
        he_[after].rot_next = h;
        he_[h].rot_prev = after;
        he_[h].rot_next = nxt;
        he_[nxt].rot_prev = h;
    }

    void remove_edge(VertexId u, VertexId v) {
        int h = halfedge_between(u, v);
        if (h < 0) throw error("remove_edge: no such edge");
        unlink_halfedge(h);
        unlink_halfedge(twin(h));
        he_[h].alive = false;
        he_[twin(h)].alive = false;
        --edge_count_;
    }

    // --- faces ---

    void set_outer(int h) { outer_half_ = h; }
    int outer_half() const { return outer_half_; }

    std::vector<int> face_walk(int h) const {
        std::vector<int> out;
        int cur = h;
        do {
            out.push_back(cur);
            cur = face_next(cur);
        } while (cur != h);
        return out;
    }

    // all faces as half-edge orbits; the orbit containing outer_half first
    std::vector<std::vector<int>> faces() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(he_.size(), 0);
        auto emit = [&](int h0) {
            if (h0 < 0 || !he_[h0].alive || seen[h0]) return;
            std::vector<int> walk = face_walk(h0);
            for (int h : walk) seen[h] = 1;
            out.push_back(std::move(walk));
        };
        emit(outer_half_);
        for (int h = 0; h < static_cast<int>(he_.size()); ++h)
            if (he_[h].alive && !seen[h]) emit(h);
        return out;
    }

    bool euler_ok() const {
        int v = 0;
        for (VertexId i = 0; i < vertex_count(); ++i)
            if (first_out_[i] >= 0) ++v;
        int f = static_cast<int>(faces().size());
        return v - edge_count_ + f == 2;
    }

private:
    void unlink_halfedge(int h) {
        VertexId v = he_[h].origin;
        int p = he_[h].rot_prev, n = he_[h].rot_next;
        if (p == h) {
            first_out_[v] = -1;
        } else {
            he_[p].rot_next = n;
            he_[n].rot_prev = p;
            if (first_out_[v] == h) first_out_[v] = n;
        }
    }

    std::vector<HalfEdge> he_;
    std::vector<std::string> names_;
    std::map<std::string, VertexId> name_index_;
    std::vector<int> first_out_;
    std::vector<int> insertion_order_;
    int outer_half_ = -1;
    int edge_count_ = 0;
};

namespace detail {
inline std::array<VertexId, 3> sorted_triple(VertexId a, VertexId b, VertexId c) {
    std::array<VertexId, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}
} // namespace detail

// Live index of the current inner triangular faces, keyed by vertex set and
// remembering the ccw boundary order. Only valid while the graph is a plane
// 3-tree under construction.
class FaceIndex {
public:
    void add(VertexId a, VertexId b, VertexId c) {
        faces_[detail::sorted_triple(a, b, c)] = {a, b, c};
    }
    void remove(VertexId a, VertexId b, VertexId c) {
        faces_.erase(detail::sorted_triple(a, b, c));
    }
    // ccw triple, or nullptr
    const std::array<VertexId, 3>* find(VertexId a, VertexId b, VertexId c) const {
        auto it = faces_.find(detail::sorted_triple(a, b, c));
        return it == faces_.end() ? nullptr : &it->second;
    }
    size_t size() const { return faces_.size(); }

private:
    std::map<std::array<VertexId, 3>, std::array<VertexId, 3>> faces_;
};

// A plane 3-tree bundled with its construction recipe and live face index.
struct Plane3Tree {
    PlaneGraph g;
    InsertionSequence seq;
    FaceIndex inner_faces;
};

// Inserts a new vertex into the inner face with ccw boundary (x1,x2,x3).
// Rotation bookkeeping: the wedge of the face at corner xi lies ccw between
// xi->x(i+1) and its rot_next, which is xi->x(i-1).
inline VertexId insert_vertex_into_face(PlaneGraph& g, FaceIndex& faces, const std::string& name,
                                        const std::array<VertexId, 3>& ccw) {
    VertexId v = g.add_vertex(name);
    VertexId x1 = ccw[0], x2 = ccw[1], x3 = ccw[2];
    int h12 = g.halfedge_between(x1, x2);
    int h23 = g.halfedge_between(x2, x3);
    int h31 = g.halfedge_between(x3, x1);
    if (h12 < 0 || h23 < 0 || h31 < 0) throw error("TargetFaceNotFound: boundary missing");

    int e1 = g.new_edge(x1, v);  // e1 = x1->v, twin = v->x1
    int e2 = g.new_edge(x2, v);
    int e3 = g.new_edge(x3, v);
    g.splice_after(e1, h12);
    g.splice_after(e2, h23);
    g.splice_after(e3, h31);
    // ccw rotation at v is (x1, x2, x3)
    g.splice_after(PlaneGraph::twin(e1), -1);
    g.splice_after(PlaneGraph::twin(e2), PlaneGraph::twin(e1));
    g.splice_after(PlaneGraph::twin(e3), PlaneGraph::twin(e2));

    faces.remove(x1, x2, x3);
    faces.add(x1, x2, v);
    faces.add(x2, x3, v);
    faces.add(x3, x1, v);
    return v;
}

// [OP] build_plane_3tree
inline Plane3Tree build_plane_3tree(const InsertionSequence& seq) {
    Plane3Tree t;
    t.seq = seq;
    PlaneGraph& g = t.g;
    if (seq.base[0] == seq.base[1] || seq.base[1] == seq.base[2] || seq.base[0] == seq.base[2])
        throw error("DuplicateVertex: base triangle");
    VertexId a = g.add_vertex(seq.base[0]);
    VertexId b = g.add_vertex(seq.base[1]);
    VertexId c = g.add_vertex(seq.base[2]);
    g.set_insertion_order(a, 0);
    g.set_insertion_order(b, 1);
    g.set_insertion_order(c, 2);
    int eab = g.new_edge(a, b);
    int ebc = g.new_edge(b, c);
    int eca = g.new_edge(c, a);
    // rotation: at a ccw (b, c); at b ccw (c, a); at c ccw (a, b); this makes
    // the walk a->b->c->a the inner face and the base triple read ccw inside.
    g.splice_after(eab, -1);
    g.splice_after(PlaneGraph::twin(eca), eab);
    g.splice_after(ebc, -1);
    g.splice_after(PlaneGraph::twin(eab), ebc);
    g.splice_after(eca, -1);
    g.splice_after(PlaneGraph::twin(ebc), eca);
    g.set_outer(PlaneGraph::twin(eab));  // left of b->a is the outer face
    t.inner_faces.add(a, b, c);

    int order = 3;
    for (const auto& step : seq.steps) {
        std::array<VertexId, 3> want;
        for (int i = 0; i < 3; ++i) {
            if (!g.has_vertex(step.face[i]))
                throw error("TargetFaceNotFound: unknown vertex " + step.face[i]);
            want[i] = g.vertex(step.face[i]);
        }
        const auto* ccw = t.inner_faces.find(want[0], want[1], want[2]);
        if (!ccw) throw error("TargetFaceNotFound: " + step.face[0] + "," + step.face[1] + "," +
                              step.face[2]);
        VertexId v = insert_vertex_into_face(g, t.inner_faces, step.v, *ccw);
        g.set_insertion_order(v, order++);
    }
    return t;
}

// [TYPE] LevelAssignment
struct Levels {
    std::vector<int> level;  // by vertex id
    int of(VertexId v) const { return level[v]; }
    int max_level() const {
        int m = 0;
        for (int l : level) m = std::max(m, l);
        return m;
    }
    bool operator==(const Levels& o) const { return level == o.level; }
};

// [OP] compute_levels: incremental rule, never subset search.
inline Levels compute_levels(const PlaneGraph& g, const InsertionSequence& seq) {
    Levels lv;
    lv.level.assign(g.vertex_count(), -1);
    for (int i = 0; i < 3; ++i) lv.level[g.vertex(seq.base[i])] = 0;
    for (const auto& step : seq.steps) {
        int m = INT32_MAX;
        for (const auto& fn : step.face) m = std::min(m, lv.level[g.vertex(fn)]);
        if (m < 0) throw error("compute_levels: step references later vertex");
        lv.level[g.vertex(step.v)] = m + 1;
    }
    return lv;
}

enum class EdgeKind { Balanced, Tilted };

// [TYPE] EdgeClass
struct EdgeClassification {
    // keyed by the half-edge pair index (h/2)
    std::vector<EdgeKind> kind;
    EdgeKind of_halfedge(int h) const { return kind[h / 2]; }
};

// [OP] classify_edges
inline EdgeClassification classify_edges(const PlaneGraph& g, const Levels& lv) {
    EdgeClassification ec;
    ec.kind.assign(g.halfedge_count() / 2, EdgeKind::Balanced);
    for (int h = 0; h < g.halfedge_count(); h += 2) {
        if (!g.alive(h)) continue;
        ec.kind[h / 2] = lv.of(g.origin(h)) == lv.of(g.target(h)) ? EdgeKind::Balanced
                                                                  : EdgeKind::Tilted;
    }
    return ec;
}

// A plane semi-partial 3-tree: the reduced graph plus its covering 3-tree and
// removal list. Levels and edge classes always come from the covering tree.
struct SemiPartial3Tree {
    Plane3Tree cover;
    std::vector<std::pair<std::string, std::string>> removed;
    PlaneGraph reduced;  // cover minus removed edges (same vertex ids)
    Levels levels;

    bool edge_present(VertexId u, VertexId v) const { return reduced.has_edge(u, v); }
};

// [OP] delete_tilted_edges
inline SemiPartial3Tree delete_tilted_edges(
    const Plane3Tree& t, const Levels& lv,
    const std::vector<std::pair<std::string, std::string>>& removals) {
    SemiPartial3Tree sp;
    sp.cover = t;
    sp.levels = lv;
    sp.reduced = t.g;
    EdgeClassification ec = classify_edges(t.g, lv);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [un, vn] : removals) {
        VertexId u = t.g.vertex(un), v = t.g.vertex(vn);
        int h = t.g.halfedge_between(u, v);
        if (h < 0) throw error("NotTilted: no such edge " + un + "-" + vn);
        if (ec.of_halfedge(h) != EdgeKind::Tilted)
            throw error("NotTilted: " + un + "-" + vn + " is balanced");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) continue;
        sp.reduced.remove_edge(u, v);
        sp.removed.emplace_back(un, vn);
    }
    return sp;
}

inline SemiPartial3Tree as_semi_partial(const Plane3Tree& t) {
    SemiPartial3Tree sp;
    sp.cover = t;
    sp.levels = compute_levels(t.g, t.seq);
    sp.reduced = t.g;
    return sp;
}

// Label-preserving equality of plane graphs: same vertex names, same edges,
// same rotation system (up to cyclic shifts), same outer face orbit.
inline bool plane_equal(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        if (!b.has_vertex(a.name(v))) return false;
        VertexId w = b.vertex(a.name(v));
        std::vector<VertexId> na = a.neighbors_ccw(v);
        std::vector<VertexId> nb = b.neighbors_ccw(w);
        if (na.size() != nb.size()) return false;
        if (na.empty()) continue;
        std::vector<std::string> sa, sb;
        for (VertexId x : na) sa.push_back(a.name(x));
        for (VertexId x : nb) sb.push_back(b.name(x));
        // align cyclic rotation
        auto it = std::find(sb.begin(), sb.end(), sa[0]);
        if (it == sb.end()) return false;
        size_t off = static_cast<size_t>(it - sb.begin());
        for (size_t i = 0; i < sa.size(); ++i)
            if (sa[i] != sb[(off + i) % sb.size()]) return false;
    }
    // outer face orbit as a cyclic sequence of vertex names
    auto outer_names = [](const PlaneGraph& g) {
        std::vector<std::string> out;
        for (int h : g.face_walk(g.outer_half())) out.push_back(g.name(g.origin(h)));
        return out;
    };
    std::vector<std::string> oa = outer_names(a), ob = outer_names(b);
    if (oa.size() != ob.size()) return false;
    for (size_t off = 0; off < ob.size(); ++off) {
        bool ok = true;
        for (size_t i = 0; i < oa.size() && ok; ++i) ok = oa[i] == ob[(off + i) % ob.size()];
        if (ok) return true;
    }
    return false;
}

} // namespace slopes

#pragma once

#include "slopes/plane_graph.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace slopes {

// Builds a plane graph from explicit ccw neighbor lists (indices into names).
inline PlaneGraph plane_graph_from_rotations(const std::vector<std::string>& names,
                                             const std::vector<std::vector<int>>& nbrs) {
    PlaneGraph g;
    for (const auto& n : names) g.add_vertex(n);
    std::map<std::pair<int, int>, int> made;
    for (int u = 0; u < static_cast<int>(names.size()); ++u) {
        int prev = -1;
        for (int w : nbrs[u]) {
            int h;
            auto it = made.find({w, u});
            if (it != made.end()) {
                h = PlaneGraph::twin(it->second);
            } else {
                h = g.new_edge(u, w);
                made[{u, w}] = h;
            }
            g.splice_after(h, prev);
            prev = h;
        }
    }
    return g;
}

// One triangular face of a bubble, in the frame the embedders use: the top
// edge runs from left_top to right_top, the bottom vertex hangs below it, and
// children lie across the left edge (left_top,bottom) and right edge
// (bottom,right_top). All ids are host-graph vertex ids.
struct BubbleFace {
    VertexId left_top = -1, right_top = -1, bottom = -1;
    int left_child = -1, right_child = -1;  // indices into Bubble::faces
};

// [TYPE] Bubble. Trivial bubbles have no faces. `mirrored` marks bubbles that
// sit on the other side of their spine edge; their face walks were taken in
// reversed orientation so that a standard embedding followed by a reflection
// realizes the original rotation system.
struct Bubble {
    VertexId root_inner = -1;  // spine endpoint closer to the tripod center
    VertexId root_outer = -1;
    VertexId host = -1;        // host-triangle corner this bubble faces
    bool mirrored = false;
    std::vector<BubbleFace> faces;  // faces[0] is the root face when nontrivial
    bool trivial() const { return faces.empty(); }

    std::vector<VertexId> interior_vertices() const {
        std::vector<VertexId> out;
        for (const auto& f : faces) out.push_back(f.bottom);
        return out;
    }
    std::vector<VertexId> all_vertices() const {
        std::vector<VertexId> out{root_inner, root_outer};
        for (const auto& f : faces) out.push_back(f.bottom);
        return out;
    }
};

// [TYPE] Leg: a spine path (starting at the tripod center) with a double
// bubble over every spine edge.
struct DoubleBubble {
    VertexId inner = -1, outer = -1;  // spine edge endpoints
    Bubble low;   // faces the ccw-earlier host corner; drawn below the spine
    Bubble high;  // faces the ccw-later host corner; drawn above, mirrored
};

struct Leg {
    VertexId host_a = -1, host_b = -1;  // ccw-consecutive host pair
    std::vector<VertexId> spine;        // spine[0] = center
    std::vector<DoubleBubble> bubbles;  // bubbles[i] over (spine[i],spine[i+1])
};

// [TYPE] Tripod
struct Tripod {
    VertexId center = -1;
    std::array<VertexId, 3> host{};  // ccw triple (x,y,z) of the target face
    int level = 0;
    std::array<Leg, 3> legs;  // legs for pairs (x,y),(y,z),(z,x)
    std::vector<VertexId> vertices;

    int max_degree_within(const PlaneGraph& g) const {
        int d = 0;
        std::set<VertexId> mine(vertices.begin(), vertices.end());
        for (VertexId v : vertices) {
            int k = 0;
            for (VertexId w : g.neighbors_ccw(v))
                if (mine.count(w)) ++k;
            d = std::max(d, k);
        }
        return d;
    }
};

// [TYPE] LabelledTripod
struct LabelledTripod {
    Tripod tripod;
    std::set<VertexId> relevant;
};

// [TYPE] TripodInsertion
struct TripodInsertion {
    std::array<VertexId, 3> target_face{};  // ccw, level k-1
    LabelledTripod labelled;
    std::vector<std::pair<VertexId, VertexId>> tilted_edges;  // (tripod vertex, host corner)
};

namespace detail {

// Extraction context over the level-k submap of the covering tree.
struct BubbleExtractor {
    const PlaneGraph& sub;
    const std::vector<VertexId>& sub_to_host;
    const std::vector<char>& inner_face;   // by face id
    const std::vector<int>& face_of_he;    // submap half-edge -> face id

    // Extracts the bubble whose root face lies left of submap half-edge h.
    // For mirrored bubbles the walk is interpreted in reversed orientation.
    Bubble extract(int h, bool mirrored, VertexId root_inner_host, VertexId root_outer_host,
                   VertexId host_corner) const {
        Bubble b;
        b.root_inner = root_inner_host;
        b.root_outer = root_outer_host;
        b.host = host_corner;
        b.mirrored = mirrored;
        if (h < 0 || !inner_face[face_of_he[h]]) return b;  // trivial
        extract_face(b, h, mirrored);
        return b;
    }

private:
    int extract_face(Bubble& b, int h, bool mirrored) const {
        int r1 = sub.face_next(h);
        int r2 = sub.face_next(r1);
        if (sub.face_next(r2) != h) throw error("NotAThreeTree: nontriangular bubble face");
        BubbleFace f;
        if (!mirrored) {
            f.right_top = sub_to_host[sub.origin(h)];
            f.left_top = sub_to_host[sub.target(h)];
            f.bottom = sub_to_host[sub.target(r1)];
        } else {
            f.right_top = sub_to_host[sub.target(h)];
            f.left_top = sub_to_host[sub.origin(h)];
            f.bottom = sub_to_host[sub.target(r1)];
        }
        int idx = static_cast<int>(b.faces.size());
        b.faces.push_back(f);
        int left_he = !mirrored ? r1 : r2;
        int right_he = !mirrored ? r2 : r1;
        int lt = PlaneGraph::twin(left_he);
        int rt = PlaneGraph::twin(right_he);
        if (inner_face[face_of_he[lt]]) b.faces[idx].left_child = extract_face(b, lt, mirrored);
        if (inner_face[face_of_he[rt]]) b.faces[idx].right_child = extract_face(b, rt, mirrored);
        return idx;
    }
};

} // namespace detail

// [OP] decompose_tripods: splits the covering 3-tree into its sequence of
// tripod insertions into balanced faces, ordered by level then by center
// insertion order. Tilted edges are reported as present in the reduced graph.
inline std::vector<TripodInsertion> decompose_tripods(const SemiPartial3Tree& sp) {
    const PlaneGraph& H = sp.cover.g;
    const Levels& lv = sp.levels;
    const int n = H.vertex_count();
    if (n < 3) throw error("NotAThreeTree: fewer than three vertices");

    // Recover the resolved ccw triple of every insertion step from H itself:
    // the inserted vertex's rotation restricted to its three face corners is
    // their insertion-time ccw order (later edges only interleave).
    std::map<VertexId, std::array<VertexId, 3>> step_ccw;
    for (const auto& st : sp.cover.seq.steps) {
        VertexId v = H.vertex(st.v);
        std::array<VertexId, 3> face{};
        for (int j = 0; j < 3; ++j) face[j] = H.vertex(st.face[j]);
        std::vector<VertexId> order;
        for (VertexId w : H.neighbors_ccw(v)) {
            if (w == face[0] || w == face[1] || w == face[2]) order.push_back(w);
        }
        if (order.size() != 3) throw error("NotAThreeTree: corrupt step face");
        step_ccw[v] = {order[0], order[1], order[2]};
    }

    // group level-k vertices into connected components of the induced subgraph
    std::vector<TripodInsertion> out;
    int max_lv = lv.max_level();
    std::vector<char> visited(n, 0);
    for (int k = 1; k <= max_lv; ++k) {
        struct Comp {
            std::vector<VertexId> verts;
            int first_order;
        };
        std::vector<Comp> comps;
        for (VertexId s = 0; s < n; ++s) {
            if (visited[s] || lv.of(s) != k) continue;
            Comp c;
            c.first_order = H.insertion_order(s);
            std::vector<VertexId> stack{s};
            visited[s] = 1;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                c.verts.push_back(v);
                c.first_order = std::min(c.first_order, H.insertion_order(v));
                for (VertexId w : H.neighbors_ccw(v)) {
                    if (!visited[w] && lv.of(w) == k) {
                        visited[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            comps.push_back(std::move(c));
        }
        std::sort(comps.begin(), comps.end(),
                  [](const Comp& a, const Comp& b) { return a.first_order < b.first_order; });

        for (auto& comp : comps) {
            std::set<VertexId> mine(comp.verts.begin(), comp.verts.end());
            // center: the unique component vertex adjacent to three level-(k-1) vertices
            VertexId center = -1;
            std::array<VertexId, 3> host{};
            for (VertexId v : comp.verts) {
                std::vector<VertexId> down;
                for (VertexId w : H.neighbors_ccw(v))
                    if (lv.of(w) == k - 1) down.push_back(w);
                if (down.size() == 3) {
                    if (center != -1) throw error("NotAThreeTree: two tripod centers");
                    center = v;
                }
            }
            if (center < 0) throw error("NotAThreeTree: no tripod center");
            host = step_ccw.at(center);

            Tripod t;
            t.center = center;
            t.host = host;
            t.level = k;
            t.vertices = comp.verts;
            std::sort(t.vertices.begin(), t.vertices.end(), [&](VertexId a, VertexId b) {
                return H.insertion_order(a) < H.insertion_order(b);
            });

            // submap of the component with inherited rotation
            std::vector<std::string> names;
            std::vector<VertexId> sub_to_host;
            std::map<VertexId, int> host_to_sub;
            for (VertexId v : t.vertices) {
                host_to_sub[v] = static_cast<int>(names.size());
                names.push_back(H.name(v));
                sub_to_host.push_back(v);
            }
            std::vector<std::vector<int>> nbrs(names.size());
            for (VertexId v : t.vertices) {
                for (VertexId w : H.neighbors_ccw(v))
                    if (mine.count(w)) nbrs[host_to_sub[v]].push_back(host_to_sub[w]);
            }
            PlaneGraph sub = plane_graph_from_rotations(names, nbrs);

            // face orbits of the submap; identify inner faces by the level of
            // the third vertex of the corresponding host face
            std::vector<int> face_of_he(sub.halfedge_count(), -1);
            std::vector<char> inner_face;
            for (int h = 0; h < sub.halfedge_count(); ++h) {
                if (!sub.alive(h) || face_of_he[h] >= 0) continue;
                int fid = static_cast<int>(inner_face.size());
                std::vector<int> walk = sub.face_walk(h);
                for (int e : walk) face_of_he[e] = fid;
                VertexId hu = sub_to_host[sub.origin(h)];
                VertexId hv = sub_to_host[sub.target(h)];
                int hh = H.halfedge_between(hu, hv);
                VertexId third = H.target(H.face_next(hh));
                inner_face.push_back(lv.of(third) >= k ? 1 : 0);
            }

            detail::BubbleExtractor ex{sub, sub_to_host, inner_face, face_of_he};

            // legs per ccw host pair
            for (int li = 0; li < 3; ++li) {
                VertexId a = host[li], b = host[(li + 1) % 3];
                Leg leg;
                leg.host_a = a;
                leg.host_b = b;
                leg.spine.push_back(center);
                std::set<VertexId> spine_set;
                for (VertexId v : comp.verts) {
                    if (v == center) continue;
                    if (H.has_edge(v, a) && H.has_edge(v, b)) spine_set.insert(v);
                }
                VertexId cur = center;
                while (true) {
                    VertexId next = -1;
                    for (VertexId w : H.neighbors_ccw(cur)) {
                        if (spine_set.count(w)) {
                            if (next != -1) throw error("NotAThreeTree: branching spine");
                            next = w;
                        }
                    }
                    if (next == -1) break;
                    spine_set.erase(next);
                    leg.spine.push_back(next);
                    cur = next;
                }
                if (!spine_set.empty()) throw error("NotAThreeTree: disconnected spine");

                for (size_t i = 0; i + 1 < leg.spine.size(); ++i) {
                    VertexId su = leg.spine[i], sv = leg.spine[i + 1];
                    int h_out = sub.halfedge_between(host_to_sub[su], host_to_sub[sv]);
                    if (h_out < 0) throw error("NotAThreeTree: spine edge missing");
                    DoubleBubble db;
                    db.inner = su;
                    db.outer = sv;
                    // left of outward faces the ccw-later host corner b
                    db.high = ex.extract(h_out, true, su, sv, b);
                    db.low = ex.extract(PlaneGraph::twin(h_out), false, su, sv, a);
                    leg.bubbles.push_back(std::move(db));
                }
                t.legs[li] = std::move(leg);
            }

            // sanity: every component vertex appears exactly once as center,
            // spine vertex, or bubble interior vertex
            {
                std::map<VertexId, int> hits;
                hits[t.center]++;
                for (const auto& leg : t.legs) {
                    for (size_t i = 1; i < leg.spine.size(); ++i) hits[leg.spine[i]]++;
                    for (const auto& db : leg.bubbles) {
                        for (VertexId v : db.low.interior_vertices()) hits[v]++;
                        for (VertexId v : db.high.interior_vertices()) hits[v]++;
                    }
                }
                if (hits.size() != mine.size()) throw error("NotAThreeTree: anatomy mismatch");
                for (auto& [v, c] : hits)
                    if (c != 1 || !mine.count(v)) throw error("NotAThreeTree: anatomy mismatch");
            }

            TripodInsertion ins;
            ins.target_face = host;
            ins.labelled.tripod = std::move(t);
            for (VertexId v : ins.labelled.tripod.vertices) {
                for (VertexId hcorner : host) {
                    if (sp.reduced.has_edge(v, hcorner)) {
                        ins.tilted_edges.emplace_back(v, hcorner);
                        ins.labelled.relevant.insert(v);
                    }
                }
            }
            out.push_back(std::move(ins));
        }
    }
    return out;
}

// [OP] label_relevance: relevance labels from an explicit tilted edge list.
inline LabelledTripod label_relevance(const Tripod& t, const std::array<VertexId, 3>& host,
                                      const std::vector<std::pair<VertexId, VertexId>>& tilted) {
    LabelledTripod lt;
    lt.tripod = t;
    std::set<VertexId> mine(t.vertices.begin(), t.vertices.end());
    for (const auto& [v, h] : tilted) {
        if (!mine.count(v) || (h != host[0] && h != host[1] && h != host[2]))
            throw error("label_relevance: edge not between tripod and host");
        lt.relevant.insert(v);
    }
    return lt;
}

inline bool bubble_contains_relevant(const Bubble& b, const std::set<VertexId>& relevant) {
    if (relevant.count(b.root_inner) || relevant.count(b.root_outer)) return true;
    for (const auto& f : b.faces)
        if (relevant.count(f.bottom)) return true;
    return false;
}

inline int count_relevant_bubbles(const LabelledTripod& lt) {
    int c = 0;
    for (const auto& leg : lt.tripod.legs)
        for (const auto& db : leg.bubbles) {
            if (bubble_contains_relevant(db.low, lt.relevant)) ++c;
            if (bubble_contains_relevant(db.high, lt.relevant)) ++c;
        }
    return c;
}

// [OP] bubble_dual: the rooted binary tree of a nontrivial bubble, with the
// longest left-child and right-child chains (both must stay below the max
// degree of the bubble).
struct BubbleDual {
    const Bubble* bubble;
    int root = 0;
    int max_left_chain = 0;
    int max_right_chain = 0;
};

inline BubbleDual bubble_dual(const Bubble& b) {
    if (b.trivial()) throw error("TrivialBubble");
    BubbleDual d;
    d.bubble = &b;
    // chase chains
    for (size_t i = 0; i < b.faces.size(); ++i) {
        int len = 1, cur = static_cast<int>(i);
        while (b.faces[cur].left_child >= 0) {
            cur = b.faces[cur].left_child;
            ++len;
        }
        d.max_left_chain = std::max(d.max_left_chain, len);
        len = 1;
        cur = static_cast<int>(i);
        while (b.faces[cur].right_child >= 0) {
            cur = b.faces[cur].right_child;
            ++len;
        }
        d.max_right_chain = std::max(d.max_right_chain, len);
    }
    return d;
}

// [OP] partition_leg: split a leg into parts, each either a single relevant
// double bubble or a maximal run of irrelevant ones.
struct LegPart {
    bool relevant = false;
    int first = 0, last = 0;  // inclusive range of double-bubble indices
};

inline std::vector<LegPart> partition_leg(const Leg& leg, const std::set<VertexId>& relevant) {
    std::vector<LegPart> parts;
    for (size_t i = 0; i < leg.bubbles.size(); ++i) {
        bool rel = bubble_contains_relevant(leg.bubbles[i].low, relevant) ||
                   bubble_contains_relevant(leg.bubbles[i].high, relevant);
        if (rel) {
            parts.push_back(LegPart{true, static_cast<int>(i), static_cast<int>(i)});
        } else if (!parts.empty() && !parts.back().relevant &&
                   parts.back().last == static_cast<int>(i) - 1) {
            parts.back().last = static_cast<int>(i);
        } else {
            parts.push_back(LegPart{false, static_cast<int>(i), static_cast<int>(i)});
        }
    }
    return parts;
}

// Emits the insertion steps that rebuild one tripod insertion.
inline void append_replay_steps(const PlaneGraph& names_from, const TripodInsertion& ins,
                                std::vector<InsertionStep>& steps) {
    const Tripod& t = ins.labelled.tripod;
    auto nm = [&](VertexId v) { return names_from.name(v); };
    steps.push_back({nm(t.center), {nm(ins.target_face[0]), nm(ins.target_face[1]),
                                    nm(ins.target_face[2])}});
    for (const auto& leg : t.legs) {
        for (size_t i = 1; i < leg.spine.size(); ++i)
            steps.push_back(
                {nm(leg.spine[i]), {nm(leg.host_a), nm(leg.host_b), nm(leg.spine[i - 1])}});
        for (const auto& db : leg.bubbles) {
            for (const Bubble* b : {&db.low, &db.high}) {
                // pre-order: parent face before its children
                std::vector<int> stack;
                if (!b->trivial()) stack.push_back(0);
                std::vector<int> order;
                while (!stack.empty()) {
                    int f = stack.back();
                    stack.pop_back();
                    order.push_back(f);
                    if (b->faces[f].right_child >= 0) stack.push_back(b->faces[f].right_child);
                    if (b->faces[f].left_child >= 0) stack.push_back(b->faces[f].left_child);
                }
                for (int f : order) {
                    const BubbleFace& bf = b->faces[f];
                    steps.push_back(
                        {nm(bf.bottom), {nm(bf.left_top), nm(bf.right_top), nm(b->host)}});
                }
            }
        }
    }
}

// Replays a decomposition into a fresh covering 3-tree plus removal list.
inline SemiPartial3Tree replay_decomposition(const SemiPartial3Tree& original,
                                             const std::vector<TripodInsertion>& tripods) {
    InsertionSequence seq;
    seq.base = original.cover.seq.base;
    const PlaneGraph& H = original.cover.g;
    for (const auto& ins : tripods) append_replay_steps(H, ins, seq.steps);
    Plane3Tree rebuilt = build_plane_3tree(seq);
    Levels lv = compute_levels(rebuilt.g, seq);
    // removals: tilted cover edges minus the tilted edges present per tripod
    std::vector<std::pair<std::string, std::string>> removals;
    for (const auto& ins : tripods) {
        std::set<std::pair<VertexId, VertexId>> present(ins.tilted_edges.begin(),
                                                        ins.tilted_edges.end());
        for (VertexId v : ins.labelled.tripod.vertices) {
            for (VertexId h : ins.target_face) {
                if (H.has_edge(v, h) && !present.count({v, h}))
                    removals.emplace_back(H.name(v), H.name(h));
            }
        }
    }
    return delete_tilted_edges(rebuilt, lv, removals);
}

} // namespace slopes

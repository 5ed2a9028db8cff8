#pragma once

// Test-only oracles, kept independent of the library's computation paths.

#include "slopes/plane_graph.hpp"
#include "slopes/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracles {

using namespace slopes;

// Brute-force level of every vertex of a plane (semi-partial) graph given by
// its covering plane graph `H` plus a list of erased edges: the smallest |V0|
// such that v lies on the outer face of (H - erased) - V0. Region containment
// is decided by merging H's faces across every absent edge; v is on the outer
// face iff one of its incident H-faces merges with the outer face. Working
// over the covering faces keeps vertices locatable even when all their edges
// were erased. Exponential; intended for n <= 12.
inline std::vector<int> subset_removal_levels(
    const PlaneGraph& H, const std::vector<std::pair<VertexId, VertexId>>& erased = {}) {
    const int n = H.vertex_count();
    std::vector<std::vector<int>> faces = H.faces();  // outer face first
    std::vector<int> face_of_he(H.halfedge_count(), -1);
    for (size_t f = 0; f < faces.size(); ++f)
        for (int h : faces[f]) face_of_he[h] = static_cast<int>(f);
    std::vector<char> edge_erased(H.halfedge_count() / 2, 0);
    for (auto [u, v] : erased) {
        int h = H.halfedge_between(u, v);
        if (h < 0) throw error("oracle: erased edge not in cover");
        edge_erased[h / 2] = 1;
    }

    std::vector<int> level(n, INT32_MAX);
    struct DSU {
        std::vector<int> p;
        explicit DSU(int m) : p(m) { std::iota(p.begin(), p.end(), 0); }
        int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
        void unite(int a, int b) { p[find(a)] = find(b); }
    };

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int removed = __builtin_popcount(mask);
        DSU dsu(static_cast<int>(faces.size()));
        for (int h = 0; h < H.halfedge_count(); h += 2) {
            if (!H.alive(h)) continue;
            bool gone = edge_erased[h / 2] || (mask >> H.origin(h) & 1) ||
                        (mask >> H.target(h) & 1);
            if (gone) dsu.unite(face_of_he[h], face_of_he[PlaneGraph::twin(h)]);
        }
        int outer = dsu.find(0);
        for (VertexId v = 0; v < n; ++v) {
            if (mask >> v & 1) continue;
            if (removed >= level[v]) continue;
            bool exposed = false;
            for (int h : H.out_halfedges_ccw(v)) {
                if (dsu.find(face_of_he[h]) == outer ||
                    dsu.find(face_of_he[PlaneGraph::twin(h)]) == outer) {
                    exposed = true;
                    break;
                }
            }
            if (exposed) level[v] = removed;
        }
    }
    return level;
}

inline std::vector<int> subset_removal_levels(const SemiPartial3Tree& sp) {
    std::vector<std::pair<VertexId, VertexId>> erased;
    for (auto& [un, vn] : sp.removed)
        erased.emplace_back(sp.cover.g.vertex(un), sp.cover.g.vertex(vn));
    return subset_removal_levels(sp.cover.g, erased);
}

// Independent segment intersection decision through exact parametric algebra:
// solves a + s(b-a) = c + t(d-c) over the rationals and inspects the solution
// set, rather than using orientation predicates.
inline bool segments_conflict_parametric(const Point& a, const Point& b, const Point& c,
                                         const Point& d) {
    Vec u = b - a, v = d - c, w = c - a;
    Rat den = cross(u, v);
    auto is_endpoint_pair = [&](const Point& p) {
        return (p == a || p == b) && (p == c || p == d);
    };
    if (sgn(den) != 0) {
        Rat s = cross(w, v) / den;
        Rat t = cross(w, u) / den;
        if (s < 0 || s > 1 || t < 0 || t > 1) return false;
        Point p = lerp(a, b, s);
        return !is_endpoint_pair(p);
    }
    // parallel
    if (sgn(cross(u, w)) != 0) return false;  // distinct parallel lines
    // collinear: project on u
    Rat t0 = dot(c - a, u), t1 = dot(d - a, u), lo = std::min(t0, t1), hi = std::max(t0, t1);
    Rat s0(0), s1 = dot(u, u);
    Rat ilo = std::max(s0, lo), ihi = std::min(s1, hi);
    if (ilo > ihi) return false;
    if (ilo < ihi) return true;
    // single point of contact
    Point p = lerp(a, b, ilo / s1);
    return !is_endpoint_pair(p);
}

} // namespace oracles

#pragma once

#include "slopes/plane_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace slopes {

// splitmix64; self-contained so generated instances are byte-identical across
// platforms and standard libraries.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do { x = next(); } while (x >= lim);
        return x % n;
    }
    bool coin() { return next() & 1ull; }
};

struct GeneratedInstance {
    InsertionSequence seq;
    bool complete = true;  // false if the degree cap stalled growth before n
};

// Random plane 3-tree on n vertices: each step inserts into a face chosen
// uniformly among faces whose three corners all stay within the degree cap.
inline GeneratedInstance generate_plane3tree(int n, int delta_cap, uint64_t seed) {
    if (n < 3) throw error("InfeasibleParameters: n < 3");
    if (delta_cap < 3) throw error("InfeasibleParameters: delta < 3");
    Rng rng(seed);
    GeneratedInstance out;
    auto name = [](int i) { return "v" + std::to_string(i); };
    out.seq.base = {name(0), name(1), name(2)};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}};
    std::vector<int> deg{2, 2, 2};
    for (int v = 3; v < n; ++v) {
        std::vector<int> ok;
        for (size_t f = 0; f < faces.size(); ++f) {
            const auto& t = faces[f];
            if (deg[t[0]] < delta_cap && deg[t[1]] < delta_cap && deg[t[2]] < delta_cap)
                ok.push_back(static_cast<int>(f));
        }
        if (ok.empty()) {
            out.complete = false;
            return out;
        }
        int f = ok[rng.below(ok.size())];
        std::array<int, 3> t = faces[f];
        out.seq.steps.push_back({name(v), {name(t[0]), name(t[1]), name(t[2])}});
        deg.push_back(3);
        for (int c : t) ++deg[c];
        faces[f] = {t[0], t[1], v};
        faces.push_back({t[1], t[2], v});
        faces.push_back({t[2], t[0], v});
    }
    return out;
}

// Random plane semi-partial 3-tree: generate a capped 3-tree, then erase each
// tilted edge independently with probability 1/2.
struct GeneratedSemiPartial {
    InsertionSequence seq;
    std::vector<std::pair<std::string, std::string>> removed;
    bool complete = true;
};

inline GeneratedSemiPartial generate_semipartial3tree(int n, int delta_cap, uint64_t seed) {
    GeneratedInstance base = generate_plane3tree(n, delta_cap, seed);
    GeneratedSemiPartial out;
    out.seq = base.seq;
    out.complete = base.complete;
    Rng rng(seed ^ 0xabcdef1234567890ull);
    Plane3Tree t = build_plane_3tree(base.seq);
    Levels lv = compute_levels(t.g, base.seq);
    for (auto [u, v] : t.g.edges()) {
        if (lv.of(u) != lv.of(v) && rng.coin())
            out.removed.emplace_back(t.g.name(u), t.g.name(v));
    }
    return out;
}

// Spanning connected subgraph of a 3-tree with a degree cap; used to produce
// (partial 3-tree, covering 3-tree) input pairs.
struct GeneratedCoverPair {
    InsertionSequence cover;                                // builds H
    std::vector<std::pair<std::string, std::string>> f_edges;  // edges of F
};

inline GeneratedCoverPair generate_cover_pair(int n, int delta_f, uint64_t seed) {
    Rng rng(seed ^ 0x5bd1e995u);
    for (int attempt = 0;; ++attempt) {
        GeneratedCoverPair out;
        // H unconstrained; a plain random 3-tree
        GeneratedInstance h = generate_plane3tree(n, INT32_MAX, seed + attempt * 1315423911ull);
        out.cover = h.seq;
        Plane3Tree t = build_plane_3tree(h.seq);
        const PlaneGraph& H = t.g;
        std::vector<std::pair<VertexId, VertexId>> edges = H.edges();
        for (size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
        std::vector<int> parent(H.vertex_count());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::vector<int> deg(H.vertex_count(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::set<std::pair<VertexId, VertexId>> chosen;
        int joins = 0;
        for (auto [u, v] : edges) {
            if (find(u) != find(v) && deg[u] < delta_f && deg[v] < delta_f) {
                parent[find(u)] = find(v);
                ++deg[u];
                ++deg[v];
                chosen.insert(std::minmax(u, v));
                ++joins;
            }
        }
        if (joins != H.vertex_count() - 1) continue;  // capped greedy tree failed; retry
        for (auto [u, v] : edges) {
            if (!chosen.count(std::minmax(u, v)) && deg[u] < delta_f && deg[v] < delta_f &&
                rng.coin()) {
                ++deg[u];
                ++deg[v];
                chosen.insert(std::minmax(u, v));
            }
        }
        const PlaneGraph& G = t.g;
        for (auto [u, v] : chosen) out.f_edges.emplace_back(G.name(u), G.name(v));
        return out;
    }
}

} // namespace slopes

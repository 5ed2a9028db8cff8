#include <catch2/catch_amalgamated.hpp>

#include "slopes/plane_graph.hpp"
#include "slopes/tripod_decomp.hpp"
#include "slopes/generators.hpp"
#include "oracles.hpp"

using namespace slopes;

static InsertionSequence k3() { return {{"a", "b", "c"}, {}}; }

static InsertionSequence k4() {
    InsertionSequence s{{"a", "b", "c"}, {}};
    s.steps.push_back({"d", {"a", "b", "c"}});
    return s;
}

TEST_CASE("K3: base triangle only") {
    Plane3Tree t = build_plane_3tree(k3());
    CHECK(t.g.vertex_count() == 3);
    CHECK(t.g.edge_count() == 3);
    CHECK(t.inner_faces.size() == 1);
    CHECK(t.g.euler_ok());
    Levels lv = compute_levels(t.g, t.seq);
    for (int i = 0; i < 3; ++i) CHECK(lv.level[i] == 0);
    EdgeClassification ec = classify_edges(t.g, lv);
    for (auto k : ec.kind) CHECK(k == EdgeKind::Balanced);
}

TEST_CASE("K4: one insertion") {
    Plane3Tree t = build_plane_3tree(k4());
    CHECK(t.g.vertex_count() == 4);
    CHECK(t.g.edge_count() == 6);
    CHECK(t.inner_faces.size() == 3);
    CHECK(t.g.euler_ok());
    Levels lv = compute_levels(t.g, t.seq);
    CHECK(lv.of(t.g.vertex("d")) == 1);
    for (auto n : {"a", "b", "c"}) CHECK(lv.of(t.g.vertex(n)) == 0);
    EdgeClassification ec = classify_edges(t.g, lv);
    int balanced = 0, tilted = 0;
    for (int h = 0; h < t.g.halfedge_count(); h += 2)
        (ec.kind[h / 2] == EdgeKind::Balanced ? balanced : tilted)++;
    CHECK(balanced == 3);
    CHECK(tilted == 3);
}

TEST_CASE("build errors") {
    InsertionSequence dup{{"a", "b", "a"}, {}};
    CHECK_THROWS_AS(build_plane_3tree(dup), error);
    InsertionSequence dup2 = k4();
    dup2.steps.push_back({"d", {"a", "b", "d"}});
    CHECK_THROWS_AS(build_plane_3tree(dup2), error);
    InsertionSequence missing = k4();
    missing.steps.push_back({"e", {"a", "b", "c"}});  // face consumed by d
    CHECK_THROWS_AS(build_plane_3tree(missing), error);
}

TEST_CASE("random 50-step instance: counts and Euler") {
    GeneratedInstance gi = generate_plane3tree(53, 1 << 20, 42);
    REQUIRE(gi.complete);
    Plane3Tree t = build_plane_3tree(gi.seq);
    CHECK(t.g.vertex_count() == 53);
    CHECK(t.g.edge_count() == 3 * 50 + 3);  // 3n-6
    CHECK(t.inner_faces.size() == 2 * 50 + 1);
    CHECK(t.g.euler_ok());
}

TEST_CASE("level monotonicity along edges") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        GeneratedInstance gi = generate_plane3tree(40, 9, seed);
        Plane3Tree t = build_plane_3tree(gi.seq);
        Levels lv = compute_levels(t.g, t.seq);
        for (auto [u, v] : t.g.edges()) CHECK(std::abs(lv.of(u) - lv.of(v)) <= 1);
    }
}

TEST_CASE("levels equal subset-removal oracle on small instances") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        GeneratedInstance gi = generate_plane3tree(9, 1 << 20, seed * 7 + 1);
        Plane3Tree t = build_plane_3tree(gi.seq);
        Levels lv = compute_levels(t.g, t.seq);
        std::vector<int> oracle = oracles::subset_removal_levels(t.g);
        CHECK(lv.level == oracle);
    }
}

TEST_CASE("nested 8-vertex construction matches oracle") {
    InsertionSequence s{{"a", "b", "c"}, {}};
    s.steps.push_back({"d", {"a", "b", "c"}});
    s.steps.push_back({"e", {"a", "b", "d"}});
    s.steps.push_back({"f", {"a", "e", "d"}});
    s.steps.push_back({"g", {"a", "e", "f"}});
    s.steps.push_back({"h", {"g", "e", "f"}});
    s.steps.push_back({"j", {"e", "f", "h"}});
    s.steps.push_back({"k", {"f", "h", "j"}});
    s.steps.push_back({"m", {"h", "j", "k"}});
    Plane3Tree t = build_plane_3tree(s);
    Levels lv = compute_levels(t.g, t.seq);
    std::vector<int> oracle = oracles::subset_removal_levels(t.g);
    CHECK(lv.level == oracle);
    CHECK(lv.of(t.g.vertex("h")) == 2);
    CHECK(lv.of(t.g.vertex("m")) == 3);
}

TEST_CASE("delete tilted edges: empty removal is identity") {
    Plane3Tree t = build_plane_3tree(k4());
    Levels lv = compute_levels(t.g, t.seq);
    SemiPartial3Tree sp = delete_tilted_edges(t, lv, {});
    CHECK(plane_equal(sp.reduced, t.g));
}

TEST_CASE("K4 minus one spoke keeps center at level 1") {
    Plane3Tree t = build_plane_3tree(k4());
    Levels lv = compute_levels(t.g, t.seq);
    SemiPartial3Tree sp = delete_tilted_edges(t, lv, {{"d", "a"}});
    CHECK(sp.reduced.edge_count() == 5);
    CHECK(sp.reduced.euler_ok());
    std::vector<int> oracle = oracles::subset_removal_levels(sp);
    CHECK(oracle[t.g.vertex("d")] == 1);
    CHECK(sp.levels.of(t.g.vertex("d")) == 1);
}

TEST_CASE("removing a balanced edge is rejected") {
    Plane3Tree t = build_plane_3tree(k4());
    Levels lv = compute_levels(t.g, t.seq);
    CHECK_THROWS_AS(delete_tilted_edges(t, lv, {{"a", "b"}}), error);
}

TEST_CASE("random removals never change the level map (small oracle)") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        GeneratedInstance gi = generate_plane3tree(10, 1 << 20, seed * 13);
        Plane3Tree t = build_plane_3tree(gi.seq);
        Levels lv = compute_levels(t.g, t.seq);
        EdgeClassification ec = classify_edges(t.g, lv);
        Rng rng(seed);
        std::vector<std::pair<std::string, std::string>> removals;
        for (auto [u, v] : t.g.edges())
            if (lv.of(u) != lv.of(v) && rng.coin())
                removals.emplace_back(t.g.name(u), t.g.name(v));
        SemiPartial3Tree sp = delete_tilted_edges(t, lv, removals);
        CHECK(sp.reduced.euler_ok());
        std::vector<int> oracle = oracles::subset_removal_levels(sp);
        CHECK(sp.levels.level == oracle);
    }
}

TEST_CASE("larger instance: deletion leaves covering levels intact") {
    GeneratedInstance gi = generate_plane3tree(30, 1 << 20, 77);
    Plane3Tree t = build_plane_3tree(gi.seq);
    Levels lv = compute_levels(t.g, t.seq);
    Rng rng(5);
    std::vector<std::pair<std::string, std::string>> removals;
    for (auto [u, v] : t.g.edges()) {
        if (removals.size() >= 10) break;
        if (lv.of(u) != lv.of(v) && rng.coin()) removals.emplace_back(t.g.name(u), t.g.name(v));
    }
    SemiPartial3Tree sp = delete_tilted_edges(t, lv, removals);
    CHECK(sp.reduced.edge_count() == t.g.edge_count() - static_cast<int>(removals.size()));
    CHECK(sp.reduced.euler_ok());
}

TEST_CASE("plane_equal detects rotation differences") {
    Plane3Tree t1 = build_plane_3tree(k4());
    Plane3Tree t2 = build_plane_3tree(k4());
    CHECK(plane_equal(t1.g, t2.g));
    // same abstract graph, mirrored embedding
    std::vector<std::string> names = {"a", "b", "c", "d"};
    std::vector<std::vector<int>> nbrs = {
        {1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};  // K4 rotations
    PlaneGraph g = plane_graph_from_rotations(names, nbrs);
    std::vector<std::vector<int>> nbrs_m = {
        {2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {2, 1, 0}};  // reversed cycles
    PlaneGraph gm = plane_graph_from_rotations(names, nbrs_m);
    g.set_outer(g.halfedge_between(1, 0));
    gm.set_outer(gm.halfedge_between(1, 0));
    CHECK_FALSE(plane_equal(g, gm));
}

#include <catch2/catch_amalgamated.hpp>

#include "slopes/geometry.hpp"
#include "slopes/rotation_table.hpp"
#include "slopes/slope_table.hpp"
#include "slopes/generators.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace slopes;

static Point pt(long x, long y) { return Point(Rat(x), Rat(y)); }

TEST_CASE("undirected and directed slopes") {
    CHECK(slope_of(pt(0, 0), pt(1, 0)) == (Dir{Int(1), Int(0)}));
    CHECK(slope_of(pt(0, 0), pt(1, 1)) == (Dir{Int(1), Int(1)}));
    CHECK(slope_of(pt(0, 0), pt(-2, 2)) == slope_of(pt(0, 0), pt(-1, 1)));
    CHECK(slope_of(pt(0, 0), pt(1, 0)) == slope_of(pt(1, 0), pt(0, 0)));
    CHECK(directed_slope_of(pt(0, 0), pt(1, 0)) == (DirectedDir{Int(1), Int(0)}));
    CHECK_FALSE(directed_slope_of(pt(0, 0), pt(1, 0)) == directed_slope_of(pt(1, 0), pt(0, 0)));
    CHECK_THROWS_AS(slope_of(pt(3, 4), pt(3, 4)), error);
}

TEST_CASE("segment conflicts: spec examples") {
    CHECK(segments_conflict(pt(0, 0), pt(2, 0), pt(1, -1), pt(1, 1)));
    CHECK_FALSE(segments_conflict(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 1)));
    // collinear overlap
    CHECK(segments_conflict(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)));
    // collinear touching at shared endpoint only
    CHECK_FALSE(segments_conflict(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 0)));
    // T-contact in segment interior
    CHECK(segments_conflict(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 5)));
}

TEST_CASE("segment conflict random oracle") {
    Rng rng(987654321ull);
    for (int i = 0; i < 1000; ++i) {
        auto rp = [&]() { return pt(static_cast<long>(rng.below(13)) - 6,
                                    static_cast<long>(rng.below(13)) - 6); };
        Point a = rp(), b = rp(), c = rp(), d = rp();
        if (a == b || c == d) continue;
        CHECK(segments_conflict(a, b, c, d) == oracles::segments_conflict_parametric(a, b, c, d));
    }
}

TEST_CASE("rotation table: exactness and angular error") {
    const auto& T = RotationTable::instance();
    for (int k = 0; k < RotationTable::kSteps; ++k) {
        Rat c = T.cos_of(k), s = T.sin_of(k);
        REQUIRE(c * c + s * s == Rat(1));  // exact unit rotation
        long double ang = atan2l(s.get_d(), c.get_d());
        if (ang < 0) ang += 2.0L * M_PIl;
        long double ideal = k * M_PIl / 100.0L;
        long double err = ang - ideal;
        if (k == 0) err = ang;  // atan2 wrap at zero
        REQUIRE(fabsl(err) < M_PIl / 2000.0L);  // < eps/20
        REQUIRE(err <= 1e-12L);  // at or below ideal, modulo double conversion noise
    }
}

TEST_CASE("wedge visibility basics") {
    const auto& T = RotationTable::instance();
    // wedge pointing straight down, spanning just under pi
    Wedge w{pt(0, 0), T.dir(101), T.dir(199)};
    CHECK(segment_enters_wedge(w, pt(0, -1), pt(1, -1)));
    CHECK_FALSE(segment_enters_wedge(w, pt(-1, 1), pt(1, 1)));
    // segment touching only the apex does not enter
    CHECK_FALSE(segment_enters_wedge(w, pt(0, 0), pt(0, 1)));
    // segment through the apex into the wedge does
    CHECK(segment_enters_wedge(w, pt(0, 1), pt(0, -1)));
}

TEST_CASE("homothety classes") {
    auto t1 = homothety_class(pt(0, 0), pt(2, 0), pt(0, 2));
    auto t2 = homothety_class(pt(5, 7), pt(11, 7), pt(5, 13));  // 3x scaled + shifted
    CHECK(t1 == t2);
    auto refl = homothety_class(pt(0, 0), pt(-2, 0), pt(0, 2));
    CHECK_FALSE(t1 == refl);
    auto rot = homothety_class(pt(0, 0), pt(0, 2), pt(-2, 0));
    CHECK_FALSE(t1 == rot);
    CHECK_THROWS_AS(homothety_class(pt(0, 0), pt(1, 1), pt(2, 2)), error);
}

TEST_CASE("slope table canonicalizes by resolved direction") {
    SlopeTable st;
    SlopeId a = st.intern(Vec(Rat(1), Rat(1)));
    SlopeId b = st.intern(Vec(Rat(-2), Rat(-2)));
    CHECK(a == b);
    SlopeId c = st.intern(Vec(Rat(1), Rat(0)), 25);  // rotate by pi/4-ish step
    SlopeId d = st.intern(Vec(Rat(1), Rat(0)), 125);
    CHECK(c == d);  // half-turn apart: same undirected direction
    CHECK(st.size() == 2);
}

TEST_CASE("affine map through triangle correspondence") {
    AffineMap m = affine_from_triangles(pt(0, 0), pt(1, 0), pt(0, 1),
                                        pt(2, 3), pt(4, 3), pt(2, 7));
    CHECK(m(pt(0, 0)) == pt(2, 3));
    CHECK(m(pt(1, 0)) == pt(4, 3));
    CHECK(m(pt(0, 1)) == pt(2, 7));
    CHECK(m(Point(Rat(1, 2), Rat(1, 2))) == Point(Rat(3), Rat(5)));
}

TEST_CASE("angular order") {
    std::vector<Vec> dirs = {Vec(Rat(1), Rat(0)), Vec(Rat(1), Rat(1)), Vec(Rat(0), Rat(1)),
                             Vec(Rat(-1), Rat(1)), Vec(Rat(-1), Rat(0)), Vec(Rat(-1), Rat(-1)),
                             Vec(Rat(0), Rat(-1)), Vec(Rat(1), Rat(-1))};
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = 0; j < dirs.size(); ++j)
            CHECK(angular_less(dirs[i], dirs[j]) == (i < j));
}

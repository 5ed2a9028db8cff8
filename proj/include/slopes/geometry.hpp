#pragma once

#include "slopes/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

namespace slopes {

// Sign of the signed area of (a,b,c): >0 counterclockwise, <0 clockwise.
inline int orient(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b - a, c - a));
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
    return orient(a, b, c) == 0;
}

// Canonical undirected direction: coprime integer vector with y>0, or y==0 and x>0.
struct Dir {
    Int x, y;
    bool operator<(const Dir& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
    bool operator==(const Dir& o) const { return x == o.x && y == o.y; }
};

inline Dir canonical_dir(const Vec& v) {
    if (v.is_zero()) throw error("DegenerateSegment: zero direction");
    // clear denominators, reduce, fix sign
    Int nx = v.x.get_num() * v.y.get_den();
    Int ny = v.y.get_num() * v.x.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
    nx /= g;
    ny /= g;
    if (sgn(ny) < 0 || (sgn(ny) == 0 && sgn(nx) < 0)) { nx = -nx; ny = -ny; }
    return Dir{nx, ny};
}

inline Dir slope_of(const Point& p, const Point& q) {
    if (p == q) throw error("DegenerateSegment: equal endpoints");
    return canonical_dir(q - p);
}

// Directed slope: coprime integer vector, sign preserved.
struct DirectedDir {
    Int x, y;
    bool operator==(const DirectedDir& o) const { return x == o.x && y == o.y; }
    bool operator<(const DirectedDir& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
};

inline DirectedDir directed_dir(const Vec& v) {
    if (v.is_zero()) throw error("DegenerateSegment: zero direction");
    Int nx = v.x.get_num() * v.y.get_den();
    Int ny = v.y.get_num() * v.x.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
    nx /= g;
    ny /= g;
    return DirectedDir{nx, ny};
}

inline DirectedDir directed_slope_of(const Point& p, const Point& q) {
    return directed_dir(q - p);
}

// Half-circle index for angular comparison: 0 for angle in [0,pi), 1 for [pi,2pi).
inline int angular_half(const Vec& v) {
    int sy = sgn(v.y);
    if (sy != 0) return sy > 0 ? 0 : 1;
    return sgn(v.x) > 0 ? 0 : 1;
}

// Strict counterclockwise angular order of directions, starting at angle 0.
inline bool angular_less(const Vec& a, const Vec& b) {
    int ha = angular_half(a), hb = angular_half(b);
    if (ha != hb) return ha < hb;
    return sgn(cross(a, b)) > 0;
}

inline bool angular_equal(const Vec& a, const Vec& b) {
    return sgn(cross(a, b)) == 0 && sgn(dot(a, b)) > 0;
}

// True iff direction v lies in the closed ccw sector from lo to hi.
// The sector is assumed to span less than a full turn.
inline bool in_ccw_sector(const Vec& lo, const Vec& hi, const Vec& v) {
    bool lo_le_hi = angular_less(lo, hi) || angular_equal(lo, hi);
    auto ge = [](const Vec& p, const Vec& q) {
        return angular_equal(p, q) || angular_less(q, p);
    };
    auto le = [](const Vec& p, const Vec& q) {
        return angular_equal(p, q) || angular_less(p, q);
    };
    if (lo_le_hi) return ge(v, lo) && le(v, hi);
    return ge(v, lo) || le(v, hi);  // sector wraps through angle 0
}

inline bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    return sgn(dot(p - a, p - b)) <= 0;
}

// Proper or improper intersection of closed segments, excluding intersections
// that consist of a single shared endpoint. Exact.
inline bool segments_conflict(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    bool shared_ac = a == c, shared_ad = a == d, shared_bc = b == c, shared_bd = b == d;
    if (o1 == 0 && o2 == 0) {
        // collinear: conflict iff the overlap is more than a shared endpoint
        Vec ab = b - a;
        Rat ta(0), tb = dot(ab, ab);
        Rat tc = dot(c - a, ab), td = dot(d - a, ab);
        Rat lo = tc < td ? tc : td, hi = tc < td ? td : tc;
        Rat ilo = ta > lo ? ta : lo, ihi = tb < hi ? tb : hi;
        if (ilo > ihi) return false;
        if (ilo == ihi) {
            // single contact point; a shared endpoint is fine
            return !(shared_ac || shared_ad || shared_bc || shared_bd);
        }
        return true;
    }
    if (shared_ac || shared_ad || shared_bc || shared_bd) {
        // one shared endpoint and not collinear: conflict iff the other
        // endpoint of one segment lies inside the other segment
        if (shared_ac) return point_on_segment(b, c, d) || point_on_segment(d, a, b);
        if (shared_ad) return point_on_segment(b, c, d) || point_on_segment(c, a, b);
        if (shared_bc) return point_on_segment(a, c, d) || point_on_segment(d, a, b);
        return point_on_segment(a, c, d) || point_on_segment(c, a, b);
    }
    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
        // covers proper crossings and T-contacts (one orientation zero)
        return true;
    }
    return false;
}

// A closed angular wedge at apex v between directions lo and hi (ccw from lo
// to hi, spanning less than pi). Visibility tests ask that no drawing element
// intersects the wedge anywhere but the apex.
struct Wedge {
    Point apex;
    Vec lo, hi;
};

// True iff segment [a,b] intersects wedge w in a point other than w.apex.
inline bool segment_enters_wedge(const Wedge& w, const Point& a, const Point& b) {
    // clip parameter interval [0,1] of P(t)=a+t(b-a) against:
    //   cross(lo, p-apex) >= 0,  cross(p-apex, hi) >= 0
    // then check the surviving piece is more than the apex point.
    struct Constraint { Rat c0, c1; };  // c0 + c1*t >= 0
    Vec d = b - a;
    Vec r = a - w.apex;
    Constraint cs[2] = {
        {cross(w.lo, r), cross(w.lo, d)},
        {cross(r, w.hi), cross(d, w.hi)},
    };
    Rat t0(0), t1(1);
    for (auto& c : cs) {
        int s1 = sgn(c.c1);
        if (s1 == 0) {
            if (sgn(c.c0) < 0) return false;
        } else {
            Rat bound = -c.c0 / c.c1;
            if (s1 > 0) { if (bound > t0) t0 = bound; }
            else        { if (bound < t1) t1 = bound; }
        }
    }
    if (t0 > t1) return false;
    if (t0 == t1) return lerp(a, b, t0) != w.apex;
    // nontrivial subsegment inside the cone; at most one of its points is the
    // apex, so something besides the apex is hit. Valid because callers only
    // build wedges spanning less than pi (two half-planes = the cone).
    return true;
}

// Triangle key invariant under translation and positive scaling (reflections
// and rotations produce distinct keys).
struct HomothetyClass {
    std::array<Rat, 4> key;
    bool operator<(const HomothetyClass& o) const {
        for (int i = 0; i < 4; ++i) {
            int c = cmp(key[i], o.key[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
    bool operator==(const HomothetyClass& o) const { return key == o.key; }
};

inline HomothetyClass homothety_class(const Point& a, const Point& b, const Point& c) {
    if (orient(a, b, c) == 0) throw error("DegenerateTriangle");
    std::array<Point, 3> p = {a, b, c};
    // lexicographic order is invariant under translation + positive scaling
    std::sort(p.begin(), p.end(), [](const Point& u, const Point& v) {
        int cx = cmp(u.x, v.x);
        if (cx != 0) return cx < 0;
        return cmp(u.y, v.y) < 0;
    });
    Vec u = p[1] - p[0], v = p[2] - p[0];
    Rat scale = norm1(u) + norm1(v);
    return HomothetyClass{{u.x / scale, u.y / scale, v.x / scale, v.y / scale}};
}

inline bool point_in_triangle_closed(const Point& p, const Point& a, const Point& b,
                                     const Point& c) {
    int o = orient(a, b, c);
    if (o == 0) throw error("DegenerateTriangle");
    int s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
    if (o < 0) { s1 = -s1; s2 = -s2; s3 = -s3; }
    return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

inline bool point_in_triangle_open(const Point& p, const Point& a, const Point& b,
                                   const Point& c) {
    int o = orient(a, b, c);
    if (o == 0) throw error("DegenerateTriangle");
    int s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
    if (o < 0) { s1 = -s1; s2 = -s2; s3 = -s3; }
    return s1 > 0 && s2 > 0 && s3 > 0;
}

// Intersection of lines p + s*u and q + t*v; nullopt if parallel.
inline std::optional<Point> line_intersect(const Point& p, const Vec& u, const Point& q,
                                           const Vec& v) {
    Rat den = cross(u, v);
    if (sgn(den) == 0) return std::nullopt;
    Rat s = cross(q - p, v) / den;
    return p + s * u;
}

// Affine map determined by three point correspondences.
struct AffineMap {
    Rat a, b, c, d;  // linear part [[a,b],[c,d]]
    Rat tx, ty;
    Point operator()(const Point& p) const {
        return Point(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty);
    }
    Vec map_vec(const Vec& v) const { return Vec(a * v.x + b * v.y, c * v.x + d * v.y); }
};

inline AffineMap affine_from_triangles(const Point& s0, const Point& s1, const Point& s2,
                                       const Point& d0, const Point& d1, const Point& d2) {
    Vec u = s1 - s0, v = s2 - s0;
    Rat det = cross(u, v);
    if (sgn(det) == 0) throw error("DegenerateTriangle: affine source");
    Vec U = d1 - d0, V = d2 - d0;
    // linear part L with L*u=U, L*v=V
    AffineMap m;
    m.a = (U.x * v.y - V.x * u.y) / det;
    m.b = (V.x * u.x - U.x * v.x) / det;
    m.c = (U.y * v.y - V.y * u.y) / det;
    m.d = (V.y * u.x - U.y * v.x) / det;
    m.tx = d0.x - (m.a * s0.x + m.b * s0.y);
    m.ty = d0.y - (m.c * s0.x + m.d * s0.y);
    return m;
}

// Similarity transforms used when assembling drawings.
struct Placement {
    Rat rot_c{1}, rot_s{0};  // exact rotation column (cos,sin)-like pair
    bool reflect_y = false;  // applied before rotation: (x,y) -> (x,-y)
    Rat scale{1};
    Vec shift{Rat(0), Rat(0)};
    Point operator()(const Point& p) const {
        Rat x = p.x, y = p.y;
        if (reflect_y) y = -y;
        Rat rx = rot_c * x - rot_s * y;
        Rat ry = rot_s * x + rot_c * y;
        return Point(scale * rx + shift.x, scale * ry + shift.y);
    }
    Vec map_vec(const Vec& v) const {
        Rat x = v.x, y = v.y;
        if (reflect_y) y = -y;
        return Vec(scale * (rot_c * x - rot_s * y), scale * (rot_s * x + rot_c * y));
    }
};

} // namespace slopes

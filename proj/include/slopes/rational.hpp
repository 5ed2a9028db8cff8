#pragma once

#include <gmpxx.h>
#include <string>
#include <utility>
#include <stdexcept>

namespace slopes {

using Rat = mpq_class;
using Int = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    Rat x, y;
    Point() : x(0), y(0) {}
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

struct Vec {
    Rat x, y;
    Vec() : x(0), y(0) {}
    Vec(Rat vx, Rat vy) : x(std::move(vx)), y(std::move(vy)) {}
    bool operator==(const Vec& o) const { return x == o.x && y == o.y; }
    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
};

inline Vec operator-(const Point& a, const Point& b) { return Vec(a.x - b.x, a.y - b.y); }
inline Point operator+(const Point& p, const Vec& v) { return Point(p.x + v.x, p.y + v.y); }
inline Point operator-(const Point& p, const Vec& v) { return Point(p.x - v.x, p.y - v.y); }
inline Vec operator+(const Vec& a, const Vec& b) { return Vec(a.x + b.x, a.y + b.y); }
inline Vec operator-(const Vec& a, const Vec& b) { return Vec(a.x - b.x, a.y - b.y); }
inline Vec operator*(const Rat& s, const Vec& v) { return Vec(s * v.x, s * v.y); }
inline Vec operator-(const Vec& v) { return Vec(-v.x, -v.y); }

inline Rat cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

// Squared euclidean length; exact.
inline Rat norm2(const Vec& v) { return v.x * v.x + v.y * v.y; }
// L1 length; exact and positively homogeneous, used where a rational
// stand-in for euclidean length is needed.
inline Rat norm1(const Vec& v) { return abs(v.x) + abs(v.y); }

inline Point midpoint(const Point& a, const Point& b) {
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2);
}

inline Point lerp(const Point& a, const Point& b, const Rat& t) {
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}

// Rounds r to the grid 2^-bits, toward -inf.
inline Rat dyadic_floor(const Rat& r, unsigned bits) {
    Int scaled_num = r.get_num() << bits;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
    Rat out(q, Int(1) << bits);
    out.canonicalize();
    return out;
}

inline bool is_dyadic(const Rat& r) {
    Int d = r.get_den();
    return mpz_scan1(d.get_mpz_t(), 0) == mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

} // namespace slopes

#pragma once

#include "slopes/geometry.hpp"

#include <array>

namespace slopes {

// Global angle quantum: eps = pi/100, realized by 200 exact rational rotation
// operators. Step k is a rational unit vector (cos_k, sin_k) with
// cos_k^2 + sin_k^2 = 1, whose angle lies in (k*eps - eps/20, k*eps].
//
// Steps 1..49 come from frozen floor-rounded tangent half-angle approximations
// (p/10000); steps 50, 100, 150 are axis-exact; everything else is derived by
// exact quarter-turn composition and negation, which preserves the per-step
// error bound.
class RotationTable {
public:
    static constexpr int kSteps = 200;

    static const RotationTable& instance() {
        static RotationTable t;
        return t;
    }

    // exact rotation of v by step k
    Vec rotate(int k, const Vec& v) const {
        const Entry& e = entry(k);
        return Vec(e.c * v.x - e.s * v.y, e.s * v.x + e.c * v.y);
    }

    Point rotate_about(int k, const Point& center, const Point& p) const {
        Vec v = p - center;
        return center + rotate(k, v);
    }

    // unit direction of step k
    Vec dir(int k) const {
        const Entry& e = entry(k);
        return Vec(e.c, e.s);
    }

    Rat cos_of(int k) const { return entry(k).c; }
    Rat sin_of(int k) const { return entry(k).s; }

private:
    struct Entry { Rat c, s; };
    std::array<Entry, kSteps> entries_;

    const Entry& entry(int k) const { return entries_[((k % kSteps) + kSteps) % kSteps]; }

    RotationTable() {
        // frozen: p_k = floor(tan(k*pi/200) * 10000) for k = 1..49
        static const long kHalfTan[49] = {
            157,  314,  471,  629,  787,  945,  1104, 1263, 1423, 1583,
            1745, 1907, 2070, 2235, 2400, 2567, 2735, 2905, 3076, 3249,
            3423, 3600, 3778, 3959, 4142, 4327, 4515, 4705, 4898, 5095,
            5294, 5497, 5703, 5913, 6128, 6346, 6568, 6795, 7028, 7265,
            7508, 7756, 8011, 8272, 8540, 8816, 9099, 9390, 9690};
        const Int q = 10000;
        entries_[0] = {Rat(1), Rat(0)};
        for (int k = 1; k <= 49; ++k) {
            Int p(kHalfTan[k - 1]);
            Int den = q * q + p * p;
            Rat c(q * q - p * p), s(2 * p * q);
            c /= den;
            s /= den;
            entries_[k] = {c, s};
        }
        entries_[50] = {Rat(0), Rat(1)};
        for (int k = 51; k <= 99; ++k) {
            const Entry& b = entries_[k - 50];
            entries_[k] = {-b.s, b.c};  // quarter turn, exact
        }
        entries_[100] = {Rat(-1), Rat(0)};
        for (int k = 101; k <= 199; ++k) {
            const Entry& b = entries_[k - 100];
            entries_[k] = {-b.c, -b.s};  // half turn, exact
        }
    }
};

// tan(eps/2) lower bound as an exact rational; the flat isosceles hosts use
// this as their side slope so their apex angle is at least pi - eps.
inline const Rat& half_eps_tan() {
    static const Rat t(157, 10000);
    return t;
}

} // namespace slopes

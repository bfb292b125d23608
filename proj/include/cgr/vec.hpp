#pragma once

#include <array>

#include "cgr/rational.hpp"

namespace cgr {

struct Vec3 {
    Rat x, y, z;

    Vec3() = default;
    Vec3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(const Rat& k) const { return {x * k, y * k, z * k}; }
};

struct Vec2 {
    Rat x, y;

    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool operator<(const Vec2& o) const { return x < o.x || (x == o.x && y < o.y); }

    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
};

inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

inline Rat cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Point in vertex i of the moment curve (t, t^2, t^3).
inline Vec3 moment_point(long t) {
    Int ti(t);
    return {Rat(ti), Rat(ti * ti), Rat(ti * ti * ti)};
}

} // namespace cgr

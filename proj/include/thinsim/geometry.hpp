#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "thinsim/errors.hpp"

namespace thinsim {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Camera-frame position in meters: +z along the optical axis, +x right, +y down.
using Point3 = Vec3;

inline double distance(const Point3& a, const Point3& b) { return (a - b).norm(); }

// Direction with unit Euclidean norm (enforced to 1e-9 at construction).
class UnitVec3 {
public:
    UnitVec3() : v_(0.0, 0.0, 1.0) {}

    // Normalizes `v`; throws if the norm is too small to define a direction.
    static UnitVec3 normalized(const Vec3& v) {
        const double n = v.norm();
        if (!(n > 1e-12) || !v.finite()) {
            throw DegenerateNormals("cannot normalize a near-zero or non-finite vector");
        }
        return UnitVec3(v / n);
    }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3& vec() const { return v_; }

    double dot(const Vec3& o) const { return v_.dot(o); }
    UnitVec3 flipped() const { return UnitVec3(v_ * -1.0); }

private:
    explicit UnitVec3(const Vec3& v) : v_(v) {}
    Vec3 v_;
};

// Pixel-space coordinate (u right, v down), subpixel precision.
struct Vec2 {
    double u = 0.0;
    double v = 0.0;

    Vec2() = default;
    Vec2(double u_, double v_) : u(u_), v(v_) {}

    Vec2 operator-(const Vec2& o) const { return {u - o.u, v - o.v}; }
    double cross(const Vec2& o) const { return u * o.v - v * o.u; }
    double norm() const { return std::hypot(u, v); }

    bool operator==(const Vec2& o) const { return u == o.u && v == o.v; }
    bool operator<(const Vec2& o) const { return u < o.u || (u == o.u && v < o.v); }
};

// Ordered vertex loop in pixel coordinates; at least 3 vertices, no two
// consecutive vertices identical.
struct Polygon2 {
    std::vector<Vec2> vertices;

    std::size_t size() const { return vertices.size(); }
};

// Symmetric 3x3 matrix stored as the six independent entries.
struct SymMat3 {
    double xx = 0.0, xy = 0.0, xz = 0.0;
    double yy = 0.0, yz = 0.0;
    double zz = 0.0;

    Vec3 apply(const Vec3& v) const {
        return {xx * v.x + xy * v.y + xz * v.z,
                xy * v.x + yy * v.y + yz * v.z,
                xz * v.x + yz * v.y + zz * v.z};
    }

    double trace() const { return xx + yy + zz; }
    double det() const {
        return xx * (yy * zz - yz * yz) - xy * (xy * zz - yz * xz) +
               xz * (xy * yz - yy * xz);
    }
};

// Distance from `p` to the segment [a, b].
inline double point_segment_distance(const Point3& p, const Point3& a, const Point3& b) {
    const Vec3 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 <= 0.0) return distance(p, a);
    double t = (p - a).dot(ab) / len2;
    t = std::fmin(1.0, std::fmax(0.0, t));
    return distance(p, a + ab * t);
}

}  // namespace thinsim

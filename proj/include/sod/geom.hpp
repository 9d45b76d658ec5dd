#pragma once

#include "sod/rat.hpp"

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace sod {

struct Vec3 {
    Rat x, y, z;

    Vec3() : x(0), y(0), z(0) {}
    Vec3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool operator==(const Vec3&) const = default;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(const Rat& s) const { return {x * s, y * s, z * s}; }

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

using Point3 = Vec3;

inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// det(b-a, c-a, d-a), reduced to a sign. The fundamental side-of-plane test.
inline int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return sign(dot(cross(b - a, c - a), d - a));
}

inline bool collinear(const Point3& a, const Point3& b, const Point3& c) {
    return cross(b - a, c - a).is_zero();
}

/// A direction: a nonzero vector interpreted modulo positive scaling.
/// Stands in for a point of the unit sphere without ever taking a root.
struct Dir3 {
    Vec3 v;

    Dir3() = default;
    explicit Dir3(Vec3 w) : v(std::move(w)) {
        if (v.is_zero()) throw std::invalid_argument("Dir3: zero vector");
    }
    Dir3(Rat x, Rat y, Rat z) : Dir3(Vec3(std::move(x), std::move(y), std::move(z))) {}

    /// Equality is positive proportionality.
    bool operator==(const Dir3& o) const {
        return cross(v, o.v).is_zero() && dot(v, o.v) > 0;
    }
    bool antipodal_to(const Dir3& o) const {
        return cross(v, o.v).is_zero() && dot(v, o.v) < 0;
    }
};

/// Canonical integer representative of a direction: coprime integer triple
/// with the same orientation. Usable as an exact map key.
inline std::array<Int, 3> canonical_dir(const Vec3& v) {
    Int l = lcm(lcm(denominator(v.x), denominator(v.y)), denominator(v.z));
    Int a = numerator(v.x) * (l / denominator(v.x));
    Int b = numerator(v.y) * (l / denominator(v.y));
    Int c = numerator(v.z) * (l / denominator(v.z));
    Int g = gcd(gcd(abs(a), abs(b)), abs(c));
    if (g == 0) throw std::invalid_argument("canonical_dir: zero vector");
    return {a / g, b / g, c / g};
}

/// The plane {x : normal . x = offset}.
struct Plane {
    Dir3 normal;
    Rat offset;

    Plane(Dir3 n, Rat off) : normal(std::move(n)), offset(std::move(off)) {}

    /// Plane through three non-collinear points.
    static Plane through(const Point3& a, const Point3& b, const Point3& c) {
        Vec3 n = cross(b - a, c - a);
        if (n.is_zero()) throw std::invalid_argument("Plane::through: collinear points");
        Rat off = dot(n, a);
        return Plane(Dir3(std::move(n)), std::move(off));
    }

    bool contains(const Point3& p) const { return dot(normal.v, p) == offset; }
};

inline int side_of_plane(const Plane& pl, const Point3& p) {
    return sign(dot(pl.normal.v, p) - pl.offset);
}

/// True iff q lies on the closed segment [a, b].
inline bool on_segment(const Point3& a, const Point3& b, const Point3& q) {
    if (!collinear(a, b, q)) return false;
    return dot(q - a, q - b) <= 0;
}

/// True iff the closed segments [a,b] and [c,d] share a point.
inline bool segments_intersect(const Point3& a, const Point3& b, const Point3& c,
                               const Point3& d) {
    Vec3 ab = b - a, cd = d - c;
    Vec3 n = cross(ab, cd);
    if (!n.is_zero()) {
        // Skew or properly crossing: must be coplanar and straddle each other.
        if (dot(n, c - a) != 0) return false;
        // Within the common plane, use exact straddle tests via n as reference.
        int s1 = sign(dot(n, cross(ab, c - a)));
        int s2 = sign(dot(n, cross(ab, d - a)));
        int s3 = sign(dot(n, cross(cd, a - c)));
        int s4 = sign(dot(n, cross(cd, b - c)));
        if (s1 * s2 > 0 || s3 * s4 > 0) return false;
        return true;
    }
    // Parallel (or degenerate) segments: only collinear overlap is possible.
    if (!collinear(a, b, c)) {
        // Parallel but distinct lines; also covers degenerate cd off the line.
        if (cd.is_zero()) return on_segment(a, b, c);
        if (ab.is_zero()) return on_segment(c, d, a);
        return false;
    }
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
           on_segment(c, d, b);
}

}  // namespace sod

#pragma once

#include "sod/polygon.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace sod {

using Triangle = std::array<Point3, 3>;

namespace detail {

// 2x the signed area vector of the loop; dot with the plane normal orients it.
inline Vec3 loop_area_vector(const std::vector<Point3>& vs) {
    Vec3 s;
    for (std::size_t i = 0; i < vs.size(); ++i) s = s + cross(vs[i], vs[(i + 1) % vs.size()]);
    return s;
}

// Closed-triangle membership for a coplanar point, CCW triangle w.r.t. n.
inline bool in_closed_triangle(const Vec3& n, const Point3& a, const Point3& b, const Point3& c,
                               const Point3& p) {
    return sign(dot(n, cross(b - a, p - a))) >= 0 && sign(dot(n, cross(c - b, p - b))) >= 0 &&
           sign(dot(n, cross(a - c, p - c))) >= 0;
}

}  // namespace detail

/// Exact ear-clipping triangulation of a simple polygon.
inline std::vector<Triangle> triangulate(const Polygon& poly) {
    Vec3 n = poly.plane().normal.v;
    std::vector<Point3> vs = poly.vertices;
    if (dot(n, detail::loop_area_vector(vs)) < 0) n = -n;  // make the loop CCW w.r.t. n

    std::vector<Triangle> out;
    while (vs.size() > 3) {
        bool clipped = false;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const Point3& prev = vs[(i + vs.size() - 1) % vs.size()];
            const Point3& cur = vs[i];
            const Point3& next = vs[(i + 1) % vs.size()];
            if (sign(dot(n, cross(cur - prev, next - cur))) <= 0) continue;  // reflex or flat
            bool ear = true;
            for (std::size_t j = 0; j < vs.size() && ear; ++j) {
                if (vs[j] == prev || vs[j] == cur || vs[j] == next) continue;
                if (detail::in_closed_triangle(n, prev, cur, next, vs[j])) ear = false;
            }
            if (!ear) continue;
            out.push_back({prev, cur, next});
            vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
            break;
        }
        if (!clipped) throw std::logic_error("triangulate: no ear found (polygon not simple?)");
    }
    out.push_back({vs[0], vs[1], vs[2]});
    return out;
}

/// Open-interior overlap of two coplanar triangles, by exact separating-axis.
inline bool triangles_overlap(const Vec3& n, Triangle t1, Triangle t2) {
    // Orient both CCW w.r.t. n.
    auto orient_ccw = [&](Triangle& t) {
        if (sign(dot(n, cross(t[1] - t[0], t[2] - t[0]))) < 0) std::swap(t[1], t[2]);
    };
    orient_ccw(t1);
    orient_ccw(t2);
    auto separated_by_edge_of = [&](const Triangle& a, const Triangle& b) {
        for (int i = 0; i < 3; ++i) {
            const Point3& u = a[i];
            const Point3& v = a[(i + 1) % 3];
            bool all_out = true;
            for (int j = 0; j < 3 && all_out; ++j)
                if (sign(dot(n, cross(v - u, b[j] - u))) > 0) all_out = false;
            if (all_out) return true;
        }
        return false;
    };
    return !separated_by_edge_of(t1, t2) && !separated_by_edge_of(t2, t1);
}

/// Do the relative interiors of two polygons intersect? Exact, both for
/// coplanar pairs (triangulation + separating axis) and skew pairs (interval
/// overlap along the planes' common line).
inline bool relative_interiors_intersect(const Polygon& a, const Polygon& b) {
    Plane pa = a.plane(), pb = b.plane();
    Vec3 d = cross(pa.normal.v, pb.normal.v);
    if (d.is_zero()) {
        // Parallel planes: distinct ones cannot meet at all.
        Rat lambda = dot(pa.normal.v, pb.normal.v) / dot(pa.normal.v, pa.normal.v);
        if (pb.offset != lambda * pa.offset) return false;
        auto ta = triangulate(a);
        auto tb = triangulate(b);
        for (const auto& x : ta)
            for (const auto& y : tb)
                if (triangles_overlap(pa.normal.v, x, y)) return true;
        return false;
    }
    // Distinct planes meet in the line p0 + t d. Solve for p0 with one
    // coordinate pinned to zero, choosing a coordinate where d is nonzero.
    Point3 p0;
    {
        const Vec3& n1 = pa.normal.v;
        const Vec3& n2 = pb.normal.v;
        Rat o1 = pa.offset, o2 = pb.offset;
        if (d.z != 0) {
            p0 = {(o1 * n2.y - o2 * n1.y) / d.z, (o2 * n1.x - o1 * n2.x) / d.z, 0};
        } else if (d.y != 0) {
            p0 = {(o2 * n1.z - o1 * n2.z) / d.y, 0, (o1 * n2.x - o2 * n1.x) / d.y};
        } else {
            p0 = {0, (o1 * n2.z - o2 * n1.z) / d.x, (o2 * n1.y - o1 * n2.y) / d.x};
        }
    }
    // Breakpoints in t where the line leaves/enters either polygon's interior.
    std::vector<Rat> ts;
    auto add_edge_hits = [&](const Polygon& poly) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point3& u = poly.vertex(i);
            const Point3& v = poly.vertex(i + 1);
            // Solve p0 + t d = u + s (v-u); both lines lie in poly's plane.
            Vec3 w = v - u;
            Vec3 c = cross(d, w);
            if (c.is_zero()) {
                // Edge parallel to the line; if collinear, its endpoints bound
                // an interval of boundary points.
                if (cross(u - p0, d).is_zero()) {
                    ts.push_back(dot(u - p0, d) / dot(d, d));
                    ts.push_back(dot(v - p0, d) / dot(d, d));
                }
                continue;
            }
            // t = ((u-p0) x w) . c / |c|^2, both cross products parallel to c.
            Rat t = dot(cross(u - p0, w), c) / dot(c, c);
            Point3 hit = p0 + d * t;
            if (on_segment(u, v, hit)) ts.push_back(t);
        }
    };
    add_edge_hits(a);
    add_edge_hits(b);
    if (ts.empty()) return false;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    auto strictly_inside = [&](const Polygon& poly, const Point3& q) {
        if (!poly.plane().contains(q)) return false;
        return point_in_polygon_2d(poly, q) == Containment::inside;
    };
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        Rat mid = (ts[i] + ts[i + 1]) / 2;
        Point3 q = p0 + d * mid;
        if (strictly_inside(a, q) && strictly_inside(b, q)) return true;
    }
    return false;
}

}  // namespace sod

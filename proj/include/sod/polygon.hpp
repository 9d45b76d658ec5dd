#pragma once

#include "sod/geom.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sod {

enum class Containment { inside, boundary, outside };

/// A simple planar polygon in 3-space, stored as an ordered vertex loop.
struct Polygon {
    std::string id;
    std::vector<Point3> vertices;

    Polygon(std::string id_, std::vector<Point3> verts)
        : id(std::move(id_)), vertices(std::move(verts)) {
        if (vertices.size() < 3) throw std::invalid_argument("polygon " + id + ": needs >= 3 vertices");
    }

    std::size_t size() const { return vertices.size(); }
    const Point3& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }

    /// Supporting plane, derived from the first non-collinear vertex triple.
    Plane plane() const {
        for (std::size_t i = 2; i < vertices.size(); ++i)
            if (!collinear(vertices[0], vertices[1], vertices[i]))
                return Plane::through(vertices[0], vertices[1], vertices[i]);
        throw std::invalid_argument("polygon " + id + ": all vertices collinear");
    }

    /// All invariant violations, as human-readable strings; empty means valid.
    std::vector<std::string> validate() const {
        std::vector<std::string> errs;
        Plane pl = [&]() -> Plane {
            try {
                return plane();
            } catch (const std::exception& e) {
                errs.emplace_back(e.what());
                return Plane(Dir3(1, 0, 0), 0);
            }
        }();
        if (!errs.empty()) return errs;
        for (const auto& v : vertices)
            if (!pl.contains(v)) {
                errs.push_back("polygon " + id + ": vertices not coplanar");
                break;
            }
        const std::size_t n = vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (vertex(i) == vertex(i + 1)) {
                errs.push_back("polygon " + id + ": zero-length edge at vertex " + std::to_string(i));
                return errs;
            }
            if (collinear(vertex(i), vertex(i + 1), vertex(i + 2)))
                errs.push_back("polygon " + id + ": collinear consecutive edges at vertex " +
                               std::to_string((i + 1) % n));
        }
        // Simplicity: non-adjacent edges disjoint, adjacent edges meet only at
        // the shared vertex.
        // Non-adjacent edges must be disjoint; adjacent non-collinear edges can
        // only meet at their shared vertex, which the collinearity check covers.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (j == i + 1 || (i == 0 && j == n - 1)) continue;
                if (segments_intersect(vertex(i), vertex(i + 1), vertex(j), vertex(j + 1)))
                    errs.push_back("polygon " + id + ": edges " + std::to_string(i) + " and " +
                                   std::to_string(j) + " intersect");
            }
        }
        return errs;
    }
};

/// Exact point-in-polygon for a point on the polygon's plane.
/// Boundary is detected first by on-segment tests; the interior test is
/// crossing parity in an exact 2D projection.
inline Containment point_in_polygon_2d(const Polygon& poly, const Point3& p) {
    Plane pl = poly.plane();
    if (!pl.contains(p)) throw std::invalid_argument("point_in_polygon_2d: point off the plane");
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        if (on_segment(poly.vertex(i), poly.vertex(i + 1), p)) return Containment::boundary;

    // Project along a coordinate axis with nonzero normal component; the
    // projection is a bijection between the plane and a coordinate plane, so
    // crossing parity is preserved.
    const Vec3& nrm = pl.normal.v;
    int drop = nrm.x != 0 ? 0 : (nrm.y != 0 ? 1 : 2);
    auto u = [&](const Point3& q) -> const Rat& { return drop == 0 ? q.y : q.x; };
    auto w = [&](const Point3& q) -> const Rat& { return drop == 2 ? q.y : q.z; };

    bool in = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point3& a = poly.vertex(i);
        const Point3& b = poly.vertex(i + 1);
        if ((w(a) > w(p)) == (w(b) > w(p))) continue;
        // u-coordinate where edge ab crosses the horizontal through p.
        Rat t = (w(p) - w(a)) / (w(b) - w(a));
        Rat ucross = u(a) + t * (u(b) - u(a));
        if (ucross > u(p)) in = !in;
    }
    return in ? Containment::inside : Containment::outside;
}

/// True iff p and q lie in distinct open halfspaces of poly's plane and the
/// open segment pq meets the closed polygon.
inline bool segment_crosses_polygon(const Point3& p, const Point3& q, const Polygon& poly) {
    Plane pl = poly.plane();
    int sp = side_of_plane(pl, p);
    int sq = side_of_plane(pl, q);
    if (sp * sq >= 0) return false;
    // Intersection point of pq with the plane, exact.
    Rat t = (pl.offset - dot(pl.normal.v, p)) / dot(pl.normal.v, q - p);
    Point3 x = p + (q - p) * t;
    return point_in_polygon_2d(poly, x) != Containment::outside;
}

}  // namespace sod

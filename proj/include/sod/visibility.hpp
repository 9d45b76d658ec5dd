#pragma once

#include "sod/world.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace sod {

/// Closed parameter interval along an edge, 0 <= lo <= hi <= 1.
struct ParamInterval {
    Rat lo, hi;
    bool degenerate() const { return lo == hi; }
};

/// The set E_{e,p} of edge points whose sightline to p is unobstructed and
/// whose open sightline misses every closed edge, as parameter intervals.
///
/// Components are stored as their closures; two consecutive intervals may
/// share an endpoint when the shared parameter itself is occluded (a grazing
/// sightline), which still counts as two components.
struct VisibleSet {
    std::string edge_id;
    std::vector<ParamInterval> intervals;

    bool empty() const { return intervals.empty(); }
    bool has_positive_portion() const {
        for (const auto& iv : intervals)
            if (!iv.degenerate()) return true;
        return false;
    }
    std::size_t components() const { return intervals.size(); }
};

enum class Region { interior, exterior, boundary };

struct PointClass {
    Region region;
    std::string feature;  // facet/edge/vertex description for boundary points
};

namespace detail {

/// True iff some point p + t(q-p) with 0 < t < 1 lies on the closed
/// segment [u, v].
inline bool open_segment_hits(const Point3& p, const Point3& q, const Point3& u, const Point3& v) {
    Vec3 ab = q - p, cd = v - u;
    if (ab.is_zero()) return false;
    Vec3 n = cross(ab, cd);
    if (!n.is_zero()) {
        if (dot(n, u - p) != 0) return false;  // skew
        Rat nn = dot(n, n);
        Rat t = dot(cross(u - p, cd), n) / nn;
        if (!(t > 0 && t < 1)) return false;
        Rat s = dot(cross(u - p, ab), n) / nn;
        return s >= 0 && s <= 1;
    }
    // Parallel; only collinear overlap can intersect.
    if (!cross(ab, u - p).is_zero()) return false;
    Rat aa = dot(ab, ab);
    Rat tu = dot(u - p, ab) / aa;
    Rat tv = dot(v - p, ab) / aa;
    if (tu > tv) std::swap(tu, tv);
    return tv > 0 && tu < 1;
}

}  // namespace detail

/// Exact interior/exterior/boundary classification against a polyhedron.
/// Interior vs exterior is crossing parity along a ray chosen to avoid every
/// facet boundary exactly.
inline PointClass classify_point(const Polyhedron& ph, const Point3& p) {
    for (const auto& v : ph.vertices)
        if (v == p) return {Region::boundary, "vertex " + detail::point_key(p)};
    for (const auto& e : ph.edges)
        if (on_segment(e.a, e.b, p)) return {Region::boundary, "edge " + e.id};
    for (const auto& f : ph.facets.polygons) {
        Plane pl = f.plane();
        if (pl.contains(p) && point_in_polygon_2d(f, p) != Containment::outside)
            return {Region::boundary, "facet " + f.id};
    }
    // Candidate ray directions (1, t, t^2) pairwise non-coplanar over facets;
    // only finitely many directions are degenerate, so this terminates.
    for (long t = 1;; ++t) {
        Vec3 d{1, t, t * t};
        bool ok = true;
        long crossings = 0;
        for (const auto& f : ph.facets.polygons) {
            Plane pl = f.plane();
            Rat denom = dot(pl.normal.v, d);
            if (denom == 0) {
                if (pl.contains(p)) ok = false;  // ray lies in the facet plane
                continue;
            }
            Rat tt = (pl.offset - dot(pl.normal.v, p)) / denom;
            if (tt <= 0) continue;
            Point3 x = p + d * tt;
            Containment c = point_in_polygon_2d(f, x);
            if (c == Containment::boundary) {
                ok = false;
                break;
            }
            if (c == Containment::inside) ++crossings;
        }
        if (ok) return {crossings % 2 == 1 ? Region::interior : Region::exterior, ""};
    }
}

/// Mutual visibility of p and q.
/// Scene semantics: the segment crosses no polygon. Polyhedron semantics: the
/// closed segment is disjoint from the interior, or disjoint from the
/// exterior, decided by classifying the an interior sample point of every sub-interval
/// between surface incidences.
inline bool sees_point(const World& w, const Point3& p, const Point3& q) {
    if (!w.is_polyhedron()) {
        for (const auto& poly : w.polygons())
            if (segment_crosses_polygon(p, q, poly)) return false;
        return true;
    }
    if (p == q) return true;
    const Polyhedron& ph = *w.poly;
    std::vector<Rat> ts{Rat(0), Rat(1)};
    Vec3 d = q - p;
    for (const auto& f : ph.facets.polygons) {
        Plane pl = f.plane();
        Rat denom = dot(pl.normal.v, d);
        if (denom != 0) {
            Rat t = (pl.offset - dot(pl.normal.v, p)) / denom;
            if (t > 0 && t < 1 && point_in_polygon_2d(f, p + d * t) != Containment::outside)
                ts.push_back(t);
        } else if (pl.contains(p)) {
            // Segment runs inside the facet plane: incidences change at the
            // facet's boundary segments.
            Rat dd = dot(d, d);
            for (std::size_t i = 0; i < f.size(); ++i) {
                const Point3& u = f.vertex(i);
                const Point3& v = f.vertex(i + 1);
                Vec3 e = v - u;
                Vec3 n = cross(d, e);
                if (n.is_zero()) {
                    if (cross(d, u - p).is_zero()) {
                        ts.push_back(dot(u - p, d) / dd);
                        ts.push_back(dot(v - p, d) / dd);
                    }
                    continue;
                }
                if (dot(n, u - p) != 0) continue;
                Rat t = dot(cross(u - p, e), n) / dot(n, n);
                if (t > 0 && t < 1 && on_segment(u, v, p + d * t)) ts.push_back(t);
            }
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::remove_if(ts.begin(), ts.end(), [](const Rat& t) { return t < 0 || t > 1; }),
             ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    bool any_interior = false, any_exterior = false;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i] == ts[i + 1]) continue;
        Rat mid = simplest_between(ts[i], ts[i + 1]);
        Region r = classify_point(ph, p + d * mid).region;
        if (r == Region::interior) any_interior = true;
        if (r == Region::exterior) any_exterior = true;
        if (any_interior && any_exterior) return false;
    }
    return !(any_interior && any_exterior);
}

/// The E-set clearance condition: the open sightline from p to x misses every
/// closed edge of the world.
inline bool sightline_clear_of_edges(const World& w, const Point3& p, const Point3& x) {
    for (const auto& e : w.edges())
        if (detail::open_segment_hits(p, x, e.a, e.b)) return false;
    return true;
}

namespace detail {

/// Roots of the alignment condition "p, v, and e(t) are collinear" in t.
inline void add_vertex_alignment_roots(const Point3& p, const Point3& a, const Point3& b,
                                       const Point3& v, std::vector<Rat>& out) {
    // cross(a - p + t (b - a), v - p) = 0, componentwise linear in t.
    Vec3 c0 = cross(a - p, v - p);
    Vec3 c1 = cross(b - a, v - p);
    const Rat* base[3] = {&c0.x, &c0.y, &c0.z};
    const Rat* slope[3] = {&c1.x, &c1.y, &c1.z};
    std::optional<Rat> root;
    for (int i = 0; i < 3; ++i) {
        if (*slope[i] == 0) {
            if (*base[i] != 0) return;  // never zero
            continue;
        }
        Rat t = -*base[i] / *slope[i];
        if (root && *root != t) return;  // inconsistent components
        root = t;
    }
    if (root && *root >= 0 && *root <= 1) out.push_back(*root);
    // If all components are identically zero the whole edge is collinear with
    // p-v and there is no isolated event.
}

}  // namespace detail

/// Exact visible sub-segments of edge `e` from p, as the E-set E_{e,p}.
inline VisibleSet visible_subsegments(const World& w, const Point3& p, const EdgeRec& e) {
    const Point3 &a = e.a, &b = e.b;
    Vec3 d = b - a;
    std::vector<Rat> ts{Rat(0), Rat(1)};

    for (const auto& poly : w.polygons()) {
        // Edge crossing the occluder's plane.
        Plane pl = poly.plane();
        Rat denom = dot(pl.normal.v, d);
        if (denom != 0) {
            Rat t = (pl.offset - dot(pl.normal.v, a)) / denom;
            if (t > 0 && t < 1) ts.push_back(t);
        }
        // Sightline sweeping across a boundary segment of the occluder.
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point3& u = poly.vertex(i);
            const Point3& v = poly.vertex(i + 1);
            Vec3 n = cross(u - p, v - p);
            Rat f0 = dot(n, a - p);
            Rat f1 = dot(n, b - p);
            if (f0 == f1) continue;  // constant; roots handled by vertex alignment
            Rat t = f0 / (f0 - f1);
            if (t > 0 && t < 1 && detail::open_segment_hits(p, a + d * t, u, v)) ts.push_back(t);
        }
        // Sightline passing exactly through a boundary vertex.
        for (const auto& v : poly.vertices) detail::add_vertex_alignment_roots(p, a, b, v, ts);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::remove_if(ts.begin(), ts.end(), [](const Rat& t) { return t < 0 || t > 1; }),
             ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    auto visible_at = [&](const Rat& t) {
        Point3 x = a + d * t;
        return sees_point(w, p, x) && sightline_clear_of_edges(w, p, x);
    };

    std::vector<bool> bp_vis(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) bp_vis[i] = visible_at(ts[i]);
    std::vector<bool> iv_vis(ts.size() > 0 ? ts.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) iv_vis[i] = visible_at(simplest_between(ts[i], ts[i + 1]));

    VisibleSet out;
    out.edge_id = e.id;
    std::optional<std::size_t> run_start;  // index into ts
    auto flush = [&](std::size_t end_idx) {
        if (run_start) {
            out.intervals.push_back({ts[*run_start], ts[end_idx]});
            run_start.reset();
        }
    };
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool left_in = i > 0 && iv_vis[i - 1];
        bool right_in = i + 1 < ts.size() && iv_vis[i];
        if (left_in && right_in && bp_vis[i]) continue;  // interior of a run
        if (left_in && right_in && !bp_vis[i]) {
            // Grazed parameter splits the set into two touching components.
            flush(i);
            run_start = i;
            continue;
        }
        if (right_in) {
            if (!run_start) run_start = i;
            continue;
        }
        if (left_in) {
            flush(i);
            continue;
        }
        if (bp_vis[i]) {
            // Isolated visible parameter: must be a scene vertex (the paper's
            // degenerate-segment property); anything else is an engine bug.
            Point3 x = a + d * ts[i];
            bool is_vertex = false;
            for (const auto& vv : w.vertices())
                if (vv == x) {
                    is_vertex = true;
                    break;
                }
            if (!is_vertex)
                throw std::logic_error("visible_subsegments: isolated visible point at non-vertex on " +
                                       e.id);
            out.intervals.push_back({ts[i], ts[i]});
        }
    }
    return out;
}

inline std::vector<std::string> visible_vertices(const World& w, const Point3& p) {
    std::vector<std::string> out;
    for (const auto& v : w.vertices())
        if (sees_point(w, p, v)) out.push_back(detail::point_key(v));
    return out;
}

struct EdgeCounts {
    long weak = 0;
    long positive = 0;
};

inline std::vector<VisibleSet> all_visible_sets(const World& w, const Point3& p) {
    std::vector<VisibleSet> out;
    out.reserve(w.edges().size());
    for (const auto& e : w.edges()) out.push_back(visible_subsegments(w, p, e));
    return out;
}

inline EdgeCounts count_visible_edges(const World& w, const Point3& p) {
    EdgeCounts c;
    for (const auto& e : w.edges()) {
        VisibleSet vs = visible_subsegments(w, p, e);
        bool weak = !vs.empty() || sees_point(w, p, e.a) || sees_point(w, p, e.b);
        if (weak) ++c.weak;
        if (vs.has_positive_portion()) ++c.positive;
    }
    return c;
}

/// Some edge whose E-set has two or more components, if any.
inline std::optional<std::string> detect_split_edge(const World& w, const Point3& p) {
    for (const auto& e : w.edges())
        if (visible_subsegments(w, p, e).components() >= 2) return e.id;
    return std::nullopt;
}

}  // namespace sod

#pragma once

#include "sod/analysis.hpp"
#include "sod/rng.hpp"

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

namespace sod {

// ---------------------------------------------------------------------------
// Ray-sampling oracle: an independent, per-point check of the interval-based
// visibility engine.

struct OracleReport {
    long dirs = 0;
    long resampled = 0;
    long hits = 0;
    long misses = 0;
    std::vector<std::string> disagreements;

    bool pass() const { return disagreements.empty(); }
};

namespace detail {

struct FirstHit {
    Rat s;
    std::string polygon;
};

/// First intersection of the ray p + s*d (s > 0) with the world's polygons.
/// In-plane polygons are skipped; the caller rejects such directions.
inline std::optional<FirstHit> first_hit(const World& w, const Point3& p, const Vec3& d) {
    std::optional<FirstHit> best;
    for (const auto& poly : w.polygons()) {
        Plane pl = poly.plane();
        Rat denom = dot(pl.normal.v, d);
        if (denom == 0) continue;
        Rat s = (pl.offset - dot(pl.normal.v, p)) / denom;
        if (s <= 0) continue;
        if (best && best->s <= s) continue;
        if (point_in_polygon_2d(poly, p + d * s) != Containment::outside)
            best = FirstHit{s, poly.id};
    }
    return best;
}

/// A direction is degenerate if the ray from p grazes any edge or vertex, or
/// runs inside a polygon's plane through p. Such rays are exactly detected
/// and resampled so the first hit stays unambiguous.
inline bool ray_degenerate(const World& w, const Point3& p, const Vec3& d) {
    for (const auto& poly : w.polygons())
        if (dot(poly.plane().normal.v, d) == 0 && poly.plane().contains(p)) return true;
    for (const auto& e : w.edges()) {
        Vec3 seg = e.b - e.a;
        Vec3 n = cross(d, seg);
        if (n.is_zero()) {
            if (cross(d, e.a - p).is_zero()) return true;  // ray collinear with the edge line
            continue;
        }
        if (dot(n, e.a - p) != 0) continue;
        Rat nn = dot(n, n);
        Rat s = dot(cross(e.a - p, seg), n) / nn;
        if (s < 0) continue;
        Rat r = dot(cross(e.a - p, d), n) / nn;
        if (r >= 0 && r <= 1) return true;
    }
    return false;
}

/// Direct per-point E-set membership test, bypassing the breakpoint scheme:
/// nothing strictly between p and x, and the open sightline clear of edges.
inline bool oracle_point_in_eset(const World& w, const Point3& p, const Point3& x) {
    Vec3 d = x - p;
    for (const auto& poly : w.polygons()) {
        Plane pl = poly.plane();
        Rat denom = dot(pl.normal.v, d);
        if (denom == 0) continue;
        Rat s = (pl.offset - dot(pl.normal.v, p)) / denom;
        if (s > 0 && s < 1 && point_in_polygon_2d(poly, p + d * s) != Containment::outside)
            return false;
    }
    return sightline_clear_of_edges(w, p, x);
}

}  // namespace detail

inline OracleReport ray_oracle(const World& w, const Point3& p, long n_dirs, std::uint64_t seed) {
    OracleReport rep;
    rep.dirs = n_dirs;
    if (n_dirs == 0) return rep;
    Rng rng(seed);
    for (long i = 0; i < n_dirs; ++i) {
        Vec3 d;
        for (;;) {
            d = Vec3{Rat(rng.range(-40, 40)), Rat(rng.range(-40, 40)), Rat(rng.range(-40, 40))};
            if (!d.is_zero() && !detail::ray_degenerate(w, p, d)) break;
            ++rep.resampled;
        }
        auto hit = detail::first_hit(w, p, d);
        if (!hit) {
            ++rep.misses;
            continue;
        }
        ++rep.hits;
        // The first-hit point must be visible: nothing is strictly closer.
        if (!sees_point(w, p, p + d * hit->s))
            rep.disagreements.push_back("first hit on " + hit->polygon +
                                        " reported invisible by the engine");
    }
    // Interval cross-checks against the exact engine.
    for (const auto& e : w.edges()) {
        VisibleSet vs = visible_subsegments(w, p, e);
        for (const auto& iv : vs.intervals) {
            if (iv.degenerate()) continue;
            Point3 x = e.a + (e.b - e.a) * ((iv.lo + iv.hi) / 2);
            if (!detail::oracle_point_in_eset(w, p, x))
                rep.disagreements.push_back("interval midpoint of " + e.id +
                                            " fails the direct test");
        }
        for (int k = 0; k < 3; ++k) {
            Rat t = Rat(static_cast<long>(rng.below(1000001)), 1000000);
            bool at_endpoint = false, inside = false;
            for (const auto& iv : vs.intervals) {
                if (t == iv.lo || t == iv.hi) at_endpoint = true;
                if (t >= iv.lo && t <= iv.hi) inside = true;
            }
            if (at_endpoint) continue;  // closure endpoints may be grazed points
            if (inside != detail::oracle_point_in_eset(w, p, e.a + (e.b - e.a) * t))
                rep.disagreements.push_back("random parameter " + rat_to_string(t) + " on " + e.id +
                                            ": interval and direct tests disagree");
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Random scenes.

struct TrialConfig {
    std::uint64_t seed = 1;
    long trials = 100;
    long triangles = 4;    // per random scene
    long coord_bound = 10; // coordinates drawn from [-bound, bound]^3
};

inline Scene random_scene(const TrialConfig& cfg, Rng& rng) {
    if (cfg.triangles <= 0)
        throw std::invalid_argument("random_scene: a scene must contain at least one polygon");
    std::vector<Polygon> polys;
    long B = cfg.coord_bound;
    for (long i = 0; i < cfg.triangles; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
            std::vector<Point3> tri;
            for (int v = 0; v < 3; ++v)
                tri.push_back({Rat(rng.range(-B, B)), Rat(rng.range(-B, B)), Rat(rng.range(-B, B))});
            if (collinear(tri[0], tri[1], tri[2])) continue;
            Polygon cand("P" + std::to_string(i), tri);
            bool clash = false;
            for (const auto& other : polys)
                if (relative_interiors_intersect(cand, other)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            polys.push_back(std::move(cand));
            placed = true;
        }
        if (!placed) throw std::runtime_error("random_scene: placement failed after 1000 attempts");
    }
    return Scene(std::move(polys));
}

inline Scene random_scene(const TrialConfig& cfg) {
    Rng rng(cfg.seed);
    return random_scene(cfg, rng);
}

// ---------------------------------------------------------------------------
// Theorem property suites.

namespace detail {

inline long rat_floor_long(const Rat& r) { return sod::rat_floor(r).convert_to<long>(); }

struct BBox {
    Rat lo[3], hi[3];
};

inline BBox bounding_box(const World& w) {
    BBox b;
    bool first = true;
    for (const auto& poly : w.polygons())
        for (const auto& v : poly.vertices) {
            const Rat* c[3] = {&v.x, &v.y, &v.z};
            for (int i = 0; i < 3; ++i) {
                if (first || *c[i] < b.lo[i]) b.lo[i] = *c[i];
                if (first || *c[i] > b.hi[i]) b.hi[i] = *c[i];
            }
            first = false;
        }
    return b;
}

inline bool on_some_edge(const World& w, const Point3& p) {
    for (const auto& e : w.edges())
        if (on_segment(e.a, e.b, p)) return true;
    return false;
}

/// Random rational point from the bounding box inflated to twice its size.
/// Points on the edge skeleton are rejected: visibility counts there are out
/// of scope (a viewpoint on an edge blocks its own sightlines).
inline Point3 random_viewpoint(const World& w, const BBox& b, Rng& rng) {
    for (;;) {
        Rat c[3];
        for (int i = 0; i < 3; ++i) {
            Rat mid = (b.lo[i] + b.hi[i]) / 2;
            Rat half = (b.hi[i] - b.lo[i]);  // 2x inflation: full width as half-width
            long den = rng.range(1, 8);
            long lo = rat_floor_long((mid - half) * den);
            long hi = -rat_floor_long(-((mid + half) * den));
            c[i] = Rat(rng.range(lo, hi), den);
        }
        Point3 p{c[0], c[1], c[2]};
        if (!on_some_edge(w, p)) return p;
    }
}

/// Targeted viewpoints probing tightness: facet centroids (facet-interior
/// boundary points), centroid offsets along the facet normal, edge midpoint
/// offsets. Families are strided down to at most 12 entries on large worlds.
inline std::vector<Point3> targeted_viewpoints(const World& w) {
    std::vector<Point3> out;
    auto keep = [&](const Point3& p) {
        if (!on_some_edge(w, p)) out.push_back(p);
    };
    const auto& polys = w.polygons();
    bool small = polys.size() <= 12;
    std::size_t pstride = (polys.size() + 11) / 12;
    for (std::size_t i = 0; i < polys.size(); i += pstride) {
        const Polygon& poly = polys[i];
        Point3 c{0, 0, 0};
        for (const auto& v : poly.vertices) c = c + v;
        Rat n = Rat(static_cast<long>(poly.size()));
        c = {c.x / n, c.y / n, c.z / n};
        if (point_in_polygon_2d(poly, c) != Containment::inside) continue;
        keep(c);
        if (small) {
            Vec3 nv = poly.plane().normal.v;
            keep(c + nv * Rat(1, 16));
            keep(c - nv * Rat(1, 16));
        }
    }
    const auto& edges = w.edges();
    if (edges.size() <= 12)
        for (const auto& e : edges) {
            Point3 mid = e.a + (e.b - e.a) * Rat(1, 2);
            keep(mid + Vec3{Rat(1, 11), Rat(1, 13), Rat(1, 17)});
        }
    return out;
}

}  // namespace detail

/// The full structural battery for one SOD (suite (c) and the §4–5 laws).
/// Appends human-readable violations; returns true when everything holds.
inline bool sod_battery(const World& w, const Point3& p, const SOD& s,
                        std::vector<std::string>& violations, std::uint64_t pierce_seed,
                        long pierce_samples) {
    auto fail = [&](const std::string& msg) {
        violations.push_back(msg + " (viewpoint " + detail::point_key(p) + ")");
    };
    std::size_t before = violations.size();
    if (s.size() < 8) fail("SOD has fewer than 8 arcs");
    // Connectivity of the arc union via the feeds-into incidences.
    {
        std::vector<bool> seen(s.size(), false);
        std::deque<std::size_t> q{0};
        seen[0] = true;
        std::vector<std::vector<std::size_t>> adj(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            for (int k = 0; k < 2; ++k) {
                adj[i].push_back(s.host(i, k));
                adj[s.host(i, k)].push_back(i);
            }
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop_front();
            for (std::size_t j : adj[i])
                if (!seen[j]) {
                    seen[j] = true;
                    q.push_back(j);
                }
        }
        for (bool b : seen)
            if (!b) fail("arc union is disconnected");
    }
    try {
        Arrangement ar = build_arrangement(s.map);
        if (ar.faces.size() != s.size() + 2) fail("face count differs from arcs + 2");
        auto swirls = find_swirls(s, ar);
        if (swirls.size() < 4) fail("fewer than 4 swirls");
        long cw = 0, ccw = 0;
        for (const auto& sw : swirls) (sw.orientation < 0 ? cw : ccw)++;
        if (cw == 0 || ccw == 0) fail("missing a swirl orientation class");
        swirl_graph(swirls);  // verifies simplicity, bipartiteness, Euler bound
        contact_graph(s);     // verifies out-degree 2, no 2-cycles
    } catch (const std::exception& ex) {
        fail(std::string("structure check aborted: ") + ex.what());
    }
    SemicircleCover cover = induced_cover(w, p, s);
    if (cover.size() < 8) fail("induced cover smaller than 8 semicircles");
    if (!check_cover(s, cover)) fail("induced cover misses an arc");
    auto pierce = semicircle_pierce_test(s.map, pierce_samples, pierce_seed);
    if (!pierce.counterexamples.empty()) fail("a great semicircle missed every arc");
    return violations.size() == before;
}

/// Deterministic theorem suite over the builtin corpus and random scenes.
/// Identical config yields byte-identical JSON.
inline nlohmann::json theorem_suite(std::uint64_t seed, long trials) {
    Rng rng(seed);
    nlohmann::json rep;
    rep["config"] = {{"seed", seed}, {"trials", trials}};
    std::vector<std::string> violations;
    long scene_trials = trials * 10;

    struct Bounds {
        long min_weak = -1, min_pos_in = -1, min_pos_out = -1, min_weak_cube = -1;
        long n = 0, n_in = 0, n_out = 0, n_boundary = 0, n_random = 0;
    };
    auto note_min = [](long& slot, long v) {
        if (slot < 0 || v < slot) slot = v;
    };

    long vertex_free_found = 0, batteries_passed = 0;
    auto battery_if_vertex_free = [&](const World& w, const Point3& p) {
        if (!visible_vertices(w, p).empty()) return;
        ++vertex_free_found;
        EdgeCounts c = count_visible_edges(w, p);
        if (c.positive < 8)
            violations.push_back("vertex-free viewpoint " + detail::point_key(p) +
                                 " sees fewer than 8 positive portions");
        SodResult sr = build_sod(w, p);
        if (!sr.ok()) {
            violations.push_back("vertex-free viewpoint failed SOD construction");
            return;
        }
        if (sod_battery(w, p, *sr.sod, violations, rng.below(1u << 30), 50)) ++batteries_passed;
    };

    const char* names[] = {"tetrahedron", "cube", "brush"};
    for (const char* name : names) {
        World w = builtin_world(name, std::string(name) == "brush" ? std::optional<Rat>(Rat(2))
                                                                   : std::nullopt);
        detail::BBox bb = detail::bounding_box(w);
        std::vector<Point3> pts = detail::targeted_viewpoints(w);
        std::size_t n_targeted = pts.size();
        for (long i = 0; i < trials; ++i) pts.push_back(detail::random_viewpoint(w, bb, rng));
        Bounds b;
        b.n_random = static_cast<long>(pts.size() - n_targeted);
        for (const auto& p : pts) {
            EdgeCounts c = count_visible_edges(w, p);
            ++b.n;
            note_min(b.min_weak, c.weak);
            if (c.weak < 6)
                violations.push_back(std::string(name) + ": weak count below 6 at " +
                                     detail::point_key(p));
            Region r = classify_point(*w.poly, p).region;
            if (r == Region::boundary) ++b.n_boundary;
            if (r == Region::exterior) {
                ++b.n_out;
                note_min(b.min_pos_out, c.positive);
                if (c.positive < 3)
                    violations.push_back(std::string(name) + ": exterior positive count below 3 at " +
                                         detail::point_key(p));
            } else {
                ++b.n_in;
                note_min(b.min_pos_in, c.positive);
                if (c.positive < 6)
                    violations.push_back(std::string(name) + ": positive count below 6 at " +
                                         detail::point_key(p));
            }
            if (std::string(name) == "cube" && r == Region::interior) {
                note_min(b.min_weak_cube, c.weak);
                if (c.weak < 12)
                    violations.push_back("cube: interior weak count below 12 at " +
                                         detail::point_key(p));
            }
            battery_if_vertex_free(w, p);
        }
        rep["polyhedra"][name] = {{"viewpoints", b.n},
                                  {"random_viewpoints", b.n_random},
                                  {"boundary", b.n_boundary},
                                  {"min_weak", b.min_weak},
                                  {"interior_or_boundary", b.n_in},
                                  {"min_positive_interior", b.min_pos_in},
                                  {"exterior", b.n_out},
                                  {"min_positive_exterior", b.min_pos_out}};
        if (std::string(name) == "cube") rep["polyhedra"][name]["min_weak_interior"] = b.min_weak_cube;
    }

    // The eight-edge scene always exercises the SOD battery at the origin.
    {
        World s8 = builtins::eight_edge_scene();
        battery_if_vertex_free(s8, Point3{0, 0, 0});
        detail::BBox bb = detail::bounding_box(s8);
        for (long i = 0; i < trials; ++i)
            battery_if_vertex_free(s8, detail::random_viewpoint(s8, bb, rng));
    }

    // Random scene trials: every vertex-free viewpoint found feeds the battery.
    long scene_failures = 0;
    for (long t = 0; t < scene_trials; ++t) {
        TrialConfig cfg;
        cfg.triangles = 3 + static_cast<long>(rng.below(4));
        Scene sc;
        try {
            sc = random_scene(cfg, rng);
        } catch (const std::exception&) {
            ++scene_failures;
            continue;
        }
        if (!validate_scene(sc).empty()) {
            violations.push_back("random scene failed validation");
            continue;
        }
        World w = World::of_scene(std::move(sc));
        detail::BBox bb = detail::bounding_box(w);
        for (int i = 0; i < 3; ++i) battery_if_vertex_free(w, detail::random_viewpoint(w, bb, rng));
    }
    rep["sod_suite"] = {{"scene_trials", scene_trials},
                       {"generation_failures", scene_failures},
                       {"vertex_free_viewpoints", vertex_free_found},
                       {"batteries_passed", batteries_passed}};
    rep["violations"] = violations;
    rep["pass"] = violations.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Bit-exact verification of the published lower-bound construction.

namespace detail {

inline void s6_check(nlohmann::json& rep, const std::string& name, bool ok) {
    rep["checks"].push_back({{"check", name}, {"pass", ok}});
    if (!ok) rep["pass"] = false;
}

/// y-coordinates of a triangle's boundary crossings with the plane x = 5.
inline std::set<Rat> crossings_y_at_x5(const Polygon& t) {
    std::set<Rat> ys;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Point3& a = t.vertex(i);
        const Point3& b = t.vertex(i + 1);
        if ((a.x > 5) == (b.x > 5)) continue;
        Rat s = (Rat(5) - a.x) / (b.x - a.x);
        ys.insert(a.y + (b.y - a.y) * s);
    }
    return ys;
}

}  // namespace detail

inline nlohmann::json verify_section6() {
    nlohmann::json rep;
    rep["pass"] = true;
    rep["checks"] = nlohmann::json::array();
    auto ck = [&](const std::string& n, bool ok) { detail::s6_check(rep, n, ok); };

    World w = builtins::eight_edge_scene();
    const Scene& sc = w.scene;
    Point3 p{0, 0, 0};
    auto poly = [&](const char* id) -> const Polygon& { return *sc.find_polygon(id); };

    ck("scene validates (pairwise disjoint relative interiors)", validate_scene(sc).empty());
    ck("R1 lies in the plane x=5",
       poly("R1").plane().contains({5, 0, 0}) && cross(poly("R1").plane().normal.v, {1, 0, 0}).is_zero());
    ck("R2 lies in the plane x=-5",
       poly("R2").plane().contains({-5, 0, 0}) && cross(poly("R2").plane().normal.v, {1, 0, 0}).is_zero());

    // Proof facts of the disjointness proposition.
    ck("T1 meets x=5 at y-coordinates -8/7 and -52/11",
       detail::crossings_y_at_x5(poly("T1")) == std::set<Rat>{Rat(-8, 7), Rat(-52, 11)});
    ck("T2 meets x=5 at y-coordinates -10/7 and -65/11",
       detail::crossings_y_at_x5(poly("T2")) == std::set<Rat>{Rat(-10, 7), Rat(-65, 11)});
    {
        // Projections of T1 and T2 onto y=0 share exactly the point (7,0,-8).
        auto proj = [](const Polygon& t, const std::string& id) {
            std::vector<Point3> vs;
            for (const auto& v : t.vertices) vs.push_back({v.x, Rat(0), v.z});
            return Polygon(id, vs);
        };
        Polygon p1 = proj(poly("T1"), "projT1"), p2 = proj(poly("T2"), "projT2");
        Point3 shared{7, 0, -8};
        bool ok = !relative_interiors_intersect(p1, p2) &&
                  point_in_polygon_2d(p1, shared) == Containment::boundary &&
                  point_in_polygon_2d(p2, shared) == Containment::boundary;
        // Every boundary contact is the shared point: each edge pair that
        // intersects must do so exactly there.
        for (std::size_t i = 0; i < 3 && ok; ++i)
            for (std::size_t j = 0; j < 3 && ok; ++j) {
                Point3 a = p1.vertex(i), b = p1.vertex(i + 1);
                Point3 c = p2.vertex(j), d = p2.vertex(j + 1);
                if (!segments_intersect(a, b, c, d)) continue;
                ok = on_segment(a, b, shared) && on_segment(c, d, shared);
                // A one-point contact at `shared` also requires the segments
                // not to overlap collinearly beyond it.
                if (ok && cross(b - a, d - c).is_zero() && cross(b - a, c - a).is_zero()) ok = false;
            }
        ck("T1 and T2 project onto y=0 touching only at (7,0,-8)", ok);
    }
    {
        auto max_y_only_at = [&](const Polygon& t, const Point3& apex) {
            bool ok = true;
            for (const auto& v : t.vertices)
                ok = ok && (v == apex ? v.y == apex.y : v.y < apex.y);
            return ok;
        };
        ck("T1 has negative y except at (7,0,-8)", max_y_only_at(poly("T1"), {7, 0, -8}));
        // T3: all y positive except the vertex (7,0,8); mirrored statement.
        bool ok = true;
        for (const auto& v : poly("T3").vertices)
            ok = ok && (v == Point3{7, 0, 8} ? v.y == 0 : v.y > 0);
        ck("T3 has positive y except at (7,0,8)", ok);
    }
    {
        Isometry phi1{{Vec3{1, 0, 0}, Vec3{0, -1, 0}, Vec3{0, 0, -1}}, Vec3{0, 0, 0}};
        Isometry phi2{{Vec3{-1, 0, 0}, Vec3{0, 0, -1}, Vec3{0, 1, 0}}, Vec3{0, 0, 0}};
        ck("phi1 (x,y,z)->(x,-y,-z) is a symmetry of the scene", check_symmetry(sc, phi1));
        ck("phi2 (x,y,z)->(-x,-z,y) is a symmetry of the scene", check_symmetry(sc, phi2));
        bool maps = symmetry_image(sc, phi2, "R1") == std::optional<std::string>("R2") &&
                    symmetry_image(sc, phi2, "T1") == std::optional<std::string>("T2") &&
                    symmetry_image(sc, phi2, "T2") == std::optional<std::string>("T3") &&
                    symmetry_image(sc, phi2, "T3") == std::optional<std::string>("T4") &&
                    symmetry_image(sc, phi2, "T4") == std::optional<std::string>("T1");
        ck("phi2 exchanges R1/R2 and cycles T1->T2->T3->T4", maps);
    }

    // Plane equations named in the occlusion proof.
    auto plane_is = [&](const char* id, Rat a, Rat b, Rat c, Rat d) {
        for (const auto& v : poly(id).vertices)
            if (a * v.x + b * v.y + c * v.z + d != 0) return false;
        return true;
    };
    ck("alpha2 has equation 7x-2y+15z+65=0", plane_is("T2", 7, -2, 15, 65));
    ck("alpha4 has equation 7x+2y-15z+65=0", plane_is("T4", 7, 2, -15, 65));

    // The six published occlusion points: ray, parameter, coordinates,
    // barycentric coefficients (where given), and membership.
    struct OcclusionFact {
        const char* name;
        Vec3 ray;            // the ray (ray.x*t, ray.y*t, ray.z*t) toward a vertex
        const char* occluder;
        Rat t;
        Point3 point;
        bool has_coeffs;
        Rat coeffs[3];
    };
    const OcclusionFact facts[] = {
        {"a1", {5, 1, -15}, "T2", Rat(65, 192), {Rat(325, 192), Rat(65, 192), Rat(-325, 64)},
         true, {Rat(149, 8832), Rat(519, 1472), Rat(5569, 8832)}},
        {"a2", {5, -1, -15}, "T2", Rat(65, 188), {Rat(325, 188), Rat(-65, 188), Rat(-975, 188)},
         true, {Rat(261, 8648), Rat(1423, 4324), Rat(5541, 8648)}},
        {"b1", {15, -2, 35}, "R1", Rat(1, 3), {Rat(5), Rat(-2, 3), Rat(35, 3)}, false, {}},
        {"b2", {7, 0, -8}, "R1", Rat(5, 7), {Rat(5), Rat(0), Rat(-40, 7)}, false, {}},
        {"c1", {15, -2, 35}, "T4", Rat(65, 424), {Rat(975, 424), Rat(-65, 212), Rat(2275, 424)},
         true, {Rat(153, 19504), Rat(1577, 4876), Rat(13043, 19504)}},
        {"c2", {-7, -8, 3}, "T4", Rat(13, 22), {Rat(-91, 22), Rat(-52, 11), Rat(39, 22)},
         true, {Rat(21, 1012), Rat(193, 253), Rat(219, 1012)}},
    };
    for (const auto& f : facts) {
        const Polygon& occ = poly(f.occluder);
        Plane pl = occ.plane();
        Rat denom = dot(pl.normal.v, f.ray);
        bool ok = denom != 0;
        if (ok) {
            Rat t = pl.offset / denom;
            ok = t == f.t && t < 1 && f.ray * t == f.point &&
                 point_in_polygon_2d(occ, f.point) == Containment::inside;
        }
        ck(std::string(f.name) + " = published point, parameter, and occluder membership", ok);
        if (f.has_coeffs) {
            Point3 comb{0, 0, 0};
            Rat sum = 0;
            bool open = true;
            for (int i = 0; i < 3; ++i) {
                comb = comb + occ.vertices[i] * f.coeffs[i];
                sum += f.coeffs[i];
                open = open && f.coeffs[i] > 0 && f.coeffs[i] < 1;
            }
            ck(std::string(f.name) + " equals the published convex combination",
               comb == f.point && sum == 1 && open);
        }
    }

    // The occlusion conclusions, stated as E-set facts.
    auto eset_empty = [&](const char* edge) {
        return visible_subsegments(w, p, *w.find_edge(edge)).empty();
    };
    ck("the z<0 edge of R1 is fully occluded", eset_empty("R1:1"));
    ck("the z>0 edge of R1 is fully occluded", eset_empty("R1:3"));
    ck("the x>0 edge of T1 is fully occluded", eset_empty("T1:0"));
    ck("the z>0 edge of T1 is fully occluded", eset_empty("T1:2"));
    ck("the occluded R1 vertices are invisible",
       !sees_point(w, p, {5, 1, -15}) && !sees_point(w, p, {5, -1, -15}));

    ck("the origin sees no vertex", visible_vertices(w, p).empty());
    EdgeCounts c = count_visible_edges(w, p);
    ck("the origin sees exactly eight edges (weak)", c.weak == 8);
    ck("the origin sees positive portions of exactly eight edges", c.positive == 8);
    return rep;
}

}  // namespace sod

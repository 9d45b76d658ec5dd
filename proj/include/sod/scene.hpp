#pragma once

#include "sod/triangulate.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace sod {

/// One entry of a world's edge table.
struct EdgeRec {
    std::string id;  // "<polygon id>:<edge index>"
    Point3 a, b;
};

namespace detail {

inline std::string point_key(const Point3& p) {
    return rat_to_string(p.x) + "," + rat_to_string(p.y) + "," + rat_to_string(p.z);
}

inline std::string segment_key(const Point3& a, const Point3& b) {
    std::string ka = point_key(a), kb = point_key(b);
    return ka < kb ? ka + "|" + kb : kb + "|" + ka;
}

inline bool planes_equal(const Plane& p, const Plane& q) {
    if (!cross(p.normal.v, q.normal.v).is_zero()) return false;
    Rat lambda = dot(p.normal.v, q.normal.v) / dot(p.normal.v, p.normal.v);
    return q.offset == lambda * p.offset;
}

}  // namespace detail

/// A polygonal scene: polygons with pairwise disjoint relative interiors.
struct Scene {
    std::vector<Polygon> polygons;
    std::vector<EdgeRec> edges;  // each boundary segment, once per polygon

    Scene() = default;
    explicit Scene(std::vector<Polygon> polys) : polygons(std::move(polys)) { rebuild_edges(); }

    void rebuild_edges() {
        edges.clear();
        for (const auto& poly : polygons)
            for (std::size_t i = 0; i < poly.size(); ++i)
                edges.push_back({poly.id + ":" + std::to_string(i), poly.vertex(i), poly.vertex(i + 1)});
    }

    const Polygon* find_polygon(const std::string& id) const {
        for (const auto& p : polygons)
            if (p.id == id) return &p;
        return nullptr;
    }

    std::vector<Point3> vertex_list() const {
        std::vector<Point3> out;
        std::set<std::string> seen;
        for (const auto& poly : polygons)
            for (const auto& v : poly.vertices)
                if (seen.insert(detail::point_key(v)).second) out.push_back(v);
        return out;
    }
};

inline std::vector<std::string> validate_scene(const Scene& s) {
    std::vector<std::string> errs;
    if (s.polygons.empty()) errs.emplace_back("scene is empty");
    for (const auto& p : s.polygons) {
        auto pe = p.validate();
        errs.insert(errs.end(), pe.begin(), pe.end());
    }
    if (!errs.empty()) return errs;  // geometry below assumes valid polygons
    for (std::size_t i = 0; i < s.polygons.size(); ++i)
        for (std::size_t j = i + 1; j < s.polygons.size(); ++j)
            if (relative_interiors_intersect(s.polygons[i], s.polygons[j]))
                errs.push_back("relative interiors of " + s.polygons[i].id + " and " +
                               s.polygons[j].id + " intersect");
    return errs;
}

/// A closed, connected, orientable manifold surface of polygonal facets.
///
/// Facets may be coplanar across a shared boundary segment (this is how
/// facets with holes are represented, pre-cut into simple pieces). Such flat
/// seams are not edges of the surface: the edge table keeps only segments
/// where the two incident facet planes differ, and the vertex list keeps only
/// endpoints of those true edges.
struct Polyhedron {
    Scene facets;
    std::vector<EdgeRec> edges;      // true (non-flat) edges, once each
    std::vector<Point3> vertices;    // endpoints of true edges

    static Polyhedron build(std::vector<Polygon> polys, std::vector<std::string>& errs) {
        Polyhedron ph;
        ph.facets = Scene(std::move(polys));
        auto se = validate_scene(ph.facets);
        errs.insert(errs.end(), se.begin(), se.end());
        if (!errs.empty()) return ph;

        struct Use {
            std::size_t facet, edge;
            bool forward;  // traversed a->b where key is built from sorted (a,b)
        };
        std::map<std::string, std::vector<Use>> uses;
        for (std::size_t f = 0; f < ph.facets.polygons.size(); ++f) {
            const Polygon& poly = ph.facets.polygons[f];
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const Point3& a = poly.vertex(i);
                const Point3& b = poly.vertex(i + 1);
                bool forward = detail::point_key(a) < detail::point_key(b);
                uses[detail::segment_key(a, b)].push_back({f, i, forward});
            }
        }
        std::vector<std::vector<std::size_t>> adj(ph.facets.polygons.size());
        for (const auto& [key, us] : uses) {
            if (us.size() != 2) {
                errs.push_back("boundary segment " + key + " used by " + std::to_string(us.size()) +
                               " facet sides (manifold needs exactly 2)");
                continue;
            }
            if (us[0].facet == us[1].facet) {
                errs.push_back("boundary segment " + key + " used twice by facet " +
                               ph.facets.polygons[us[0].facet].id);
                continue;
            }
            if (us[0].forward == us[1].forward)
                errs.push_back("inconsistent orientation across segment " + key);
            adj[us[0].facet].push_back(us[1].facet);
            adj[us[1].facet].push_back(us[0].facet);
            const Polygon& p0 = ph.facets.polygons[us[0].facet];
            const Polygon& p1 = ph.facets.polygons[us[1].facet];
            if (!detail::planes_equal(p0.plane(), p1.plane())) {
                const Point3& a = p0.vertex(us[0].edge);
                const Point3& b = p0.vertex(us[0].edge + 1);
                ph.edges.push_back({p0.id + ":" + std::to_string(us[0].edge), a, b});
            }
        }
        // Connectivity over the facet adjacency graph.
        if (!ph.facets.polygons.empty()) {
            std::vector<bool> seen(ph.facets.polygons.size(), false);
            std::vector<std::size_t> stack{0};
            seen[0] = true;
            while (!stack.empty()) {
                std::size_t f = stack.back();
                stack.pop_back();
                for (std::size_t g : adj[f])
                    if (!seen[g]) {
                        seen[g] = true;
                        stack.push_back(g);
                    }
            }
            for (bool b : seen)
                if (!b) {
                    errs.emplace_back("surface is not connected");
                    break;
                }
        }
        std::set<std::string> vseen;
        for (const auto& e : ph.edges) {
            for (const Point3* p : {&e.a, &e.b})
                if (vseen.insert(detail::point_key(*p)).second) ph.vertices.push_back(*p);
        }
        return ph;
    }
};

/// A rational rigid motion: orthogonal matrix plus translation.
struct Isometry {
    std::array<Vec3, 3> rows;
    Vec3 translation;

    bool is_orthogonal() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (dot(rows[i], rows[j]) != Rat(i == j ? 1 : 0)) return false;
        return true;
    }

    Point3 apply(const Point3& p) const {
        return {dot(rows[0], p) + translation.x, dot(rows[1], p) + translation.y,
                dot(rows[2], p) + translation.z};
    }
};

/// True iff the isometry permutes the scene's polygons as point sets.
inline bool check_symmetry(const Scene& s, const Isometry& iso) {
    if (!iso.is_orthogonal()) throw std::invalid_argument("check_symmetry: matrix not orthogonal");
    auto edge_set_key = [](const std::vector<Point3>& vs) {
        std::set<std::string> keys;
        for (std::size_t i = 0; i < vs.size(); ++i)
            keys.insert(detail::segment_key(vs[i], vs[(i + 1) % vs.size()]));
        std::string out;
        for (const auto& k : keys) out += k + ";";
        return out;
    };
    std::map<std::string, std::size_t> by_boundary;
    for (std::size_t i = 0; i < s.polygons.size(); ++i)
        by_boundary[edge_set_key(s.polygons[i].vertices)] = i;
    std::set<std::size_t> hit;
    for (const auto& poly : s.polygons) {
        std::vector<Point3> img;
        img.reserve(poly.size());
        for (const auto& v : poly.vertices) img.push_back(iso.apply(v));
        auto it = by_boundary.find(edge_set_key(img));
        if (it == by_boundary.end()) return false;
        hit.insert(it->second);
    }
    return hit.size() == s.polygons.size();
}

/// Image of a polygon's id under an isometry that is a scene symmetry.
inline std::optional<std::string> symmetry_image(const Scene& s, const Isometry& iso,
                                                 const std::string& polygon_id) {
    const Polygon* src = s.find_polygon(polygon_id);
    if (!src) return std::nullopt;
    std::vector<Point3> img;
    for (const auto& v : src->vertices) img.push_back(iso.apply(v));
    std::set<std::string> keys;
    for (std::size_t i = 0; i < img.size(); ++i)
        keys.insert(detail::segment_key(img[i], img[(i + 1) % img.size()]));
    for (const auto& poly : s.polygons) {
        std::set<std::string> pk;
        for (std::size_t i = 0; i < poly.size(); ++i)
            pk.insert(detail::segment_key(poly.vertex(i), poly.vertex(i + 1)));
        if (pk == keys) return poly.id;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON file formats.
// Scene: {"polygons":[{"id":str,"vertices":[["x","y","z"],...]},...]}
// Polyhedron files additionally carry {"closed":true}.
// ---------------------------------------------------------------------------

inline nlohmann::json point_to_json(const Point3& p) {
    return nlohmann::json::array({rat_to_string(p.x), rat_to_string(p.y), rat_to_string(p.z)});
}

inline Point3 point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("point must be a 3-array");
    return {rat_from_string(j[0].get<std::string>()), rat_from_string(j[1].get<std::string>()),
            rat_from_string(j[2].get<std::string>())};
}

inline nlohmann::json scene_to_json(const Scene& s, bool closed = false) {
    nlohmann::json out;
    if (closed) out["closed"] = true;
    out["polygons"] = nlohmann::json::array();
    for (const auto& poly : s.polygons) {
        nlohmann::json jp;
        jp["id"] = poly.id;
        jp["vertices"] = nlohmann::json::array();
        for (const auto& v : poly.vertices) jp["vertices"].push_back(point_to_json(v));
        out["polygons"].push_back(std::move(jp));
    }
    return out;
}

inline Scene scene_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("polygons") || !j["polygons"].is_array())
        throw std::invalid_argument("scene file: missing \"polygons\" array");
    std::vector<Polygon> polys;
    for (const auto& jp : j["polygons"]) {
        if (!jp.contains("id") || !jp.contains("vertices"))
            throw std::invalid_argument("scene file: polygon needs \"id\" and \"vertices\"");
        std::vector<Point3> vs;
        for (const auto& jv : jp["vertices"]) vs.push_back(point_from_json(jv));
        polys.emplace_back(jp["id"].get<std::string>(), std::move(vs));
    }
    return Scene(std::move(polys));
}

}  // namespace sod

#pragma once

#include "sod/scene.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sod {

/// Either a polygonal scene or a polyhedron, with the accessors the
/// visibility engine needs. Which semantics applies follows from which one
/// it holds.
struct World {
    Scene scene;                      // holds the occluder polygons in both cases
    std::optional<Polyhedron> poly;   // engaged for polyhedron semantics

    static World of_scene(Scene s) { return World{std::move(s), std::nullopt}; }
    static World of_polyhedron(Polyhedron p) {
        World w;
        w.scene = p.facets;
        w.poly = std::move(p);
        return w;
    }

    bool is_polyhedron() const { return poly.has_value(); }
    const std::vector<Polygon>& polygons() const { return scene.polygons; }
    const std::vector<EdgeRec>& edges() const { return poly ? poly->edges : scene.edges; }
    std::vector<Point3> vertices() const { return poly ? poly->vertices : scene.vertex_list(); }

    const EdgeRec* find_edge(const std::string& id) const {
        for (const auto& e : edges())
            if (e.id == id) return &e;
        return nullptr;
    }
};

namespace builtins {

inline World tetrahedron() {
    Point3 a{1, 1, 1}, b{1, -1, -1}, c{-1, 1, -1}, d{-1, -1, 1};
    std::vector<Polygon> fs;
    fs.emplace_back("F0", std::vector<Point3>{b, d, c});
    fs.emplace_back("F1", std::vector<Point3>{a, c, d});
    fs.emplace_back("F2", std::vector<Point3>{a, d, b});
    fs.emplace_back("F3", std::vector<Point3>{a, b, c});
    std::vector<std::string> errs;
    auto ph = Polyhedron::build(std::move(fs), errs);
    if (!errs.empty()) throw std::logic_error("builtin tetrahedron invalid: " + errs.front());
    return World::of_polyhedron(std::move(ph));
}

inline World cube(const Rat& side = 1) {
    if (side <= 0) throw std::invalid_argument("cube: side must be positive");
    const Rat& s = side;
    auto P = [&](int x, int y, int z) { return Point3{x ? s : Rat(0), y ? s : Rat(0), z ? s : Rat(0)}; };
    std::vector<Polygon> fs;
    fs.emplace_back("bottom", std::vector<Point3>{P(0,0,0), P(0,1,0), P(1,1,0), P(1,0,0)});
    fs.emplace_back("top", std::vector<Point3>{P(0,0,1), P(1,0,1), P(1,1,1), P(0,1,1)});
    fs.emplace_back("south", std::vector<Point3>{P(0,0,0), P(1,0,0), P(1,0,1), P(0,0,1)});
    fs.emplace_back("north", std::vector<Point3>{P(1,1,0), P(0,1,0), P(0,1,1), P(1,1,1)});
    fs.emplace_back("west", std::vector<Point3>{P(0,1,0), P(0,0,0), P(0,0,1), P(0,1,1)});
    fs.emplace_back("east", std::vector<Point3>{P(1,0,0), P(1,1,0), P(1,1,1), P(1,0,1)});
    std::vector<std::string> errs;
    auto ph = Polyhedron::build(std::move(fs), errs);
    if (!errs.empty()) throw std::logic_error("builtin cube invalid: " + errs.front());
    return World::of_polyhedron(std::move(ph));
}

/// Box with a k x k grid of tetrahedral spikes over small triangular openings
/// in the top. Each spike chamber connects to the box through its opening, so
/// an interior point near a spike tip sees exactly the six edges of its spike.
/// The flat top around the openings is pre-cut into simple coplanar pieces
/// (the seams are not edges of the surface).
inline World brush(int k) {
    if (k < 1) throw std::invalid_argument("brush: k must be >= 1");
    std::vector<Polygon> fs;
    auto name = [](const std::string& base, int i, int j) {
        return base + "_" + std::to_string(i) + "_" + std::to_string(j);
    };
    Rat K(k);
    // Bottom: unit squares, outward -z.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            fs.emplace_back(name("bot", i, j),
                            std::vector<Point3>{{i, j, 0}, {i, Rat(j + 1), 0},
                                                {Rat(i + 1), Rat(j + 1), 0}, {Rat(i + 1), j, 0}});
    // Walls: unit-wide strips so rim segments match the top cells.
    for (int i = 0; i < k; ++i) {
        fs.emplace_back(name("wall_s", i, 0),
                        std::vector<Point3>{{i, 0, 0}, {Rat(i + 1), 0, 0}, {Rat(i + 1), 0, 1}, {i, 0, 1}});
        fs.emplace_back(name("wall_n", i, 0),
                        std::vector<Point3>{{Rat(i + 1), K, 0}, {i, K, 0}, {i, K, 1}, {Rat(i + 1), K, 1}});
        fs.emplace_back(name("wall_w", 0, i),
                        std::vector<Point3>{{0, Rat(i + 1), 0}, {0, i, 0}, {0, i, 1}, {0, Rat(i + 1), 1}});
        fs.emplace_back(name("wall_e", 0, i),
                        std::vector<Point3>{{K, i, 0}, {K, Rat(i + 1), 0}, {K, Rat(i + 1), 1}, {K, i, 1}});
    }
    // Top cells: three coplanar wrap pieces around a triangular opening, and
    // a spike of three slant faces over the opening.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat cx = Rat(2 * i + 1) / 2, cy = Rat(2 * j + 1) / 2;
            Point3 c1{i, j, 1}, c2{Rat(i + 1), j, 1}, c3{Rat(i + 1), Rat(j + 1), 1}, c4{i, Rat(j + 1), 1};
            Point3 h1{cx + Rat(1, 8), cy, 1};
            Point3 h2{cx - Rat(1, 8), cy + Rat(1, 8), 1};
            Point3 h3{cx - Rat(1, 8), cy - Rat(1, 8), 1};
            Point3 apex{cx, cy, 2};
            fs.emplace_back(name("topA", i, j), std::vector<Point3>{c2, c3, c4, h2, h1});
            fs.emplace_back(name("topB", i, j), std::vector<Point3>{c4, c1, h3, h2});
            fs.emplace_back(name("topC", i, j), std::vector<Point3>{c1, c2, h1, h3});
            fs.emplace_back(name("spike1", i, j), std::vector<Point3>{h1, h2, apex});
            fs.emplace_back(name("spike2", i, j), std::vector<Point3>{h2, h3, apex});
            fs.emplace_back(name("spike3", i, j), std::vector<Point3>{h3, h1, apex});
        }
    std::vector<std::string> errs;
    auto ph = Polyhedron::build(std::move(fs), errs);
    if (!errs.empty()) throw std::logic_error("builtin brush invalid: " + errs.front());
    return World::of_polyhedron(std::move(ph));
}

/// The six-polygon scene whose central viewpoint sees no vertices and exactly
/// eight edges.
inline World eight_edge_scene() {
    std::vector<Polygon> ps;
    ps.emplace_back("R1", std::vector<Point3>{{5, 1, 15}, {5, 1, -15}, {5, -1, -15}, {5, -1, 15}});
    ps.emplace_back("R2", std::vector<Point3>{{-5, 15, 1}, {-5, 15, -1}, {-5, -15, -1}, {-5, -15, 1}});
    ps.emplace_back("T1", std::vector<Point3>{{15, -2, 35}, {7, 0, -8}, {-7, -8, 3}});
    ps.emplace_back("T2", std::vector<Point3>{{-15, -35, -2}, {-7, 8, 0}, {7, -3, -8}});
    ps.emplace_back("T3", std::vector<Point3>{{15, 2, -35}, {7, 0, 8}, {-7, 8, -3}});
    ps.emplace_back("T4", std::vector<Point3>{{-15, 35, 2}, {-7, -8, 0}, {7, 3, 8}});
    return World::of_scene(Scene(std::move(ps)));
}

}  // namespace builtins

/// Dispatch by name; `param` feeds cube's side or brush's k.
inline World builtin_world(const std::string& name, std::optional<Rat> param = std::nullopt) {
    if (name == "tetrahedron") return builtins::tetrahedron();
    if (name == "cube") return builtins::cube(param.value_or(Rat(1)));
    if (name == "brush") {
        Rat k = param.value_or(Rat(2));
        if (denominator(k) != 1 || k < 1) throw std::invalid_argument("brush: k must be a positive integer");
        return builtins::brush(static_cast<int>(numerator(k)));
    }
    if (name == "eight_edge_scene") return builtins::eight_edge_scene();
    throw std::invalid_argument("unknown builtin \"" + name + "\"");
}

}  // namespace sod

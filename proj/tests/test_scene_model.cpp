#include "sod/world.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sod;

TEST_CASE("builtin worlds validate") {
    for (const char* name : {"tetrahedron", "cube", "eight_edge_scene"}) {
        World w = builtin_world(name);
        CHECK(validate_scene(w.scene).empty());
    }
    for (int k : {1, 2, 3}) {
        World w = builtins::brush(k);
        CHECK(validate_scene(w.scene).empty());
        REQUIRE(w.poly.has_value());
    }
}

TEST_CASE("eight-edge scene edge table has 20 entries") {
    World s8 = builtins::eight_edge_scene();
    CHECK(s8.edges().size() == 20);  // 2 rectangles x 4 + 4 triangles x 3
    CHECK(s8.polygons().size() == 6);
}

TEST_CASE("scene validation flags overlapping interiors") {
    World s8 = builtins::eight_edge_scene();
    const Polygon& R1 = *s8.scene.find_polygon("R1");

    Scene twice({R1, Polygon("R1b", R1.vertices)});
    CHECK_FALSE(validate_scene(twice).empty());

    std::vector<Point3> shifted;
    for (const auto& v : R1.vertices) shifted.push_back(v + Vec3{1, 0, 0});
    Scene ok({R1, Polygon("R1s", shifted)});
    CHECK(validate_scene(ok).empty());
}

TEST_CASE("polyhedron manifold checks reject an open box") {
    World cube = builtin_world("cube");
    std::vector<Polygon> open(cube.scene.polygons.begin(), cube.scene.polygons.end() - 1);
    std::vector<std::string> errs;
    Polyhedron::build(open, errs);
    CHECK_FALSE(errs.empty());
}

TEST_CASE("flat seams are excluded from the polyhedron edge table") {
    // brush(1): coplanar bottom/wall pieces share segments that are not true
    // edges; every remaining edge has distinct facet planes across it.
    World br = builtins::brush(1);
    for (const auto& e : br.poly->edges) {
        int count = 0;
        std::vector<const Polygon*> hosts;
        for (const auto& f : br.poly->facets.polygons)
            for (std::size_t i = 0; i < f.size(); ++i)
                if ((f.vertex(i) == e.a && f.vertex(i + 1) == e.b) ||
                    (f.vertex(i) == e.b && f.vertex(i + 1) == e.a)) {
                    ++count;
                    hosts.push_back(&f);
                }
        REQUIRE(count == 2);
        CHECK_FALSE(cross(hosts[0]->plane().normal.v, hosts[1]->plane().normal.v).is_zero());
    }
}

TEST_CASE("scene JSON round trip preserves rationals exactly") {
    World s8 = builtins::eight_edge_scene();
    nlohmann::json j = scene_to_json(s8.scene);
    Scene back = scene_from_json(j);
    REQUIRE(back.polygons.size() == s8.scene.polygons.size());
    for (std::size_t i = 0; i < back.polygons.size(); ++i) {
        CHECK(back.polygons[i].id == s8.scene.polygons[i].id);
        CHECK(back.polygons[i].vertices == s8.scene.polygons[i].vertices);
    }
    // Denominator zero is rejected at parse time.
    nlohmann::json bad = {{"polygons",
                           {{{"id", "p"},
                             {"vertices",
                              {{"0", "0", "1/0"}, {"1", "0", "0"}, {"0", "1", "0"}}}}}}};
    CHECK_THROWS(scene_from_json(bad));
}

TEST_CASE("the symmetry phi2 has order four on polygon labels") {
    World s8 = builtins::eight_edge_scene();
    Isometry phi2{{Vec3{-1, 0, 0}, Vec3{0, 0, -1}, Vec3{0, 1, 0}}, Vec3{0, 0, 0}};
    REQUIRE(check_symmetry(s8.scene, phi2));

    auto step = [&](const std::string& id) { return *symmetry_image(s8.scene, phi2, id); };
    std::string x = "T1";
    for (int i = 0; i < 4; ++i) x = step(x);
    CHECK(x == "T1");
    CHECK(step("T1") == "T2");
    CHECK(step("R1") == "R2");
    CHECK(step(step("T1")) != "T1");  // order exactly 4, not 2

    Isometry not_orth{{Vec3{2, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, Vec3{0, 0, 0}};
    CHECK_THROWS(check_symmetry(s8.scene, not_orth));
}

TEST_CASE("brush edge and facet counts grow with k") {
    World b1 = builtins::brush(1);
    World b2 = builtins::brush(2);
    CHECK(b2.poly->facets.polygons.size() > b1.poly->facets.polygons.size());
    CHECK(b2.poly->edges.size() > b1.poly->edges.size());
    CHECK_THROWS(builtins::brush(0));
}

TEST_CASE("builtin dispatch") {
    CHECK_THROWS(builtin_world("dodecahedron"));
    CHECK(builtin_world("cube", Rat(3)).poly.has_value());
    CHECK_THROWS(builtin_world("brush", Rat(1, 2)));  // k must be a positive integer
}

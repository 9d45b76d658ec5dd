#include "sod/sphere.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sod;

TEST_CASE("projection to directions") {
    Point3 p{1, 1, 1};
    Dir3 d = project(p, {3, 5, 2});
    CHECK(d == Dir3{{2, 4, 1}});
    CHECK_THROWS(project(p, p));
}

TEST_CASE("arc membership and coordinates") {
    Arc a(Dir3{{1, 0, 0}}, Dir3{{0, 1, 0}}, "e", Rat(0), Rat(1));
    CHECK(a.contains(Vec3{1, 1, 0}, false));
    CHECK(a.contains(Vec3{1, 0, 0}, false));
    CHECK_FALSE(a.contains(Vec3{1, 0, 0}, true));     // endpoint not strictly inside
    CHECK_FALSE(a.contains(Vec3{-1, 1, 0}, false));   // outside the positive span
    CHECK_FALSE(a.contains(Vec3{1, 1, 1}, false));    // off the great circle
    CHECK_THROWS(Arc(Dir3{{1, 0, 0}}, Dir3{{2, 0, 0}}, "e", Rat(0), Rat(1)));   // dependent
    CHECK_THROWS(Arc(Dir3{{1, 0, 0}}, Dir3{{-1, 0, 0}}, "e", Rat(0), Rat(1)));  // antipodal
}

TEST_CASE("eight-edge scene visibility map is a SOD with eight arcs") {
    World s8 = builtins::eight_edge_scene();
    Point3 o{0, 0, 0};
    VisMap m = build_vismap(s8, o);
    REQUIRE(m.arcs.size() == 8);

    std::set<std::string> sources;
    for (const auto& a : m.arcs) sources.insert(a.source_edge);
    CHECK(sources.size() == 8);

    AxiomReport rep = check_axioms(m);
    CHECK(rep.a1);
    CHECK(rep.a2);
    CHECK(rep.a3);
    REQUIRE(rep.pass());

    // Every arc endpoint lies in the relative interior of exactly one arc.
    for (std::size_t i = 0; i < m.arcs.size(); ++i)
        for (int k = 0; k < 2; ++k) REQUIRE(m.incidence[i][k].has_value());

    SodResult sr = build_sod(s8, o);
    REQUIRE(sr.ok());
    CHECK(sr.sod->size() == 8);
}

TEST_CASE("tetrahedron centroid map fails A1' and A2") {
    World tet = builtin_world("tetrahedron");
    Point3 c{0, 0, 0};
    for (const auto& v : tet.poly->vertices) c = c + v;
    c = c * Rat(1, 4);
    VisMap m = build_vismap(tet, c);
    AxiomReport rep = check_axioms(m);
    CHECK_FALSE(rep.a1);
    CHECK_FALSE(rep.a2);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.witnesses.empty());
    CHECK_FALSE(build_sod(tet, c).ok());  // the centroid sees all four vertices
}

TEST_CASE("face enumeration: arcs + 2 for a SOD, base cases") {
    World s8 = builtins::eight_edge_scene();
    SodResult sr = build_sod(s8, {0, 0, 0});
    REQUIRE(sr.ok());
    Arrangement ar = build_arrangement(sr.sod->map);
    CHECK(ar.faces.size() == sr.sod->size() + 2);

    VisMap empty;
    empty.viewpoint = {0, 0, 0};
    CHECK(enumerate_faces(empty).size() == 1);  // bare sphere

    // A single closed triangle of arcs cuts the sphere into two faces.
    VisMap tri;
    tri.viewpoint = {0, 0, 0};
    tri.arcs.push_back(Arc(Dir3{{1, 0, 0}}, Dir3{{0, 1, 0}}, "a", Rat(0), Rat(1)));
    tri.arcs.push_back(Arc(Dir3{{0, 1, 0}}, Dir3{{0, 0, 1}}, "b", Rat(0), Rat(1)));
    tri.arcs.push_back(Arc(Dir3{{0, 0, 1}}, Dir3{{1, 0, 0}}, "c", Rat(0), Rat(1)));
    tri.incidence.assign(3, {});
    CHECK(enumerate_faces(tri).size() == 2);
}

TEST_CASE("semicircle piercing: samples and counterexamples") {
    World s8 = builtins::eight_edge_scene();
    VisMap m = build_vismap(s8, {0, 0, 0});

    PierceReport rep = semicircle_pierce_test(m, 1000, 17);
    CHECK(rep.samples == 1000);
    CHECK(rep.counterexamples.empty());

    PierceReport none = semicircle_pierce_test(m, 0, 17);
    CHECK(none.samples == 0);
    CHECK(none.counterexamples.empty());

    // A single short arc cannot meet every great semicircle.
    VisMap single;
    single.viewpoint = {0, 0, 0};
    single.arcs.push_back(Arc(Dir3{{1, 0, 0}}, Dir3{{1, 1, 0}}, "a", Rat(0), Rat(1)));
    single.incidence.assign(1, {});
    GreatSemicircle away(Dir3{{0, 0, 1}}, Dir3{{-1, 0, 0}});
    CHECK_FALSE(semicircle_pierces(single, away));
    PierceReport srep = semicircle_pierce_test(single, 500, 3);
    CHECK_FALSE(srep.counterexamples.empty());
}

TEST_CASE("a single square facet projects to four arcs") {
    Polygon sq("sq", {{-1, 5, -1}, {1, 5, -1}, {1, 5, 1}, {-1, 5, 1}});
    World w = World::of_scene(Scene({sq}));
    VisMap m = build_vismap(w, {0, 0, 0});
    CHECK(m.arcs.size() == 4);
    AxiomReport rep = check_axioms(m);
    CHECK_FALSE(rep.a2);  // endpoints meet at projected vertices, hosted by nobody
}

TEST_CASE("SOD JSON round trip") {
    World s8 = builtins::eight_edge_scene();
    SodResult sr = build_sod(s8, {0, 0, 0});
    REQUIRE(sr.ok());
    nlohmann::json j = sod_to_json(*sr.sod);
    CHECK(j.contains("viewpoint"));
    CHECK(j["arcs"].size() == 8);
    CHECK(j["feeds_into"].size() == 16);  // two hosts per arc

    VisMap back = vismap_from_json(j);
    REQUIRE(back.arcs.size() == 8);
    SOD s2 = upgrade_to_sod(std::move(back));
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(s2.map.arcs[i].u == sr.sod->map.arcs[i].u);
        CHECK(s2.map.arcs[i].v == sr.sod->map.arcs[i].v);
        for (int k = 0; k < 2; ++k) CHECK(s2.host(i, k) == sr.sod->host(i, k));
    }
}

TEST_CASE("great semicircle construction validates orthogonality") {
    CHECK_THROWS(GreatSemicircle(Dir3{{0, 0, 1}}, Dir3{{0, 1, 1}}));
    CHECK_NOTHROW(GreatSemicircle(Dir3{{0, 0, 1}}, Dir3{{0, 1, 0}}));
}

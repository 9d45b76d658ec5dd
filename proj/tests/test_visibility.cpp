#include "sod/visibility.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sod;

namespace {

EdgeCounts counts(const World& w, const Point3& p) { return count_visible_edges(w, p); }

}  // namespace

TEST_CASE("point classification on the cube") {
    World cube = builtin_world("cube");
    CHECK(classify_point(*cube.poly, {Rat(1, 2), Rat(1, 2), Rat(1, 2)}).region == Region::interior);
    CHECK(classify_point(*cube.poly, {2, 2, 2}).region == Region::exterior);
    CHECK(classify_point(*cube.poly, {Rat(1, 2), Rat(1, 2), 0}).region == Region::boundary);
    CHECK(classify_point(*cube.poly, {0, 0, 0}).region == Region::boundary);  // vertex
    CHECK(classify_point(*cube.poly, {Rat(1, 2), 0, 0}).region == Region::boundary);  // edge
}

TEST_CASE("tetrahedron counts: centroid and exterior facet point") {
    World tet = builtin_world("tetrahedron");
    // Centroid: all six edges fully visible.
    Point3 c{0, 0, 0};
    for (const auto& v : tet.poly->vertices) c = c + v;
    c = c * Rat(1, 4);
    EdgeCounts in = counts(tet, c);
    CHECK(in.weak == 6);
    CHECK(in.positive == 6);

    // Exterior point beyond a facet center: the three facet edges are fully
    // visible, the other three only at vertices — weak 6, positive 3.
    const Polygon& f = tet.polygons()[0];
    Point3 fc{0, 0, 0};
    for (const auto& v : f.vertices) fc = fc + v;
    fc = fc * Rat(1, 3);
    Vec3 n = f.plane().normal.v;
    Point3 outside = fc + n * (side_of_plane(f.plane(), c) < 0 ? Rat(1, 4) : Rat(-1, 4));
    REQUIRE(classify_point(*tet.poly, outside).region == Region::exterior);
    EdgeCounts out = counts(tet, outside);
    CHECK(out.weak == 6);
    CHECK(out.positive == 3);

    // The three hidden edges each contribute a single degenerate interval at
    // the shared facet vertex.
    int degenerate_only = 0;
    for (const auto& vs : all_visible_sets(tet, outside))
        if (!vs.empty() && !vs.has_positive_portion()) {
            ++degenerate_only;
            CHECK(vs.components() == 1);
        }
    CHECK(degenerate_only == 3);
}

TEST_CASE("cube centroid sees all twelve edges") {
    World cube = builtin_world("cube");
    EdgeCounts c = counts(cube, {Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK(c.weak == 12);
    CHECK(c.positive == 12);
}

TEST_CASE("eight-edge scene at the origin: the headline counts") {
    World s8 = builtins::eight_edge_scene();
    Point3 o{0, 0, 0};
    CHECK(visible_vertices(s8, o).empty());
    EdgeCounts c = counts(s8, o);
    CHECK(c.weak == 8);
    CHECK(c.positive == 8);

    // The four fully occluded edges.
    for (const char* id : {"R1:1", "R1:3", "T1:0", "T1:2"})
        CHECK(visible_subsegments(s8, o, *s8.find_edge(id)).empty());

    // Frozen visible intervals, exact.
    for (const char* id : {"R1:0", "R1:2", "R2:1", "R2:3"}) {
        VisibleSet vs = visible_subsegments(s8, o, *s8.find_edge(id));
        REQUIRE(vs.components() == 1);
        CHECK(vs.intervals[0].lo == Rat(87, 350));
        CHECK(vs.intervals[0].hi == Rat(901, 1050));
    }
    for (const char* id : {"T1:1", "T2:1", "T3:1", "T4:1"}) {
        VisibleSet vs = visible_subsegments(s8, o, *s8.find_edge(id));
        REQUIRE(vs.components() == 1);
        CHECK(vs.intervals[0].lo == Rat(7, 54));
        CHECK(vs.intervals[0].hi == Rat(104, 119));
    }
}

TEST_CASE("sees_point examples and symmetry") {
    World s8 = builtins::eight_edge_scene();
    Point3 o{0, 0, 0};
    // The positive z-axis pierces T4 (plane 7x+2y-15z+65=0) at (0,0,13/3),
    // which lies strictly inside the triangle, so the straight-up sightline
    // is blocked.
    CHECK_FALSE(sees_point(s8, o, {0, 0, 100}));
    CHECK_FALSE(sees_point(s8, {0, 0, 100}, o));
    // (5,1,0) is the t=1/2 point of edge R1:0, inside its visible interval
    // [87/350, 901/1050].
    CHECK(sees_point(s8, o, {5, 1, 0}));
    CHECK(sees_point(s8, {5, 1, 0}, o));
    CHECK_FALSE(sees_point(s8, o, {5, 1, -15}));
    CHECK_FALSE(sees_point(s8, {5, 1, -15}, o));

    World cube = builtin_world("cube");
    // Interior to surface point: visible; straight through the far wall: not.
    CHECK(sees_point(cube, {Rat(1, 2), Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2), 0}));
    CHECK_FALSE(sees_point(cube, {Rat(1, 2), Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2), -1}));
    // Two exterior points whose segment passes outside the cube.
    CHECK(sees_point(cube, {2, 0, 0}, {0, 2, 0}));
}

TEST_CASE("an occluder splitting one edge into two components") {
    // A long horizontal edge watched from the origin, with a small wall
    // occluding only the middle of it.
    Polygon target("target", {{-10, 10, 0}, {10, 10, 0}, {10, 10, 5}, {-10, 10, 5}});
    Polygon wall("wall", {{-1, 5, -1}, {1, 5, -1}, {1, 5, 1}, {-1, 5, 1}});
    World w = World::of_scene(Scene({target, wall}));
    REQUIRE(validate_scene(w.scene).empty());
    VisibleSet vs = visible_subsegments(w, {0, 0, 0}, *w.find_edge("target:0"));
    CHECK(vs.components() == 2);
    CHECK(vs.has_positive_portion());
    // The shadow of the wall's [-1,1] x-range at distance 10 is [-2,2]:
    // parameters 8/20 and 12/20 on the edge from (-10,10,0) to (10,10,0).
    CHECK(vs.intervals[0].lo == Rat(0));
    CHECK(vs.intervals[0].hi == Rat(2, 5));
    CHECK(vs.intervals[1].lo == Rat(3, 5));
    CHECK(vs.intervals[1].hi == Rat(1));
}

TEST_CASE("monotone occlusion: adding a polygon never grows a visible set") {
    Polygon target("target", {{-10, 10, 0}, {10, 10, 0}, {10, 10, 5}, {-10, 10, 5}});
    Polygon wall("wall", {{-1, 5, -1}, {1, 5, -1}, {1, 5, 1}, {-1, 5, 1}});
    World base = World::of_scene(Scene({target}));
    World more = World::of_scene(Scene({target, wall}));
    Point3 p{0, 0, 0};
    VisibleSet va = visible_subsegments(base, p, *base.find_edge("target:0"));
    VisibleSet vb = visible_subsegments(more, p, *more.find_edge("target:0"));
    // Every point visible with the wall present is visible without it.
    for (const auto& iv : vb.intervals) {
        Rat mid = (iv.lo + iv.hi) / 2;
        for (const Rat& t : {iv.lo, mid, iv.hi}) {
            bool in_a = false;
            for (const auto& ja : va.intervals) in_a = in_a || (t >= ja.lo && t <= ja.hi);
            CHECK(in_a);
        }
    }
}

TEST_CASE("interval invariants hold everywhere") {
    World s8 = builtins::eight_edge_scene();
    for (const auto& vs : all_visible_sets(s8, {0, 0, 0})) {
        for (std::size_t i = 0; i < vs.intervals.size(); ++i) {
            CHECK(vs.intervals[i].lo <= vs.intervals[i].hi);
            CHECK(vs.intervals[i].lo >= 0);
            CHECK(vs.intervals[i].hi <= 1);
            if (i > 0) CHECK(vs.intervals[i - 1].hi < vs.intervals[i].lo);
        }
    }
}

#include "g1/fixtures.hpp"
#include "g1/gluing.hpp"

#include <doctest.h>

#include <map>

using namespace g1;

namespace {

int interior_vertex_count(const TopoSurface& s)
{
    int n = 0;
    for (const auto& v : s.vertices())
        n += v.interior ? 1 : 0;
    return n;
}

/// Sum of fan sizes equals the number of face corners.
void check_euler_consistency(const TopoSurface& s)
{
    int fans = 0, corners = 0;
    for (const auto& v : s.vertices())
        fans += v.face_count();
    for (const auto& f : s.faces())
        corners += corner_count(f.kind);
    CHECK(fans == corners);
}

/// Interior edges appear in exactly two fans; boundary edges in exactly two chains.
void check_edge_incidence(const TopoSurface& s)
{
    std::map<int, int> seen;
    for (const auto& v : s.vertices())
        for (const auto& fe : v.edges)
            ++seen[fe.edge];
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e)
        CHECK_MESSAGE(seen[e] == 2, "edge " << s.edge(e).id);
}

} // namespace

TEST_CASE("two quads glued along one edge")
{
    const Fixture fx = two_patch(FaceKind::Quad, FaceKind::Quad);
    const SurfaceCounts c = fx.surface.counts();
    CHECK(c.quads == 2);
    CHECK(c.edges == 7);
    CHECK(c.boundary_edges == 6);
    CHECK(c.vertices == 6);
    CHECK(interior_vertex_count(fx.surface) == 0);
    check_euler_consistency(fx.surface);
    check_edge_incidence(fx.surface);
}

TEST_CASE("round corner structure")
{
    const Fixture fx = round_corner();
    const SurfaceCounts c = fx.surface.counts(crossing_flags(fx.surface, fx.gluings));
    CHECK(c.quads == 3);
    CHECK(c.vertices == 7);
    CHECK(c.edges == 9);
    CHECK(c.interior_edges() == 3);
    CHECK(c.crossing_vertices == 0);
    const VertexClass& gamma = fx.surface.vertex(fx.vertices.at("gamma"));
    CHECK(gamma.interior);
    CHECK(gamma.face_count() == 3);
    CHECK(gamma.edges.size() == 3);
    const VertexClass& delta = fx.surface.vertex(fx.vertices.at("delta1"));
    CHECK_FALSE(delta.interior);
    CHECK(delta.face_count() == 2);
    REQUIRE(delta.edges.size() == 3);
    CHECK(fx.surface.edge(delta.edges.front().edge).boundary());
    CHECK_FALSE(fx.surface.edge(delta.edges[1].edge).boundary());
    CHECK(fx.surface.edge(delta.edges.back().edge).boundary());
    CHECK(fx.surface.vertex(fx.vertices.at("eps0")).face_count() == 1);
    check_euler_consistency(fx.surface);
    check_edge_incidence(fx.surface);
}

TEST_CASE("pruned octahedron structure")
{
    const Fixture fx = pruned_octahedron();
    const SurfaceCounts c = fx.surface.counts(crossing_flags(fx.surface, fx.gluings));
    CHECK(c.triangles == 6);
    CHECK(c.quads == 1);
    CHECK(c.edges == 11);
    CHECK(c.boundary_edges == 0);
    CHECK(c.vertices == 6);
    CHECK(interior_vertex_count(fx.surface) == 6);
    CHECK(c.crossing_vertices == 4);
    for (const char* name : {"A", "C", "E", "F"})
        CHECK(fx.surface.vertex(fx.vertices.at(name)).face_count() == 4);
    check_euler_consistency(fx.surface);
    check_edge_incidence(fx.surface);
}

TEST_CASE("single triangle")
{
    const TopoSurface s = build_surface({{"t", FaceKind::Triangle}}, {});
    const SurfaceCounts c = s.counts();
    CHECK(c.triangles == 1);
    CHECK(c.edges == 3);
    CHECK(c.boundary_edges == 3);
    CHECK(c.vertices == 3);
    CHECK(c.crossing_vertices == 0);
    check_edge_incidence(s);
}

TEST_CASE("orientation bookkeeping")
{
    // One quad glued to itself along opposite sides.
    CHECK_THROWS_AS(build_surface({{"q", FaceKind::Quad}}, {{"m", {{0, 1, false}, {0, 3, false}}}}), Error);
    try {
        build_surface({{"q", FaceKind::Quad}}, {{"m", {{0, 1, false}, {0, 3, false}}}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SelfGluedEdge);
    }
    // Two quads forming a Moebius strip: one identification keeps the orientation, the other flips it.
    const TopoSurface s = build_surface({{"p", FaceKind::Quad}, {"q", FaceKind::Quad}},
                                        {{"x", {{0, 1, false}, {1, 3, true}}}, {"y", {{1, 1, false}, {0, 3, false}}}});
    CHECK(s.counts().interior_edges() == 2);
    check_euler_consistency(s);
    check_edge_incidence(s);
}

TEST_CASE("surface input errors")
{
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    CHECK(kind_of([] { build_surface({{"q", FaceKind::Quad}}, {{"e", {{3, 0, false}}}}); }) ==
          ErrorKind::DanglingReference);
    CHECK(kind_of([] {
              build_surface({{"p", FaceKind::Quad}, {"q", FaceKind::Quad}},
                            {{"e", {{0, 0, false}, {1, 0, true}}}, {"f", {{0, 0, false}, {1, 1, true}}}});
          }) == ErrorKind::SlotReuse);
    CHECK(kind_of([] { build_surface({{"q", FaceKind::Quad}, {"q", FaceKind::Quad}}, {}); }) ==
          ErrorKind::InputError);
}

TEST_CASE("property: fixtures satisfy the counting identities")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const Fixture fx = fixture_by_name(name);
        check_euler_consistency(fx.surface);
        check_edge_incidence(fx.surface);
    }
    for (std::uint32_t seed = 1; seed <= 10; ++seed) {
        const TopoSurface s = random_grid_mesh(seed, 3, 3);
        check_euler_consistency(s);
        check_edge_incidence(s);
    }
}

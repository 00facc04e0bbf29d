#include "support.hpp"

#include "g1/basis.hpp"
#include "g1/fixtures.hpp"
#include "g1/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace g1;

namespace {

VertexJet jet_for_edge(const std::vector<VertexJet>& jets, int edge)
{
    for (const auto& j : jets)
        if (j.edge == edge)
            return j;
    throw std::runtime_error("edge not in fan");
}

/// Same surface with one edge parameterized from the other end.
TopoSurface flip_edge(const TopoSurface& s, int e)
{
    std::vector<EdgeSpec> edges;
    for (int x = 0; x < static_cast<int>(s.edges().size()); ++x) {
        if (s.edge(x).implicit)
            continue;
        EdgeSpec es{s.edge(x).id, s.edge(x).sides};
        if (x == e)
            for (auto& sd : es.sides)
                sd.reversed = !sd.reversed;
        edges.push_back(es);
    }
    return build_surface(s.faces(), edges);
}

/// Same surface with the two sides of one edge listed in the opposite order.
TopoSurface swap_sides(const TopoSurface& s, int e)
{
    std::vector<EdgeSpec> edges;
    for (int x = 0; x < static_cast<int>(s.edges().size()); ++x) {
        if (s.edge(x).implicit)
            continue;
        EdgeSpec es{s.edge(x).id, s.edge(x).sides};
        if (x == e)
            std::swap(es.sides[0], es.sides[1]);
        edges.push_back(es);
    }
    return build_surface(s.faces(), edges);
}

Gluings remap(const TopoSurface& from, const Gluings& g, const TopoSurface& to)
{
    Gluings out(to.edges().size());
    for (int e = 0; e < static_cast<int>(from.edges().size()); ++e)
        if (g[e])
            out[to.edge_index(from.edge(e).id)] = g[e];
    return out;
}

} // namespace

TEST_CASE("vertex jets on the round corner")
{
    const Fixture fx = round_corner();
    const int t0 = fx.surface.edge_index("t0");
    const VertexJet at_gamma = jet_for_edge(vertex_jets(fx.surface, fx.gluings, fx.vertices.at("gamma")), t0);
    CHECK(at_gamma.a0 == -1);
    CHECK(at_gamma.b0 == -1);
    CHECK(at_gamma.da0 == 1);
    CHECK(at_gamma.db0 == 0);
    CHECK_FALSE(at_gamma.crossing);

    const int delta = fx.surface.edge_vertex(t0, true);
    const VertexJet at_delta = jet_for_edge(vertex_jets(fx.surface, fx.gluings, delta), t0);
    CHECK(at_delta.a0 == 0);
    CHECK(at_delta.crossing);
}

TEST_CASE("constant gluing jets")
{
    const Fixture fx = two_patch(FaceKind::Quad, FaceKind::Quad);
    const int e = fx.surface.edge_index("e");
    for (const char* end : {"start", "end"}) {
        const VertexJet j = jet_for_edge(vertex_jets(fx.surface, fx.gluings, fx.vertices.at(end)), e);
        CHECK(j.a0 == 0);
        CHECK(j.b0 == -1);
        CHECK(j.da0 == 0);
        CHECK(j.db0 == 0);
    }
}

TEST_CASE("gluing normal form")
{
    const EdgeGluing g = normalize({UniPoly{2, 4}, UniPoly{-2}, UniPoly{-6}});
    CHECK(g.c == UniPoly{3});
    CHECK(g.b == UniPoly{1});
    CHECK(g.a == UniPoly{-1, -2});
    CHECK(swap_roles(swap_roles(g)) == g);
    CHECK(normalize(g) == g);
}

TEST_CASE("validation of the named fixtures")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const Fixture fx = fixture_by_name(name);
        const Report r = validate(fx.surface, fx.gluings, true);
        CHECK_MESSAGE(r.ok(), r.text());
    }
}

TEST_CASE("round corner cyclic product is the identity")
{
    // M = [[0,1],[b,a]] with a = b = -1 at gamma; M^3 = I.
    const Rational m[2][2] = {{0, 1}, {-1, -1}};
    Rational p[2][2] = {{1, 0}, {0, 1}};
    for (int t = 0; t < 3; ++t) {
        Rational q[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                q[i][j] = p[i][0] * m[0][j] + p[i][1] * m[1][j];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                p[i][j] = q[i][j];
    }
    CHECK(p[0][0] == 1);
    CHECK(p[0][1] == 0);
    CHECK(p[1][0] == 0);
    CHECK(p[1][1] == 1);
    const Fixture fx = round_corner();
    const int v = fx.vertices.at("gamma");
    CHECK(check_vertex_compatibility(fx.surface, vertex_jets(fx.surface, fx.gluings, v), v).ok());
}

TEST_CASE("pruned octahedron crossing vertex E passes both conditions")
{
    const Fixture fx = pruned_octahedron();
    const int v = fx.vertices.at("E");
    const auto jets = vertex_jets(fx.surface, fx.gluings, v);
    CHECK(jets.size() == 4);
    for (const auto& j : jets)
        CHECK(j.crossing);
    const Report r = check_vertex_compatibility(fx.surface, jets, v);
    CHECK_MESSAGE(r.ok(), r.text());
    const auto res = condition2_residuals(jets);
    CHECK(res[0] == 0);
    CHECK(res[1] == 0);
}

TEST_CASE("perturbing a crossing edge breaks Condition 2")
{
    Fixture fx = pruned_octahedron();
    const int v = fx.vertices.at("A");
    const FanEdge fe = fx.surface.vertex(v).edges.front();
    EdgeGluing& d = *fx.gluings[fe.edge];
    d.a += (fe.at_start ? UniPoly{0, 1} : UniPoly{1, -1}) * d.c.coeff(0);
    const Report r = validate(fx.surface, fx.gluings, true);
    CHECK(r.has(ErrorKind::Condition2Violated));
}

TEST_CASE("topology checks")
{
    auto two = [](const EdgeGluing& d) {
        const Fixture fx = two_patch(FaceKind::Quad, FaceKind::Quad, d);
        return std::pair{check_topology(fx.surface, fx.gluings, false), check_topology(fx.surface, fx.gluings, true)};
    };
    {
        const auto [loose, strict] = two({UniPoly{}, UniPoly{-1}, UniPoly{1}});
        CHECK(loose.ok());
        CHECK(strict.ok());
    }
    {
        const auto [loose, strict] = two({UniPoly{}, UniPoly{1}, UniPoly{1}});
        CHECK(loose.ok());
        CHECK(loose.text().find("WARN") != std::string::npos);
        CHECK(loose.text().find("sharp") != std::string::npos);
        CHECK_FALSE(strict.ok());
        CHECK(strict.has(ErrorKind::TopologyViolated));
    }
    {
        const auto [loose, strict] = two({UniPoly{}, UniPoly{-1, 2}, UniPoly{1}});
        CHECK(loose.text().find("WARN") != std::string::npos);
        CHECK_FALSE(strict.ok());
        CHECK(strict.has(ErrorKind::TopologyViolated));
    }
}

TEST_CASE("symmetric fans")
{
    CHECK(symmetric_fan(3, true) == std::vector<int>{-1, -1, -1});
    CHECK(symmetric_fan(4, true) == std::vector<int>{0, 0, 0, 0});
    CHECK(symmetric_fan(6, true) == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(symmetric_fan(5, true) == std::vector<int>{1, 1, 1, 0, 0});
    CHECK(symmetric_fan(3, false) == std::vector<int>{1, 1});
    CHECK(symmetric_fan(4, false) == std::vector<int>{1, 2, 1});
    // Regular fans reproduce a(0) = 2 cos(2 pi / n) where that value is an integer.
    for (int n : {3, 4, 6}) {
        const double expected = 2 * std::cos(2 * M_PI / n);
        for (int a : symmetric_fan(n, true))
            CHECK(a == doctest::Approx(expected));
    }
}

TEST_CASE("symmetric gluing on the pruned octahedron")
{
    const Fixture fx = pruned_octahedron();
    auto data = [&](const char* id) { return *fx.gluings[fx.surface.edge_index(id)]; };
    // EF-type edges join two crossing vertices: a = 2u in the frame from either end.
    for (const char* id : {"EF", "AE", "AF", "CE", "CF"}) {
        CAPTURE(id);
        const EdgeGluing d = data(id);
        CHECK(d.b == UniPoly{-1});
        CHECK(d.c == UniPoly{1});
        CHECK(d.a.degree() == 1);
        CHECK(abs(d.a.coeff(1)) == 2);
    }
    for (const char* id : {"BE", "DF"}) {
        CAPTURE(id);
        const EdgeGluing d = data(id);
        const EdgeGluing from_crossing = fx.surface.vertex(fx.surface.edge_vertex(fx.surface.edge_index(id), false)).edges.size() == 4
                                             ? d
                                             : normalize(reroot(d, 1, 1));
        CHECK(from_crossing.b == UniPoly{-1});
        CHECK(from_crossing.c == UniPoly{1});
        CHECK(abs(from_crossing.a.coeff(1)) == 2);
        CHECK(abs(from_crossing.a.coeff(2)) == 1);
    }
}

TEST_CASE("property: generated gluings pass validation and have the documented degrees")
{
    for (std::uint32_t seed = 1; seed <= 15; ++seed) {
        CAPTURE(seed);
        const TopoSurface s = random_grid_mesh(seed, 3, 3);
        const Gluings g = generate_symmetric_gluing(s);
        const Report r = validate(s, g, true);
        CHECK_MESSAGE(r.ok(), r.text());
        for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
            if (s.edge(e).boundary())
                continue;
            REQUIRE(g[e]);
            CHECK(g[e]->a.degree() <= 2);
            CHECK(g[e]->b.degree() == 0);
            CHECK(g[e]->c.degree() == 0);
        }
    }
}

TEST_CASE("identity gluing on a planar quad grid")
{
    std::vector<Polygon> polys;
    const int n = 4;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int a = i + (n + 1) * j;
            polys.push_back({"q" + std::to_string(a), FaceKind::Quad, {a, a + 1, a + n + 2, a + n + 1}});
        }
    const PolygonSurface ps = surface_from_polygons(polys);
    const TopoSurface s = build_surface(ps.faces, ps.edges);
    Gluings g(s.edges().size());
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e)
        if (!s.edge(e).boundary())
            g[e] = EdgeGluing{UniPoly{}, UniPoly{-1}, UniPoly{1}};
    CHECK(validate(s, g, true).ok());
    const SurfaceCounts c = s.counts(crossing_flags(s, g));
    CHECK(c.crossing_vertices == (n - 1) * (n - 1));
}

TEST_CASE("property: rerooting and role swapping describe the same spline space")
{
    // Certified basis functions stay G1 when an edge is re-parameterized with transformed data.
    for (const char* name : {"round-corner", "two-patch-qt", "two-patch-tt"}) {
        CAPTURE(name);
        const Fixture fx = fixture_by_name(name);
        const SplineBasis b = full_basis(fx.surface, fx.gluings, 5);
        for (int e = 0; e < static_cast<int>(fx.surface.edges().size()); ++e) {
            if (fx.surface.edge(e).boundary())
                continue;
            const Side s0 = fx.surface.edge(e).sides[0], s1 = fx.surface.edge(e).sides[1];
            const int f1 = fdelta(fx.surface.face(s0.face).kind), f2 = fdelta(fx.surface.face(s1.face).kind);

            const TopoSurface flipped = flip_edge(fx.surface, e);
            Gluings gf = remap(fx.surface, fx.gluings, flipped);
            gf[flipped.edge_index(fx.surface.edge(e).id)] = normalize(reroot(*fx.gluings[e], f1, f2));
            const TopoSurface swapped = swap_sides(fx.surface, e);
            Gluings gs = remap(fx.surface, fx.gluings, swapped);
            gs[swapped.edge_index(fx.surface.edge(e).id)] = normalize(swap_roles(*fx.gluings[e]));

            for (const auto& bf : b.functions) {
                CHECK(g1_residual(bf.spline, flipped, gf).zero());
                CHECK(g1_residual(bf.spline, swapped, gs).zero());
            }
            // Jets at the far vertex agree with jets in the flipped parameterization.
            const int far = fx.surface.edge_vertex(e, true);
            const int far_flipped = flipped.edge_vertex(flipped.edge_index(fx.surface.edge(e).id), false);
            const VertexJet j1 = jet_for_edge(vertex_jets(fx.surface, fx.gluings, far), e);
            const VertexJet j2 =
                jet_for_edge(vertex_jets(flipped, gf, far_flipped), flipped.edge_index(fx.surface.edge(e).id));
            CHECK(j1.a0 == j2.a0);
            CHECK(j1.b0 == j2.b0);
            CHECK(j1.da0 == j2.da0);
            CHECK(j1.db0 == j2.db0);
        }
    }
}

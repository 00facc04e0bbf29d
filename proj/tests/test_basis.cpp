#include "g1/basis.hpp"
#include "g1/dimension.hpp"
#include "g1/fixtures.hpp"
#include "g1/local_edge.hpp"
#include "g1/verify.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace g1;

namespace {

int nonzero_count(const Spline& sp)
{
    int n = 0;
    for (const auto& f : sp.faces)
        for (const auto& x : f.coeffs())
            n += x != 0 ? 1 : 0;
    return n;
}

} // namespace

TEST_CASE("vertex jet systems at gamma")
{
    const Fixture rc = round_corner();
    const int v = rc.vertices.at("gamma");
    const auto value = vertex_jet_solve(rc.surface, rc.gluings, v, JetKind::Value);
    REQUIRE(value.size() == 3);
    for (const Jet& j : value)
        CHECK(j == Jet{1, 0, 0, 0});
    for (JetKind kind : {JetKind::Deriv1, JetKind::Deriv2}) {
        const auto d = vertex_jet_solve(rc.surface, rc.gluings, v, kind);
        REQUIRE(d.size() == 3);
        for (int i = 0; i < 3; ++i) {
            const Jet& cur = d[i];
            const Jet& prev = d[(i + 2) % 3];
            CHECK(cur[0] == 0);
            CHECK(cur[1] == prev[2]);
            // q_{i+1} = a q_i + b q_{i-1} with a(0) = b(0) = -1.
            CHECK(cur[2] == -cur[1] - prev[1]);
        }
    }
    CHECK(free_cross_positions(rc.surface, rc.gluings, v).size() == 3);
}

TEST_CASE("cross family at a crossing vertex")
{
    const Fixture po = pruned_octahedron();
    const int v = po.vertices.at("E");
    const auto pos = free_cross_positions(po.surface, po.gluings, v);
    REQUIRE(pos.size() == 1);
    const auto jets = vertex_jet_solve(po.surface, po.gluings, v, JetKind::Cross, pos[0]);
    REQUIRE(jets.size() == 4);
    for (const Jet& j : jets) {
        CHECK(j[0] == 0);
        CHECK(j[1] == 0);
        CHECK(j[2] == 0);
        CHECK(j[3] != 0);
    }
}

TEST_CASE("lift")
{
    const Fixture rc = round_corner();
    const int v = rc.vertices.at("gamma");
    const std::vector<Jet> zero(3, Jet{0, 0, 0, 0});
    CHECK(lift(rc.surface, rc.gluings, v, 0, zero, 0, 4).is_zero());

    const auto d = vertex_jet_solve(rc.surface, rc.gluings, v, JetKind::Deriv1);
    const Spline f = vertex_function(rc.surface, rc.gluings, v, d, 4);
    CHECK(g1_residual(f, rc.surface, rc.gluings).zero());
    for (int i = 0; i < 3; ++i) {
        const int delta = rc.vertices.at("delta" + std::to_string(i));
        for (const auto& [face, corner] : rc.surface.vertex(delta).incidences)
            CHECK(jet_at_corner(f.faces[face], corner) == Jet{0, 0, 0, 0});
    }
    // Value function: the edge restriction carries the value 1 at gamma into the lift.
    const auto value = vertex_jet_solve(rc.surface, rc.gluings, v, JetKind::Value);
    const Spline fv = vertex_function(rc.surface, rc.gluings, v, value, 4);
    CHECK(g1_residual(fv, rc.surface, rc.gluings).zero());
    for (const auto& [face, corner] : rc.surface.vertex(v).incidences)
        CHECK(jet_at_corner(fv.faces[face], corner) == Jet{1, 0, 0, 0});
}

TEST_CASE("vertex families")
{
    const Fixture rc = round_corner();
    CHECK(vertex_basis(rc.surface, rc.gluings, rc.vertices.at("gamma"), 4).size() == 6);
    const auto eps = vertex_basis(rc.surface, rc.gluings, rc.vertices.at("eps1"), 4);
    REQUIRE(eps.size() == 4);
    // Value function at eps_1: the corner block b33+b34+b43+b44 on the single face.
    const Spline& value = eps.front().spline;
    CHECK(eps.front().tag.kind == TagKind::VertexValue);
    for (std::size_t f = 0; f < value.faces.size(); ++f) {
        const FacePoly& p = value.faces[f];
        for (int j = 0; j <= 4; ++j)
            for (int i = 0; i <= 4; ++i) {
                const bool block = static_cast<int>(f) == 1 && i >= 3 && j >= 3;
                CHECK(p.at(i, j) == (block ? 1 : 0));
            }
    }
    const Fixture po = pruned_octahedron();
    CHECK(vertex_basis(po.surface, po.gluings, po.vertices.at("A"), 6).size() == 4);
    CHECK(vertex_basis(po.surface, po.gluings, po.vertices.at("B"), 6).size() == 6);
}

TEST_CASE("edge functions of the round corner")
{
    const Fixture rc = round_corner();
    for (int i = 0; i < 3; ++i) {
        const int e = rc.surface.edge_index("t" + std::to_string(i));
        const auto fns = edge_basis(rc.surface, rc.gluings, e, 4);
        REQUIRE(fns.size() == 1);
        const Spline& sp = fns[0].spline;
        CHECK(nonzero_count(sp) == 2);
        // [b21, 0, -b12]: b_{2,1} on s_i and -b_{1,2} on s_{i+2}, equal magnitude.
        const Rational x = sp.faces[i].at(2, 1);
        CHECK(x != 0);
        CHECK(sp.faces[(i + 2) % 3].at(1, 2) == -x);
    }
    // Boundary edge along u = 1 of s0: b_{3,2} and b_{4,2}.
    const auto bd = edge_basis(rc.surface, rc.gluings, rc.surface.edge_index("s0:1"), 4);
    REQUIRE(bd.size() == 2);
    std::set<std::pair<int, int>> seen;
    for (const auto& bf : bd) {
        CHECK(nonzero_count(bf.spline) == 1);
        for (int j = 0; j <= 4; ++j)
            for (int i = 0; i <= 4; ++i)
                if (bf.spline.faces[0].at(i, j) != 0)
                    seen.insert({i, j});
    }
    CHECK(seen == std::set<std::pair<int, int>>{{3, 2}, {4, 2}});
}

TEST_CASE("edge functions of the pruned octahedron")
{
    const Fixture po = pruned_octahedron();
    const int e = po.surface.edge_index("EF");
    const auto fns = edge_basis(po.surface, po.gluings, e, 6);
    CHECK(fns.size() == 4);
    for (const auto& bf : fns) {
        CHECK(g1_residual(bf.spline, po.surface, po.gluings).zero());
        for (const char* v : {"E", "F"})
            for (const auto& [face, corner] : po.surface.vertex(po.vertices.at(v)).incidences)
                CHECK(jet_at_corner(bf.spline.faces[face], corner) == Jet{0, 0, 0, 0});
    }
}

TEST_CASE("face functions")
{
    const Fixture rc = round_corner();
    const auto q = face_basis(rc.surface, 0, 4);
    REQUIRE(q.size() == 1);
    CHECK(q[0].spline.faces[0].at(2, 2) == 1);
    CHECK(nonzero_count(q[0].spline) == 1);
    const Fixture po = pruned_octahedron();
    const int tri = po.surface.face_index("AEF");
    CHECK(face_basis(po.surface, tri, 6).size() == 1);
    CHECK(face_basis(po.surface, tri, 4).empty());
}

TEST_CASE("full bases")
{
    struct Case {
        const char* name;
        int k;
        int count;
    };
    for (const Case& c : {Case{"round-corner", 4, 48}, Case{"pruned-octahedron", 6, 83}, Case{"two-patch-qq", 4, 40}}) {
        CAPTURE(c.name);
        const Fixture fx = fixture_by_name(c.name);
        const SplineBasis b = full_basis(fx.surface, fx.gluings, c.k);
        CHECK(static_cast<int>(b.functions.size()) == c.count);
        CHECK(check_independence(b).ok());
        for (const auto& bf : b.functions)
            CHECK(g1_residual(bf.spline, fx.surface, fx.gluings).zero());
    }
    const Fixture po = pruned_octahedron();
    try {
        full_basis(po.surface, po.gluings, 5);
        FAIL("expected BelowSeparability");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BelowSeparability);
    }
}

TEST_CASE("property: cardinality per tag class matches the dimension terms")
{
    for (const char* name : {"round-corner", "pruned-octahedron", "cube", "planar-3x3", "torus-3x3", "two-patch-qt"}) {
        CAPTURE(name);
        const Fixture fx = fixture_by_name(name);
        const DimensionReport dim = dim_spline_space(fx.surface, fx.gluings, 6, {true, false});
        const SplineBasis b = full_basis(fx.surface, fx.gluings, 6);
        std::map<std::string, int> per_target;
        for (const auto& bf : b.functions)
            ++per_target[(bf.tag.kind == TagKind::EdgeFn ? "e:" : bf.tag.kind == TagKind::FaceFn ? "f:" : "v:") +
                         bf.tag.target];
        for (const auto& vd : dim.vertices)
            CHECK(per_target["v:" + fx.surface.vertex(vd.vertex).id] == vd.dim_H);
        for (const auto& ed : dim.edges)
            CHECK(per_target["e:" + fx.surface.edge(ed.edge).id] == ed.dim_E);
        for (std::size_t f = 0; f < dim.face_interior.size(); ++f)
            CHECK(per_target["f:" + fx.surface.face(static_cast<int>(f)).id] == dim.face_interior[f]);
        CHECK_NOTHROW(certify_basis(fx.surface, fx.gluings, b));
    }
}

TEST_CASE("certification rejects a broken basis")
{
    const Fixture rc = round_corner();
    SplineBasis b = full_basis(rc.surface, rc.gluings, 4);
    b.functions.push_back(b.functions.front());
    CHECK_THROWS_AS(certify_basis(rc.surface, rc.gluings, b), Error);
    b.functions.pop_back();
    b.functions.back().spline.faces[0].at(2, 1) += 1;
    CHECK_THROWS_AS(certify_basis(rc.surface, rc.gluings, b), Error);
}

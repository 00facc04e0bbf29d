#include "support.hpp"

#include "g1/basis.hpp"
#include "g1/dimension.hpp"
#include "g1/fixtures.hpp"
#include "g1/linalg.hpp"
#include "g1/verify.hpp"

#include <doctest.h>

using namespace g1;
using g1::test::Rng;

namespace {

bool satisfies(const ConstraintSystem& cs, const Vec& x)
{
    for (const auto& row : cs.rows) {
        Rational s = 0;
        for (const auto& [col, v] : row)
            s += v * x[col];
        if (s != 0)
            return false;
    }
    return true;
}

Spline from_flat(const TopoSurface& s, int k, const Vec& x)
{
    Spline sp = Spline::zero(s, k);
    std::size_t pos = 0;
    for (auto& f : sp.faces)
        for (auto& c : f.coeffs())
            c = x[pos++];
    return sp;
}

} // namespace

TEST_CASE("residuals")
{
    const Fixture rc = round_corner();
    Spline one = Spline::zero(rc.surface, 4);
    for (auto& f : one.faces)
        f = FacePoly::constant(f.kind(), 4, 1);
    CHECK(g1_residual(one, rc.surface, rc.gluings).zero());

    const SplineBasis b = full_basis(rc.surface, rc.gluings, 4);
    Spline bad = b.functions.back().spline;
    bad.faces[0].at(2, 1) += 1;
    const ResidualReport r = g1_residual(bad, rc.surface, rc.gluings);
    CHECK_FALSE(r.zero());
    bool r1_hit = false;
    for (const auto& er : r.edges)
        r1_hit = r1_hit || !er.r1.is_zero();
    CHECK(r1_hit);
}

TEST_CASE("brute-force oracle")
{
    const Fixture rc = round_corner();
    CHECK(brute_force_dimension(rc.surface, rc.gluings, 4) == 48);
    const Fixture two = two_patch(FaceKind::Quad, FaceKind::Quad);
    CHECK(brute_force_dimension(two.surface, two.gluings, 2) == 12);
    const Fixture po = pruned_octahedron();
    CHECK(brute_force_dimension(po.surface, po.gluings, 5) == 50);
    try {
        brute_force_dimension(rc.surface, rc.gluings, 4, 10);
        FAIL("expected SizeLimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeLimit);
    }
}

TEST_CASE("independence")
{
    const Fixture rc = round_corner();
    SplineBasis b = full_basis(rc.surface, rc.gluings, 4);
    const RankReport full = check_independence(b);
    CHECK(full.rank == 48);
    CHECK(full.ok());
    b.functions.push_back(b.functions[3]);
    const RankReport dup = check_independence(b);
    CHECK(dup.count == 49);
    CHECK(dup.rank == 48);
    CHECK(check_independence(SplineBasis{4, {}}).rank == 0);
}

TEST_CASE("ampleness")
{
    const Fixture rc = round_corner();
    const SplineBasis b = full_basis(rc.surface, rc.gluings, 4);
    CHECK(ampleness_check(rc.surface, b, default_sample_points(rc.surface)).ok());
    const Fixture po = pruned_octahedron();
    const SplineBasis bp = full_basis(po.surface, po.gluings, 6);
    const auto [face, corner] = po.surface.vertex(po.vertices.at("E")).incidences.front();
    const auto at_e = ampleness_check(po.surface, bp, {{face, Rational(corner_point(po.surface.face(face).kind, corner)[0]),
                                                         Rational(corner_point(po.surface.face(face).kind, corner)[1]), "E"}});
    REQUIRE(at_e.entries.size() == 1);
    CHECK(at_e.entries[0].rank == 3);
    CHECK(ampleness_check(po.surface, bp, default_sample_points(po.surface)).ok());
}

TEST_CASE("jet duality")
{
    const Fixture rc = round_corner();
    const SplineBasis b = full_basis(rc.surface, rc.gluings, 4);
    const DualityReport d = jet_duality_check(rc.surface, rc.gluings, b);
    CHECK(d.ok());
    bool saw_gamma = false;
    for (const auto& e : d.entries)
        if (e.where.find(rc.surface.vertex(rc.vertices.at("gamma")).id + " ") != std::string::npos &&
            e.where.find("image") != std::string::npos) {
            saw_gamma = true;
            CHECK(e.actual == 6);
        }
    CHECK(saw_gamma);
    for (const auto& bf : b.functions)
        if (bf.tag.kind == TagKind::EdgeFn || bf.tag.kind == TagKind::FaceFn)
            for (const auto& x : taylor0(bf.spline))
                CHECK(x == 0);
}

TEST_CASE("property: residual soundness against the constraint system")
{
    Rng rng(71);
    for (const char* name : {"round-corner", "two-patch-qt", "pruned-octahedron"}) {
        CAPTURE(name);
        const Fixture fx = fixture_by_name(name);
        const int k = 6;
        const ConstraintSystem cs = constraint_system(fx.surface, fx.gluings, k);
        const SplineBasis b = full_basis(fx.surface, fx.gluings, k);
        for (int t = 0; t < 10; ++t) {
            Spline sp = Spline::zero(fx.surface, k);
            for (int n = 0; n < 4; ++n) {
                Spline term = b.functions[rng.integer(0, static_cast<int>(b.functions.size()) - 1)].spline;
                term *= rng.rational();
                sp += term;
            }
            if (t % 2 == 1) {
                FacePoly& f = sp.faces[rng.integer(0, static_cast<int>(sp.faces.size()) - 1)];
                f.coeffs()[rng.integer(0, static_cast<int>(f.coeffs().size()) - 1)] += 1;
            }
            const Vec x = sp.flat();
            REQUIRE(x.size() == cs.unknowns);
            CHECK(g1_residual(sp, fx.surface, fx.gluings).zero() == satisfies(cs, x));
            CHECK(from_flat(fx.surface, k, x) == sp);
        }
    }
}

TEST_CASE("property: vanishing corner jets split into edge and face parts")
{
    for (const char* name : {"round-corner", "pruned-octahedron", "cube"}) {
        CAPTURE(name);
        const Fixture fx = fixture_by_name(name);
        const int k = 6;
        const SplineBasis b = full_basis(fx.surface, fx.gluings, k);
        std::vector<Vec> rows;
        for (const auto& bf : b.functions)
            rows.push_back(taylor0(bf.spline));
        // Kernel of T0 on the spline space: count minus rank of the jet images.
        const std::size_t kernel = b.functions.size() - rank(Matrix::from_rows(rows, rows.front().size()));
        const DimensionReport dim = dim_spline_space(fx.surface, fx.gluings, k, {true, false});
        int expected = 0;
        for (const auto& e : dim.edges)
            expected += e.dim_E;
        for (int f : dim.face_interior)
            expected += f;
        CHECK(static_cast<int>(kernel) == expected);
    }
}

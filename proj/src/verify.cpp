#include "g1/verify.hpp"

#include "g1/dimension.hpp"

#include <algorithm>
#include <map>

namespace g1 {

bool ResidualReport::zero() const
{
    return std::all_of(edges.begin(), edges.end(), [](const EdgeResidual& e) { return e.zero(); });
}

ResidualReport g1_residual(const Spline& sp, const TopoSurface& s, const Gluings& g)
{
    ResidualReport r;
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
        const Edge& ed = s.edge(e);
        if (ed.boundary())
            continue;
        if (!g[e])
            throw Error(ErrorKind::MissingGluing, "edge '" + ed.id + "' has no gluing data");
        const EdgeGluing& d = *g[e];
        const Side& s0 = ed.sides[0];
        const Side& s1 = ed.sides[1];
        const EdgeJet j1 = edge_restriction_jet(sp.faces[s0.face], s0.slot, s0.reversed);
        const EdgeJet j2 = edge_restriction_jet(sp.faces[s1.face], s1.slot, s1.reversed);
        r.edges.push_back({e, j1.g - j2.g, d.c * j1.h - d.b * j2.h - d.a * j1.g.derivative()});
    }
    return r;
}

namespace {

/// Bernstein polynomials B^n_i, cached.
const UniPoly& bernstein(int n, int i)
{
    static std::map<std::pair<int, int>, UniPoly> cache;
    auto it = cache.find({n, i});
    if (it == cache.end()) {
        Vec c(static_cast<std::size_t>(n + 1));
        c[static_cast<std::size_t>(i)] = 1;
        it = cache.emplace(std::pair{n, i}, UniPoly::from_bernstein(c)).first;
    }
    return it->second;
}

} // namespace

ConstraintSystem constraint_system(const TopoSurface& s, const Gluings& g, int k)
{
    ConstraintSystem cs;
    std::vector<std::size_t> offset;
    std::vector<FacePoly> shape;
    for (const auto& f : s.faces()) {
        offset.push_back(cs.unknowns);
        shape.emplace_back(f.kind, k);
        cs.unknowns += FacePoly::count(f.kind, k);
    }
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
        const Edge& ed = s.edge(e);
        if (ed.boundary())
            continue;
        if (!g[e])
            throw Error(ErrorKind::MissingGluing, "edge '" + ed.id + "' has no gluing data");
        const EdgeGluing& d = *g[e];
        auto unknown = [&](int side, int i, int j) {
            const int f = ed.sides[side].face;
            const auto [ri, rj] = shape[f].frame_to_ref(s.start_corner(e, side), s.end_corner(e, side), i, j);
            return offset[f] + shape[f].index(ri, rj);
        };
        // Equal restrictions: equal Bernstein coefficients on row 0.
        for (int i = 0; i <= k; ++i) {
            SparseRow row{{unknown(0, i, 0), Rational(1)}, {unknown(1, i, 0), Rational(-1)}};
            std::sort(row.begin(), row.end());
            cs.rows.push_back(row);
        }
        // c*h1 - b*h2 - a*g1' = 0, one row per monomial.
        std::map<int, std::map<std::size_t, Rational>> r1;
        auto add = [&](std::size_t x, const UniPoly& p) {
            for (int t = 0; t <= p.degree(); ++t)
                if (p.coeff(t) != 0)
                    r1[t][x] += p.coeff(t);
        };
        for (int side = 0; side < 2; ++side) {
            const FaceKind kind = s.face(ed.sides[side].face).kind;
            const int hn = kind == FaceKind::Quad ? k : k - 1;
            // h = k * sum (c_{i,1} - c_{i,0}) B^hn_i.
            const UniPoly& factor = side == 0 ? d.c : d.b;
            const Rational sign = side == 0 ? 1 : -1;
            for (int i = 0; i <= hn; ++i) {
                const UniPoly p = factor * bernstein(hn, i) * (sign * k);
                add(unknown(side, i, 1), p);
                add(unknown(side, i, 0), -p);
            }
        }
        for (int i = 0; i <= k; ++i)
            add(unknown(0, i, 0), -(d.a * bernstein(k, i).derivative()));
        for (const auto& [t, entries] : r1) {
            SparseRow row;
            for (const auto& [x, v] : entries)
                if (v != 0)
                    row.emplace_back(x, v);
            if (!row.empty())
                cs.rows.push_back(row);
        }
    }
    return cs;
}

int brute_force_dimension(const TopoSurface& s, const Gluings& g, int k, std::size_t limit)
{
    std::size_t unknowns = 0;
    for (const auto& f : s.faces())
        unknowns += FacePoly::count(f.kind, k);
    if (unknowns > limit)
        throw Error(ErrorKind::SizeLimit,
                    std::to_string(unknowns) + " unknowns exceed the limit " + std::to_string(limit));
    const ConstraintSystem cs = constraint_system(s, g, k);
    SparseEchelon ech;
    for (const auto& row : cs.rows)
        ech.add(row);
    return static_cast<int>(cs.unknowns - ech.rank());
}

namespace {

SparseRow sparse(const Vec& v)
{
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            row.emplace_back(i, v[i]);
    return row;
}

} // namespace

RankReport check_independence(const SplineBasis& basis)
{
    RankReport r;
    r.count = basis.functions.size();
    SparseEchelon ech;
    for (const auto& f : basis.functions)
        ech.add(sparse(f.spline.flat()));
    r.rank = ech.rank();
    return r;
}

bool AmplenessReport::ok() const
{
    return std::all_of(entries.begin(), entries.end(), [](const AmplenessEntry& e) { return e.rank == 3; });
}

std::vector<SamplePoint> default_sample_points(const TopoSurface& s)
{
    std::vector<SamplePoint> pts;
    for (const auto& v : s.vertices()) {
        const auto [f, c] = v.incidences.front();
        const auto p = corner_point(s.face(f).kind, c);
        pts.push_back({f, p[0], p[1], "vertex " + v.id});
    }
    for (const auto& e : s.edges()) {
        const Side& sd = e.sides.front();
        const FaceKind kind = s.face(sd.face).kind;
        const auto p = corner_point(kind, slot_start(kind, sd.slot, false));
        const auto q = corner_point(kind, slot_end(kind, sd.slot, false));
        pts.push_back({sd.face, ratio(p[0] + q[0], 2), ratio(p[1] + q[1], 2), "edge " + e.id});
    }
    for (int f = 0; f < static_cast<int>(s.faces().size()); ++f) {
        const Rational c = s.face(f).kind == FaceKind::Quad ? Rational(1, 2) : Rational(1, 3);
        pts.push_back({f, c, c, "face " + s.face(f).id});
    }
    return pts;
}

AmplenessReport ampleness_check(const TopoSurface& s, const SplineBasis& basis, const std::vector<SamplePoint>& points)
{
    // Value and gradient tables per face of every function supported there.
    struct Tables {
        MonomialTable f, fu, fv;
    };
    std::vector<std::vector<Tables>> per_face(s.faces().size());
    for (const auto& bf : basis.functions)
        for (std::size_t f = 0; f < bf.spline.faces.size(); ++f)
            if (!bf.spline.faces[f].is_zero()) {
                const MonomialTable t = bernstein_to_monomial(bf.spline.faces[f]);
                per_face[f].push_back({t, d_du(t), d_dv(t)});
            }
    AmplenessReport r;
    for (const auto& p : points) {
        std::vector<Vec> rows;
        for (const auto& t : per_face[p.face])
            rows.push_back({eval(t.f, p.u, p.v), eval(t.fu, p.u, p.v), eval(t.fv, p.u, p.v)});
        r.entries.push_back({p, rank(Matrix::from_rows(rows, 3))});
    }
    return r;
}

bool DualityReport::ok() const
{
    return std::all_of(entries.begin(), entries.end(), [](const DualityEntry& e) { return e.ok(); });
}

Vec taylor0(const Spline& sp)
{
    Vec out;
    for (const auto& p : sp.faces)
        for (int c = 0; c < corner_count(p.kind()); ++c) {
            const Jet j = jet_at_corner(p, c);
            out.insert(out.end(), j.begin(), j.end());
        }
    return out;
}

DualityReport jet_duality_check(const TopoSurface& s, const Gluings& g, const SplineBasis& basis)
{
    DualityReport r;
    auto jets_at = [&](const Spline& sp, int v) {
        Vec out;
        for (const auto& [f, c] : s.vertex(v).incidences) {
            const Jet j = jet_at_corner(sp.faces[f], c);
            out.insert(out.end(), j.begin(), j.end());
        }
        return out;
    };
    auto nonzero = [](const Vec& v) { return std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; }); };

    std::size_t vertex_total = 0;
    SparseEchelon all_vertex;
    for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v) {
        const std::string& id = s.vertex(v).id;
        std::vector<Vec> images;
        std::size_t leaks = 0;
        for (const auto& bf : basis.functions) {
            const TagKind k = bf.tag.kind;
            if ((k != TagKind::VertexValue && k != TagKind::VertexDeriv && k != TagKind::VertexCross) ||
                bf.tag.target != id)
                continue;
            images.push_back(jets_at(bf.spline, v));
            for (int w = 0; w < static_cast<int>(s.vertices().size()); ++w)
                if (w != v && nonzero(jets_at(bf.spline, w))) {
                    ++leaks;
                    break;
                }
            all_vertex.add(sparse(taylor0(bf.spline)));
        }
        const std::size_t expected = static_cast<std::size_t>(dim_H_vertex(s, g, v).dim_H);
        vertex_total += expected;
        const std::size_t cols = images.empty() ? 0 : images.front().size();
        r.entries.push_back({"vertex " + id + " image dimension", expected, rank(Matrix::from_rows(images, cols))});
        r.entries.push_back({"vertex " + id + " family count", expected, images.size()});
        r.entries.push_back({"vertex " + id + " family jets at other vertices", 0, leaks});
    }
    r.entries.push_back({"vertex families jointly", vertex_total, all_vertex.rank()});

    std::size_t edge_leaks = 0, face_leaks = 0, face_edge_leaks = 0;
    for (const auto& bf : basis.functions) {
        if (bf.tag.kind == TagKind::EdgeFn && nonzero(taylor0(bf.spline)))
            ++edge_leaks;
        if (bf.tag.kind == TagKind::FaceFn) {
            if (nonzero(taylor0(bf.spline)))
                ++face_leaks;
            bool along = false;
            for (const auto& p : bf.spline.faces)
                for (int slot = 0; slot < corner_count(p.kind()); ++slot) {
                    const EdgeJet j = edge_restriction_jet(p, slot, false);
                    along = along || !j.g.is_zero() || !j.h.is_zero();
                }
            face_edge_leaks += along ? 1 : 0;
        }
    }
    r.entries.push_back({"edge functions with nonzero corner jets", 0, edge_leaks});
    r.entries.push_back({"face functions with nonzero corner jets", 0, face_leaks});
    r.entries.push_back({"face functions with nonzero edge jets", 0, face_edge_leaks});
    return r;
}

} // namespace g1

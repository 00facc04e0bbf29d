#include "g1/dimension.hpp"

#include "g1/verify.hpp"

#include <algorithm>
#include <sstream>

namespace g1 {

std::array<bool, 2> edge_crossing(const TopoSurface& s, const Gluings& g, int e)
{
    if (s.edge(e).boundary())
        return {false, false};
    if (!g[e])
        throw Error(ErrorKind::MissingGluing, "edge '" + s.edge(e).id + "' has no gluing data");
    const EdgeGluing& d = *g[e];
    const int f1 = fdelta(s.face(s.edge(e).sides[0].face).kind);
    const int f2 = fdelta(s.face(s.edge(e).sides[1].face).kind);
    return {d.a(0) == 0, reroot(d, f1, f2).a(0) == 0};
}

MuBasis edge_mu_basis(const TopoSurface& s, const Gluings& g, int e)
{
    const LocalEdge le = stored_local_edge(s, g, e);
    return mu_basis(le.data, le.s1.kind, le.s2.kind);
}

int d_tau(const TopoSurface& s, const Gluings& g, int e, int k)
{
    if (s.edge(e).boundary())
        return 2 * k + 3 - fdelta(s.face(s.edge(e).sides[0].face).kind);
    return dim_Zk(edge_mu_basis(s, g, e), k);
}

int separability_bound(const TopoSurface& s, const Gluings& g, int e)
{
    if (s.edge(e).boundary())
        return 3 + fdelta(s.face(s.edge(e).sides[0].face).kind);
    const MuBasis mb = edge_mu_basis(s, g, e);
    return mb.nu + mb.inv.m + 4;
}

Matrix edge_jet_matrix(const TopoSurface& s, const LocalEdge& le, const MuBasis& mb, int k, bool with_constant)
{
    const auto [cp, cq] = pq_caps(mb, k);
    std::vector<Vec> cols;
    auto add = [&](const Syzygy& z, const Rational& c0) {
        const auto jets = local_edge_jets(theta(s, le, z[0], z[1], z[2], k, c0), le);
        Vec col;
        for (const auto& j : jets)
            col.insert(col.end(), j.begin(), j.end());
        cols.push_back(col);
    };
    for (int j = 0; j <= cp; ++j)
        add(combine(mb, UniPoly::monomial(j), UniPoly()), 0);
    for (int j = 0; j <= cq; ++j)
        add(combine(mb, UniPoly(), UniPoly::monomial(j)), 0);
    if (with_constant)
        add({UniPoly(), UniPoly(), UniPoly()}, 1);
    Matrix m(16, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < 16; ++r)
            m(r, c) = cols[c][r];
    return m;
}

Spline edge_spline(const TopoSurface& s, const LocalEdge& le, const MuBasis& mb, int k, const Vec& x)
{
    const auto [cp, cq] = pq_caps(mb, k);
    const std::size_t np = static_cast<std::size_t>(std::max(cp + 1, 0));
    const std::size_t nq = static_cast<std::size_t>(std::max(cq + 1, 0));
    const Vec p(x.begin(), x.begin() + np), q(x.begin() + np, x.begin() + np + nq);
    const Rational c0 = x.size() > np + nq ? x[np + nq] : Rational(0);
    const Syzygy z = combine(mb, UniPoly(p), UniPoly(q));
    return theta(s, le, z[0], z[1], z[2], k, c0);
}

Matrix boundary_jet_matrix(const TopoSurface& s, int e, int k)
{
    const Side& sd = s.edge(e).sides[0];
    const FaceKind kind = s.face(sd.face).kind;
    const int origin = s.start_corner(e, 0), toward = s.end_corner(e, 0);
    FacePoly p(kind, k);
    std::vector<Vec> cols;
    for (int j = 0; j <= 1; ++j)
        for (int i = 0; i + j * fdelta(kind) <= k; ++i) {
            FacePoly q(kind, k);
            const auto [ri, rj] = q.frame_to_ref(origin, toward, i, j);
            q.at(ri, rj) = 1;
            Vec col;
            for (const auto& jet : {jet_at_corner(q, origin, toward), jet_at_corner(q, toward, origin)})
                col.insert(col.end(), jet.begin(), jet.end());
            cols.push_back(col);
        }
    Matrix m(8, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < 8; ++r)
            m(r, c) = cols[c][r];
    return m;
}

int separability_exact(const TopoSurface& s, const Gluings& g, int e)
{
    const int bound = separability_bound(s, g, e);
    if (s.edge(e).boundary()) {
        for (int k = 1; k <= bound + 4; ++k)
            if (rank(boundary_jet_matrix(s, e, k)) == 8)
                return k;
        throw Error(ErrorKind::Internal, "boundary edge '" + s.edge(e).id + "' never separates");
    }
    const LocalEdge le = stored_local_edge(s, g, e);
    const MuBasis mb = mu_basis(le.data, le.s1.kind, le.s2.kind);
    const auto c = edge_crossing(s, g, e);
    const std::size_t target = 10 - static_cast<std::size_t>(c[0]) - static_cast<std::size_t>(c[1]);
    for (int k = 1; k <= bound + 4; ++k)
        if (rank(edge_jet_matrix(s, le, mb, k, true)) >= target)
            return k;
    throw Error(ErrorKind::Internal, "edge '" + s.edge(e).id + "' does not separate up to degree " +
                                         std::to_string(bound + 4));
}

VertexDim dim_H_vertex(const TopoSurface& s, const Gluings& g, int v)
{
    VertexDim d;
    d.vertex = v;
    const VertexClass& vc = s.vertex(v);
    d.faces = vc.face_count();
    const auto jets = vertex_jets(s, g, v);
    int interior_edges = 0;
    for (const auto& j : jets)
        if (!j.boundary) {
            ++interior_edges;
            d.sum_crossing += j.crossing ? 1 : 0;
        }
    d.c_plus = vc.interior && interior_edges == 4 && d.sum_crossing == 4 ? 1 : 0;
    d.dim_H = 3 + d.faces - d.sum_crossing + d.c_plus;
    return d;
}

EdgeDim dim_E_edge(const TopoSurface& s, const Gluings& g, int e, int k)
{
    EdgeDim d;
    d.edge = e;
    d.boundary = s.edge(e).boundary();
    d.d_tau = d_tau(s, g, e, k);
    d.crossing = edge_crossing(s, g, e);
    d.dim_E = d.d_tau - 9 + (d.crossing[0] ? 1 : 0) + (d.crossing[1] ? 1 : 0);
    d.separability_bound = separability_bound(s, g, e);
    if (!d.boundary)
        d.mu_basis = edge_mu_basis(s, g, e);
    return d;
}

int face_interior_count(FaceKind kind, int k)
{
    if (kind == FaceKind::Quad)
        return k >= 3 ? (k - 3) * (k - 3) : 0;
    return k >= 5 ? (k - 5) * (k - 4) / 2 : 0;
}

DimensionReport dim_spline_space(const TopoSurface& s, const Gluings& g, int k, const DimensionOptions& opt)
{
    DimensionReport r;
    r.k = k;
    r.exact_separability = opt.exact_separability;
    int faces_part = 0, quads = 0, triangles = 0;
    for (const auto& f : s.faces()) {
        r.face_interior.push_back(face_interior_count(f.kind, k));
        faces_part += r.face_interior.back();
        (f.kind == FaceKind::Quad ? quads : triangles) += 1;
    }
    int sum_d = 0;
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
        EdgeDim d = dim_E_edge(s, g, e, k);
        if (opt.exact_separability)
            d.separability_exact = separability_exact(s, g, e);
        r.s_star = std::max(r.s_star, d.separability_exact.value_or(d.separability_bound));
        sum_d += d.d_tau;
        r.edges.push_back(std::move(d));
    }
    for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v)
        r.vertices.push_back(dim_H_vertex(s, g, v));

    r.breakdown_total = faces_part;
    for (const auto& d : r.edges)
        r.breakdown_total += d.dim_E;
    for (const auto& d : r.vertices)
        r.breakdown_total += d.dim_H;

    const SurfaceCounts c = s.counts(crossing_flags(s, g));
    r.closed_form = quads * face_interior_count(FaceKind::Quad, k) +
                    triangles * face_interior_count(FaceKind::Triangle, k) + sum_d + 4 * quads + 3 * triangles -
                    9 * c.edges + 3 * c.vertices + c.crossing_vertices;

    r.below_s_star = k < r.s_star;
    if (opt.oracle || r.below_s_star)
        r.oracle = brute_force_dimension(s, g, k);
    r.total = r.below_s_star ? *r.oracle : r.breakdown_total;
    return r;
}

namespace {

std::string syz_str(const Syzygy& z) { return "[" + z[0].str() + ", " + z[1].str() + ", " + z[2].str() + "]"; }

} // namespace

std::string DimensionReport::text(const TopoSurface& s, bool explain) const
{
    std::ostringstream os;
    os << "degree " << k << "\n";
    os << "dimension " << total << "\n";
    os << "s_star " << s_star << " (" << (exact_separability ? "exact" : "bound") << ")\n";
    if (below_s_star)
        os << "below_s_star: dimension taken from the brute-force oracle\n";
    else
        os << "breakdown_total " << breakdown_total << "\n";
    os << "closed_form " << closed_form << "\n";
    if (oracle)
        os << "oracle " << *oracle << " " << (*oracle == total ? "agree" : "DISAGREE") << "\n";
    for (const auto& v : vertices)
        os << "vertex " << s.vertex(v.vertex).id << " F=" << v.faces << " sum_c=" << v.sum_crossing
           << " c_plus=" << v.c_plus << " dim_H=" << v.dim_H << "\n";
    for (const auto& e : edges) {
        os << "edge " << s.edge(e.edge).id << (e.boundary ? " boundary" : " interior") << " d_tau=" << e.d_tau
           << " c=" << e.crossing[0] << "," << e.crossing[1] << " dim_E=" << e.dim_E
           << " sep_bound=" << e.separability_bound;
        if (e.separability_exact)
            os << " sep_exact=" << *e.separability_exact;
        os << "\n";
        if (explain && e.mu_basis) {
            const MuBasis& mb = *e.mu_basis;
            os << "  n=" << mb.inv.n << " m=" << mb.inv.m << " e=" << mb.inv.e << " d=(" << mb.inv.d_a << ","
               << mb.inv.d_b << "," << mb.inv.d_c << ") mu=" << mb.mu << " nu=" << mb.nu << "\n";
            os << "  S1=" << syz_str(mb.S1) << " S2=" << syz_str(mb.S2) << "\n";
        }
    }
    for (std::size_t f = 0; f < face_interior.size(); ++f)
        os << "face " << s.face(static_cast<int>(f)).id << " interior=" << face_interior[f] << "\n";
    return os.str();
}

} // namespace g1

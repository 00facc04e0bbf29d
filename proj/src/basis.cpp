#include "g1/basis.hpp"

#include "g1/verify.hpp"

#include <algorithm>
#include <set>

namespace g1 {

namespace {

const VertexJet& fan_jet(const std::vector<VertexJet>& jets, int i)
{
    const int n = static_cast<int>(jets.size());
    return jets[((i % n) + n) % n];
}


} // namespace

std::vector<int> free_cross_positions(const TopoSurface& s, const Gluings& g, int v)
{
    const VertexClass& vc = s.vertex(v);
    const int F = vc.face_count();
    const auto jets = vertex_jets(s, g, v);
    std::vector<int> out;
    if (vc.interior) {
        for (int i = 0; i < F; ++i)
            if (!jets[i].crossing)
                out.push_back(i);
        if (out.empty())
            out.push_back(0);
    } else {
        out.push_back(0);
        for (int i = 1; i < F; ++i)
            if (!jets[i].crossing)
                out.push_back(i);
    }
    return out;
}

std::vector<Jet> vertex_jet_solve(const TopoSurface& s, const Gluings& g, int v, JetKind kind, int position)
{
    const VertexClass& vc = s.vertex(v);
    const int F = vc.face_count();
    const auto jets = vertex_jets(s, g, v);
    const auto free = free_cross_positions(s, g, v);
    if (kind == JetKind::Cross && std::find(free.begin(), free.end(), position) == free.end())
        throw Error(ErrorKind::InputError, "fan position " + std::to_string(position) + " of vertex " + vc.id +
                                               " has no free cross derivative");

    const Rational p = kind == JetKind::Value ? 1 : 0;
    Vec q(static_cast<std::size_t>(F + 1));
    q[0] = kind == JetKind::Deriv1 ? 1 : 0;
    q[1] = kind == JetKind::Deriv2 ? 1 : 0;
    for (int i = 1; i < F; ++i)
        q[i + 1] = jets[i].a0 * q[i] + jets[i].b0 * q[i - 1];
    if (vc.interior && (q[F] != q[0] || q[1] != jets[0].a0 * q[0] + jets[0].b0 * q[F - 1]))
        throw Error(ErrorKind::PropagationInconsistent,
                    "first derivatives do not close up around vertex " + vc.id);
    auto qi = [&](int i) -> Rational { return q[static_cast<std::size_t>(((i % F) + F) % F)]; };

    Vec sv(static_cast<std::size_t>(F));
    auto propagate = [&](int i) -> Rational {
        const VertexJet& j = fan_jet(jets, i);
        return j.b0 * sv[static_cast<std::size_t>((i - 1 + F) % F)] + j.da0 * qi(i) + j.db0 * qi(i - 1);
    };
    const int start = vc.interior ? free.front() : 0;
    for (int t = 0; t < F; ++t) {
        const int i = (start + t) % F;
        if (std::find(free.begin(), free.end(), i) != free.end())
            sv[static_cast<std::size_t>(i)] = kind == JetKind::Cross && i == position ? 1 : 0;
        else
            sv[static_cast<std::size_t>(i)] = propagate(i);
    }
    if (vc.interior && std::all_of(jets.begin(), jets.end(), [](const VertexJet& j) { return j.crossing; }) &&
        sv[0] != propagate(0))
        throw Error(ErrorKind::PropagationInconsistent,
                    "cross derivatives do not close up around crossing vertex " + vc.id);

    std::vector<Jet> out;
    for (int i = 0; i < F; ++i)
        out.push_back({p, q[i], q[i + 1], sv[static_cast<std::size_t>(i)]});
    return out;
}

namespace {

Vec flatten(const std::array<Jet, 4>& jets)
{
    Vec out;
    for (const auto& j : jets)
        out.insert(out.end(), j.begin(), j.end());
    return out;
}

/// Hermite cubics with value resp. slope 1 at 0 and vanishing 1-jet at 1, and the bubble u^2(1-u)^2.
const UniPoly kH0{1, 0, -3, 2};
const UniPoly kH1{0, 1, -2, 1};
const UniPoly kBubble{0, 0, 1, -2, 1};

/// Hermite-plus-bubble multipliers (P, Q), or nullopt when the construction does not apply.
std::optional<std::pair<UniPoly, UniPoly>> hermite_lift(const MuBasis& mb, int k, const Jet& t1, const Jet& t2,
                                                        const Rational& c0)
{
    const auto [cp, cq] = pq_caps(mb, k);
    const Syzygy& S1 = mb.S1;
    const Syzygy& S2 = mb.S2;
    // (A, B, C)(0) = (q_i, q_{i-1}, -q_{i+1}).
    Matrix m0 = Matrix::from_rows({{S1[0](0), S2[0](0)}, {S1[1](0), S2[1](0)}, {S1[2](0), S2[2](0)}}, 2);
    const auto x0 = solve(m0, {t1[1], t2[2], -t1[2]});
    if (!x0)
        return std::nullopt;
    const Rational p0 = (*x0)[0], q0 = (*x0)[1];
    // (B', C')(0) = (s_{i-1}, -s_i).
    const Rational dB1 = S1[1].derivative()(0), dB2 = S2[1].derivative()(0);
    const Rational dC1 = S1[2].derivative()(0), dC2 = S2[2].derivative()(0);
    Matrix m1 = Matrix::from_rows({{S1[1](0), S2[1](0)}, {S1[2](0), S2[2](0)}}, 2);
    const auto x1 = solve(m1, {t2[3] - p0 * dB1 - q0 * dB2, -t1[3] - p0 * dC1 - q0 * dC2});
    if (!x1)
        return std::nullopt;
    UniPoly P = kH0 * p0 + kH1 * (*x1)[0];
    UniPoly Q = kH0 * q0 + kH1 * (*x1)[1];
    const Rational need = -c0 - (P * S1[0] + Q * S2[0]).integral01();
    if (need != 0) {
        bool done = false;
        for (int j = 0; !done && 4 + j <= std::max(cp, cq); ++j) {
            const UniPoly b = kBubble * UniPoly::monomial(j);
            const Rational ip = (b * S1[0]).integral01(), iq = (b * S2[0]).integral01();
            if (4 + j <= cp && ip != 0) {
                P += b * (need / ip);
                done = true;
            } else if (4 + j <= cq && iq != 0) {
                Q += b * (need / iq);
                done = true;
            }
        }
        if (!done)
            return std::nullopt;
    }
    if (P.degree() > cp || Q.degree() > cq)
        return std::nullopt;
    return std::pair<UniPoly, UniPoly>{P, Q};
}

} // namespace

Spline lift(const TopoSurface& s, const Gluings& g, int v, int i, const std::vector<Jet>& jets, const Rational& c0,
            int k)
{
    const int F = s.vertex(v).face_count();
    const LocalEdge le = fan_local_edge(s, g, v, i);
    const MuBasis mb = mu_basis(le.data, le.s1.kind, le.s2.kind);
    const Jet& t1 = jets[static_cast<std::size_t>(i % F)];
    const Jet& prev = jets[static_cast<std::size_t>((i - 1 + F) % F)];
    const Jet t2{prev[0], prev[2], prev[1], prev[3]};
    Vec target(16);
    std::copy(t1.begin(), t1.end(), target.begin());
    std::copy(t2.begin(), t2.end(), target.begin() + 4);

    if (const auto pq = hermite_lift(mb, k, t1, t2, c0)) {
        const Syzygy z = combine(mb, pq->first, pq->second);
        Spline sp = theta(s, le, z[0], z[1], z[2], k, c0);
        if (flatten(local_edge_jets(sp, le)) == target)
            return sp;
    }

    // General exact solve over all multipliers allowed in degree k.
    const Matrix m = edge_jet_matrix(s, le, mb, k, false);
    const Vec base = flatten(local_edge_jets(theta(s, le, UniPoly(), UniPoly(), UniPoly(), k, c0), le));
    Vec rhs(16);
    for (std::size_t r = 0; r < 16; ++r)
        rhs[r] = target[r] - base[r];
    if (const auto x = solve(m, rhs)) {
        Vec full = *x;
        full.push_back(c0);
        return edge_spline(s, le, mb, k, full);
    }
    // Distinguish a failing far-end value (integral condition) from inconsistent jets.
    std::vector<Vec> rows;
    Vec rhs_wo;
    for (std::size_t r = 0; r < 16; ++r)
        if (r != 8 && r != 12) {
            rows.push_back(m.row(r));
            rhs_wo.push_back(rhs[r]);
        }
    const std::string where = "edge '" + s.edge(le.edge).id + "' at vertex " + s.vertex(v).id + ", degree " +
                              std::to_string(k);
    if (solve(Matrix::from_rows(rows, m.cols()), rhs_wo))
        throw Error(ErrorKind::IntegralInfeasible, "no multiplier meets the integral condition on " + where);
    throw Error(ErrorKind::SingularInconsistent, "corner jets cannot be lifted along " + where);
}

Spline vertex_function(const TopoSurface& s, const Gluings& g, int v, const std::vector<Jet>& jets, int k)
{
    const VertexClass& vc = s.vertex(v);
    const int F = vc.face_count();
    Spline out = Spline::zero(s, k);
    std::set<std::pair<int, std::size_t>> block;
    auto block_positions = [&](int i) {
        const FanEntry& en = vc.fan[i];
        const FacePoly& p = out.faces[en.face];
        std::array<std::size_t, 4> pos;
        const std::array<std::pair<int, int>, 4> fij{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
        for (int t = 0; t < 4; ++t) {
            const auto [ri, rj] = p.frame_to_ref(en.corner, en.corner_u, fij[t].first, fij[t].second);
            pos[t] = p.index(ri, rj);
        }
        return pos;
    };
    for (int i = 0; i < F; ++i)
        for (std::size_t x : block_positions(i))
            block.insert({vc.fan[i].face, x});

    for (int i = vc.interior ? 0 : 1; i < F; ++i) {
        const Spline l = lift(s, g, v, i, jets, jets[0][0], k);
        for (std::size_t f = 0; f < l.faces.size(); ++f)
            for (std::size_t x = 0; x < l.faces[f].coeffs().size(); ++x)
                if (l.faces[f].coeffs()[x] != 0 && !block.count({static_cast<int>(f), x}))
                    out.faces[f].coeffs()[x] += l.faces[f].coeffs()[x];
    }
    for (int i = 0; i < F; ++i) {
        const auto c = jet_to_corner_coeffs(out.faces[vc.fan[i].face].kind(), k, jets[i]);
        const auto pos = block_positions(i);
        for (int t = 0; t < 4; ++t)
            out.faces[vc.fan[i].face].coeffs()[pos[t]] = c[t];
    }
    return out;
}

std::vector<BasisFunction> vertex_basis(const TopoSurface& s, const Gluings& g, int v, int k)
{
    const std::string& id = s.vertex(v).id;
    std::vector<BasisFunction> out;
    auto add = [&](TagKind tk, int index, JetKind jk, int position) {
        BasisTag tag{tk, id, index, 0, 0};
        out.push_back({tag, vertex_function(s, g, v, vertex_jet_solve(s, g, v, jk, position), k)});
    };
    add(TagKind::VertexValue, 0, JetKind::Value, -1);
    add(TagKind::VertexDeriv, 1, JetKind::Deriv1, -1);
    add(TagKind::VertexDeriv, 2, JetKind::Deriv2, -1);
    for (int pos : free_cross_positions(s, g, v))
        add(TagKind::VertexCross, pos, JetKind::Cross, pos);
    return out;
}

std::vector<BasisFunction> edge_basis(const TopoSurface& s, const Gluings& g, int e, int k)
{
    const Edge& ed = s.edge(e);
    std::vector<BasisFunction> out;
    if (ed.boundary()) {
        const Side& sd = ed.sides[0];
        const FaceKind kind = s.face(sd.face).kind;
        const int origin = s.start_corner(e, 0), toward = s.end_corner(e, 0);
        int n = 0;
        for (int j = 0; j <= 1; ++j)
            for (int i = 2; i <= k - 2 - j * fdelta(kind); ++i) {
                Spline sp = Spline::zero(s, k);
                FacePoly& p = sp.faces[sd.face];
                const auto [ri, rj] = p.frame_to_ref(origin, toward, i, j);
                p.at(ri, rj) = 1;
                out.push_back({BasisTag{TagKind::EdgeFn, ed.id, n++, 0, 0}, sp});
            }
        return out;
    }
    const LocalEdge le = stored_local_edge(s, g, e);
    const MuBasis mb = mu_basis(le.data, le.s1.kind, le.s2.kind);
    int n = 0;
    for (const auto& x : nullspace(edge_jet_matrix(s, le, mb, k, false)))
        out.push_back({BasisTag{TagKind::EdgeFn, ed.id, n++, 0, 0}, edge_spline(s, le, mb, k, x)});
    return out;
}

std::vector<BasisFunction> face_basis(const TopoSurface& s, int f, int k)
{
    const FaceSpec& fs = s.face(f);
    std::vector<BasisFunction> out;
    for (int j = 2; j <= k - 2; ++j)
        for (int i = 2; i <= k - 2; ++i) {
            if (fs.kind == FaceKind::Triangle && i + j > k - 2)
                continue;
            Spline sp = Spline::zero(s, k);
            sp.faces[f].at(i, j) = 1;
            out.push_back({BasisTag{TagKind::FaceFn, fs.id, 0, i, j}, sp});
        }
    return out;
}

void certify_basis(const TopoSurface& s, const Gluings& g, const SplineBasis& basis)
{
    for (const auto& bf : basis.functions) {
        if (bf.spline.k != basis.k || bf.spline.faces.size() != s.faces().size())
            throw Error(ErrorKind::CertificationFailed, bf.tag.str() + ": wrong degree or face count");
        const ResidualReport r = g1_residual(bf.spline, s, g);
        for (const auto& e : r.edges)
            if (!e.zero())
                throw Error(ErrorKind::CertificationFailed, bf.tag.str() + ": nonzero G1 residual on edge '" +
                                                                s.edge(e.edge).id + "' (r0 = " + e.r0.str() +
                                                                ", r1 = " + e.r1.str() + ")");
    }
    DimensionOptions opt;
    opt.exact_separability = true;
    const int dim = dim_spline_space(s, g, basis.k, opt).total;
    if (static_cast<int>(basis.functions.size()) != dim)
        throw Error(ErrorKind::CertificationFailed, std::to_string(basis.functions.size()) +
                                                        " functions for a space of dimension " + std::to_string(dim));
    const RankReport rr = check_independence(basis);
    if (!rr.ok())
        throw Error(ErrorKind::CertificationFailed,
                    "rank " + std::to_string(rr.rank) + " of " + std::to_string(rr.count) + " functions");
}

SplineBasis full_basis(const TopoSurface& s, const Gluings& g, int k)
{
    DimensionOptions opt;
    opt.exact_separability = true;
    const DimensionReport rep = dim_spline_space(s, g, k, opt);
    if (rep.below_s_star)
        throw Error(ErrorKind::BelowSeparability,
                    "degree " + std::to_string(k) + " is below the separability degree " + std::to_string(rep.s_star));
    SplineBasis b;
    b.k = k;
    for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v)
        for (auto& f : vertex_basis(s, g, v, k))
            b.functions.push_back(std::move(f));
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e)
        for (auto& f : edge_basis(s, g, e, k))
            b.functions.push_back(std::move(f));
    for (int f = 0; f < static_cast<int>(s.faces().size()); ++f)
        for (auto& fn : face_basis(s, f, k))
            b.functions.push_back(std::move(fn));
    certify_basis(s, g, b);
    return b;
}

} // namespace g1

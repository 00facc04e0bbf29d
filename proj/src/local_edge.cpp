#include "g1/local_edge.hpp"

namespace g1 {

namespace {

SideFrame side_frame(const TopoSurface& s, int e, int side, bool at_start)
{
    const Side& sd = s.edge(e).sides[side];
    SideFrame f;
    f.face = sd.face;
    f.kind = s.face(sd.face).kind;
    f.origin = at_start ? s.start_corner(e, side) : s.end_corner(e, side);
    f.toward = at_start ? s.end_corner(e, side) : s.start_corner(e, side);
    return f;
}

void write_rows(Spline& sp, const SideFrame& f, const UniPoly& g, const UniPoly& h)
{
    FacePoly& p = sp.faces[f.face];
    for (const auto& [ij, value] : edge_rows(f.kind, sp.k, g, h)) {
        const auto [ri, rj] = p.frame_to_ref(f.origin, f.toward, ij.first, ij.second);
        p.at(ri, rj) = value;
    }
}

} // namespace

LocalEdge stored_local_edge(const TopoSurface& s, const Gluings& g, int e)
{
    if (s.edge(e).boundary() || !g[e])
        throw Error(ErrorKind::MissingGluing, "edge '" + s.edge(e).id + "' has no gluing data");
    return {e, side_frame(s, e, 0, true), side_frame(s, e, 1, true), *g[e]};
}

LocalEdge fan_local_edge(const TopoSurface& s, const Gluings& g, int v, int i)
{
    const FanEdge& fe = s.vertex(v).edges[i];
    LocalEdge le;
    le.edge = fe.edge;
    le.data = fan_gluing(s, g, v, i);
    le.s1 = side_frame(s, fe.edge, fe.side_u, fe.at_start);
    le.s2 = side_frame(s, fe.edge, 1 - fe.side_u, fe.at_start);
    return le;
}

Spline theta(const TopoSurface& s, const LocalEdge& le, const UniPoly& A, const UniPoly& B, const UniPoly& C, int k,
             const Rational& c0)
{
    Spline sp = Spline::zero(s, k);
    const UniPoly g = A.integrate() + UniPoly::constant(c0);
    write_rows(sp, le.s1, g, -C);
    write_rows(sp, le.s2, g, B);
    return sp;
}

std::array<Jet, 4> local_edge_jets(const Spline& sp, const LocalEdge& le)
{
    return {jet_at_corner(sp.faces[le.s1.face], le.s1.origin, le.s1.toward),
            jet_at_corner(sp.faces[le.s2.face], le.s2.origin, le.s2.toward),
            jet_at_corner(sp.faces[le.s1.face], le.s1.toward, le.s1.origin),
            jet_at_corner(sp.faces[le.s2.face], le.s2.toward, le.s2.origin)};
}

} // namespace g1

/** @file local_edge.hpp

    @brief An interior edge seen from one endpoint: the two adjacent faces in
    their edge frames, the gluing data in that orientation, and the map
    Theta that turns a syzygy into a spline supported on the two faces.
*/
#pragma once

#include "g1/gluing.hpp"
#include "g1/spline.hpp"

#include <array>

namespace g1 {

/// A face in the frame (origin, toward) that puts the edge at {v=0}.
struct SideFrame {
    int face = -1;
    FaceKind kind = FaceKind::Quad;
    int origin = 0, toward = 1;
};

/// s1 plays the sigma_1 role (h1 = -C), s2 the sigma_2 role (h2 = B).
struct LocalEdge {
    int edge = -1;
    SideFrame s1, s2;
    EdgeGluing data;
};

/// Stored orientation: rooted at the edge start, side 0 as sigma_1.
LocalEdge stored_local_edge(const TopoSurface& s, const Gluings& g, int e);

/// Fan edge i of vertex v rooted at v with fan entry i as sigma_1.
LocalEdge fan_local_edge(const TopoSurface& s, const Gluings& g, int v, int i);

/// Spline with edge data (c0 + int A, -C) on s1 and (c0 + int A, B) on s2,
/// nonzero only on the two coefficient rows next to the edge.
/// Errors: DegreeBoundViolated.
Spline theta(const TopoSurface& s, const LocalEdge& le, const UniPoly& A, const UniPoly& B, const UniPoly& C, int k,
             const Rational& c0 = 0);

/// Corner jets of a spline on the two faces of a local edge:
/// [s1 at origin, s2 at origin, s1 at far end, s2 at far end].
std::array<Jet, 4> local_edge_jets(const Spline& sp, const LocalEdge& le);

} // namespace g1

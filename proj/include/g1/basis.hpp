/** @file basis.hpp

    @brief Explicit basis of the G1 spline space: vertex functions built by
    lifting compatible corner jets along the incident edges, edge functions
    from the mu-basis, and face interior functions.
*/
#pragma once

#include "g1/dimension.hpp"
#include "g1/spline.hpp"

#include <vector>

namespace g1 {

enum class JetKind { Value, Deriv1, Deriv2, Cross };

/// Fan positions whose cross derivative is a free parameter.
std::vector<int> free_cross_positions(const TopoSurface& s, const Gluings& g, int v);

/// Corner jets (p, q_i, q_{i+1}, s_i) per fan entry of vertex v. For Cross,
/// `position` is one of free_cross_positions. Errors: PropagationInconsistent.
std::vector<Jet> vertex_jet_solve(const TopoSurface& s, const Gluings& g, int v, JetKind kind, int position = -1);

/// Spline supported on the two faces of fan edge i of v whose corner jets at v
/// are those of `jets` (per fan entry) and vanish at the other endpoint; the
/// restriction to the edge has value c0 at v.
/// Errors: SingularInconsistent, IntegralInfeasible.
Spline lift(const TopoSurface& s, const Gluings& g, int v, int i, const std::vector<Jet>& jets, const Rational& c0,
            int k);

/// Spline with the given corner jets at v, supported on the faces around v.
Spline vertex_function(const TopoSurface& s, const Gluings& g, int v, const std::vector<Jet>& jets, int k);

std::vector<BasisFunction> vertex_basis(const TopoSurface& s, const Gluings& g, int v, int k);
std::vector<BasisFunction> edge_basis(const TopoSurface& s, const Gluings& g, int e, int k);
std::vector<BasisFunction> face_basis(const TopoSurface& s, int f, int k);

/// All families, certified: count equals the dimension formula, exact rank
/// equals the count, every member has zero G1 residual.
/// Errors: BelowSeparability, CertificationFailed.
SplineBasis full_basis(const TopoSurface& s, const Gluings& g, int k);

/// Runs the certification of full_basis on an arbitrary basis.
/// Errors: CertificationFailed.
void certify_basis(const TopoSurface& s, const Gluings& g, const SplineBasis& basis);

} // namespace g1

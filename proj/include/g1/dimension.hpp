/** @file dimension.hpp

    @brief Dimension formulas: d_tau(k) per edge, separability, dim H per
    vertex, dim E_k per edge and the dimension of the G1 spline space.
*/
#pragma once

#include "g1/linalg.hpp"
#include "g1/local_edge.hpp"
#include "g1/syzygy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g1 {

/// Crossing flags of an edge at its start and end (false for boundary edges).
std::array<bool, 2> edge_crossing(const TopoSurface& s, const Gluings& g, int e);

/// mu-basis of an interior edge in its stored orientation.
MuBasis edge_mu_basis(const TopoSurface& s, const Gluings& g, int e);

/// Interior: dim Z_k. Boundary: 2k + 3 - fdelta of the face.
int d_tau(const TopoSurface& s, const Gluings& g, int e, int k);

/// nu + m + 4 for interior edges, 3 + fdelta for boundary edges.
int separability_bound(const TopoSurface& s, const Gluings& g, int e);

/// Smallest k at which the corner jets at both endpoints of the edge splines
/// reach rank (5 - c) + (5 - c') (8 for a boundary edge).
int separability_exact(const TopoSurface& s, const Gluings& g, int e);

/// Jet matrix of the edge splines Theta(P*S1 + Q*S2) of a local edge: one
/// column per u^j*S1 (j <= cap P), then u^j*S2 (j <= cap Q), then optionally
/// the constant; rows are the 16 corner jet entries of local_edge_jets.
Matrix edge_jet_matrix(const TopoSurface& s, const LocalEdge& le, const MuBasis& mb, int k, bool with_constant);

/// Spline Theta(P*S1 + Q*S2) + c0 from a column vector of edge_jet_matrix.
Spline edge_spline(const TopoSurface& s, const LocalEdge& le, const MuBasis& mb, int k, const Vec& x);

/// Jet matrix of the two boundary rows of a boundary edge: one column per
/// coefficient of rows 0 and 1 (edge frame), rows the 8 corner jet entries.
Matrix boundary_jet_matrix(const TopoSurface& s, int e, int k);

/// 3 + F - sum of crossing flags + c_plus.
struct VertexDim {
    int vertex = -1;
    int faces = 0;
    int sum_crossing = 0;
    int c_plus = 0;
    int dim_H = 0;
};

VertexDim dim_H_vertex(const TopoSurface& s, const Gluings& g, int v);

struct EdgeDim {
    int edge = -1;
    bool boundary = false;
    int d_tau = 0;
    std::array<bool, 2> crossing{false, false};
    int dim_E = 0;
    int separability_bound = 0;
    std::optional<int> separability_exact;
    std::optional<MuBasis> mu_basis;
};

/// d_tau - 9 + c + c' (c = 0 on boundary edges).
EdgeDim dim_E_edge(const TopoSurface& s, const Gluings& g, int e, int k);

/// (k-3)^2 per quad, (k-5)(k-4)/2 per triangle.
int face_interior_count(FaceKind kind, int k);

struct DimensionOptions {
    bool exact_separability = false;
    /// Also compute the brute-force dimension.
    bool oracle = false;
};

struct DimensionReport {
    int k = 0;
    /// The answer: breakdown sum at k >= s*, oracle value below.
    int total = 0;
    int breakdown_total = 0;
    /// Closed form of the dimension theorem, evaluated independently of the breakdown.
    int closed_form = 0;
    int s_star = 0;
    bool exact_separability = false;
    bool below_s_star = false;
    std::optional<int> oracle;
    std::vector<VertexDim> vertices;
    std::vector<EdgeDim> edges;
    std::vector<int> face_interior;
    std::string text(const TopoSurface& s, bool explain) const;
};

DimensionReport dim_spline_space(const TopoSurface& s, const Gluings& g, int k, const DimensionOptions& opt = {});

} // namespace g1

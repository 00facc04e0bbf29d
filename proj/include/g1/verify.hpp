/** @file verify.hpp

    @brief Independent certification of splines and bases: exact G1
    residuals, the brute-force dimension of the spline space, rank,
    ampleness and jet duality.
*/
#pragma once

#include "g1/gluing.hpp"
#include "g1/linalg.hpp"
#include "g1/spline.hpp"

#include <string>
#include <vector>

namespace g1 {

struct EdgeResidual {
    int edge = -1;
    /// g1 - g2.
    UniPoly r0;
    /// c*h1 - b*h2 - a*g1'.
    UniPoly r1;
    bool zero() const { return r0.is_zero() && r1.is_zero(); }
};

struct ResidualReport {
    std::vector<EdgeResidual> edges;
    bool zero() const;
};

ResidualReport g1_residual(const Spline& sp, const TopoSurface& s, const Gluings& g);

/// Unknowns: all Bernstein coefficients, faces in surface order. Rows: the
/// coefficient-matching equations of r0 = 0 and r1 = 0 on every interior edge.
struct ConstraintSystem {
    std::size_t unknowns = 0;
    std::vector<SparseRow> rows;
};

ConstraintSystem constraint_system(const TopoSurface& s, const Gluings& g, int k);

/// Default cap on the number of unknowns of the oracle.
inline constexpr std::size_t kOracleLimit = 20000;

/// Nullity of the constraint system. Errors: SizeLimit.
int brute_force_dimension(const TopoSurface& s, const Gluings& g, int k, std::size_t limit = kOracleLimit);

struct RankReport {
    std::size_t rank = 0, count = 0;
    bool ok() const { return rank == count; }
};

RankReport check_independence(const SplineBasis& basis);

/// A point of a face in reference coordinates.
struct SamplePoint {
    int face = -1;
    Rational u, v;
    std::string label;
};

struct AmplenessEntry {
    SamplePoint point;
    std::size_t rank = 0;
};

struct AmplenessReport {
    std::vector<AmplenessEntry> entries;
    bool ok() const;
};

/// Every vertex (one incident corner), every edge midpoint and every face center.
std::vector<SamplePoint> default_sample_points(const TopoSurface& s);

/// Rank of (value, d/du, d/dv) over the basis at each point; ample iff 3 everywhere.
AmplenessReport ampleness_check(const TopoSurface& s, const SplineBasis& basis, const std::vector<SamplePoint>& points);

struct DualityEntry {
    std::string where;
    std::size_t expected = 0, actual = 0;
    bool ok() const { return expected == actual; }
};

struct DualityReport {
    std::vector<DualityEntry> entries;
    bool ok() const;
};

/// Corner jets of a spline at every corner of every face (T0).
Vec taylor0(const Spline& sp);

/// Vertex families: their jets vanish at other vertices and span a space of
/// dimension dim H at their vertex. Edge and face functions: T0 = 0. Face
/// functions additionally vanish to first order along every edge.
DualityReport jet_duality_check(const TopoSurface& s, const Gluings& g, const SplineBasis& basis);

} // namespace g1

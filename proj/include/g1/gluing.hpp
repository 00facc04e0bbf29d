/** @file gluing.hpp

    @brief Gluing data [a,b,c] on interior edges, vertex jets, compatibility
    and topology checks, and the symmetric gluing generator.

    Along an interior edge with edge-frame data (g, h1) on side 0 and (g, h2)
    on side 1, a spline is G1 iff c*h1 = b*h2 + a*g'.
*/
#pragma once

#include "g1/error.hpp"
#include "g1/surface.hpp"
#include "g1/unipoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g1 {

struct EdgeGluing {
    UniPoly a, b, c;
    friend bool operator==(const EdgeGluing&, const EdgeGluing&) = default;
};

/// Per edge; empty for boundary edges.
using Gluings = std::vector<std::optional<EdgeGluing>>;

/// Removes rational content and fixes the sign so that c(0) > 0 (or the
/// lowest nonzero coefficient of c is positive when c(0) = 0).
EdgeGluing normalize(EdgeGluing g);

/// Data with the two sides exchanged: (a,b,c) -> (-a,c,b), normalized.
EdgeGluing swap_roles(const EdgeGluing& g);

/// Data re-rooted at the far endpoint, parameter t = 1-u, same side roles.
/// f1, f2 are fdelta of the side-0 and side-1 faces.
EdgeGluing reroot(const EdgeGluing& g, int f1, int f2);

/// First-order data of the transition map at a vertex, edge oriented away from it.
struct VertexJet {
    int edge = -1;
    bool boundary = false;
    Rational a0, b0, da0, db0;
    bool crossing = false;
};

/// Gluing data of fan edge tau_i at vertex v in fan orientation: rooted at v
/// with fan entry i in the side-0 role. Errors: MissingGluing.
EdgeGluing fan_gluing(const TopoSurface& s, const Gluings& g, int v, int i);

/// One jet per fan edge (boundary edges flagged). Errors: MissingGluing, ZeroDenominator.
std::vector<VertexJet> vertex_jets(const TopoSurface& s, const Gluings& g, int v);

/// Crossing flags at the start and end of every edge (false on boundary edges).
std::vector<std::array<bool, 2>> crossing_flags(const TopoSurface& s, const Gluings& g);

enum class Status { Pass, Warn, Fail };

struct CheckEntry {
    Status status;
    std::string where;
    std::string what;
    std::optional<ErrorKind> error;
};

struct Report {
    std::vector<CheckEntry> entries;
    bool ok() const;
    bool has(ErrorKind kind) const;
    std::string text() const;
    void append(const Report& o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }
};

/// Residuals of the crossing-vertex derivative condition for the two free
/// first derivatives; both vanish iff the condition holds.
std::array<Rational, 2> condition2_residuals(const std::vector<VertexJet>& jets);

/// Condition 1 at interior vertices; at crossing vertices the edge count,
/// the products b1*b3 = b2*b4 = 1, and Condition 2.
Report check_vertex_compatibility(const TopoSurface& s, const std::vector<VertexJet>& jets, int v);

/// Sign of b/c on [0,1] per interior edge (Sturm certified) and the fan
/// criterion at interior vertices. Non-strict mode reports sharp edges and
/// fan violations as warnings.
Report check_topology(const TopoSurface& s, const Gluings& g, bool strict = true);

/// All checks of this module plus missing gluing data.
Report validate(const TopoSurface& s, const Gluings& g, bool strict = true);

/// Symmetric gluing: b = -1, c = 1, a of degree <= 2. Errors: InputError for
/// vertices that admit no fan, InfeasibleCorrection.
Gluings generate_symmetric_gluing(const TopoSurface& s);

/// Integer fan coefficients used by the generator: for an interior vertex
/// with F edges the cyclic sequence a_1..a_F, for a boundary vertex with F
/// faces the F-1 values on its interior edges.
std::vector<int> symmetric_fan(int faces, bool interior);

} // namespace g1

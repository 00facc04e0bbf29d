/** @file spline.hpp

    @brief Piecewise polynomial on a topological surface: one Bernstein
    coefficient array per face, all of the same degree.
*/
#pragma once

#include "g1/facepoly.hpp"
#include "g1/surface.hpp"

#include <string>
#include <vector>

namespace g1 {

struct Spline {
    int k = 0;
    std::vector<FacePoly> faces;

    static Spline zero(const TopoSurface& s, int k);
    /// All coefficients, faces in surface order.
    Vec flat() const;
    bool is_zero() const;
    Spline& operator+=(const Spline& o);
    Spline& operator*=(const Rational& x);
    friend bool operator==(const Spline&, const Spline&) = default;
};

enum class TagKind { VertexValue, VertexDeriv, VertexCross, EdgeFn, FaceFn };

/// Where a basis function is attached. `target` is a vertex, edge or face id;
/// `index` is the derivative number (1, 2), the fan position of a free cross
/// derivative, or the running number of an edge function; (i, j) is the
/// coefficient of a face function.
struct BasisTag {
    TagKind kind = TagKind::VertexValue;
    std::string target;
    int index = 0;
    int i = 0, j = 0;
    std::string str() const;
    friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

std::string to_string(TagKind kind);
TagKind parse_tag_kind(const std::string& s);

struct BasisFunction {
    BasisTag tag;
    Spline spline;
};

struct SplineBasis {
    int k = 0;
    std::vector<BasisFunction> functions;
};

} // namespace g1

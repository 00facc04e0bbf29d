#include "g1/spline.hpp"

#include "g1/error.hpp"

#include <algorithm>

namespace g1 {

Spline Spline::zero(const TopoSurface& s, int k)
{
    Spline sp;
    sp.k = k;
    for (const auto& f : s.faces())
        sp.faces.emplace_back(f.kind, k);
    return sp;
}

Vec Spline::flat() const
{
    Vec out;
    for (const auto& f : faces)
        out.insert(out.end(), f.coeffs().begin(), f.coeffs().end());
    return out;
}

bool Spline::is_zero() const
{
    return std::all_of(faces.begin(), faces.end(), [](const FacePoly& f) { return f.is_zero(); });
}

Spline& Spline::operator+=(const Spline& o)
{
    for (std::size_t f = 0; f < faces.size(); ++f)
        faces[f] += o.faces[f];
    return *this;
}

Spline& Spline::operator*=(const Rational& x)
{
    for (auto& f : faces)
        f *= x;
    return *this;
}

std::string to_string(TagKind kind)
{
    switch (kind) {
    case TagKind::VertexValue:
        return "vertex-value";
    case TagKind::VertexDeriv:
        return "vertex-deriv";
    case TagKind::VertexCross:
        return "vertex-cross";
    case TagKind::EdgeFn:
        return "edge";
    case TagKind::FaceFn:
        return "face";
    }
    return "?";
}

TagKind parse_tag_kind(const std::string& s)
{
    for (TagKind k : {TagKind::VertexValue, TagKind::VertexDeriv, TagKind::VertexCross, TagKind::EdgeFn, TagKind::FaceFn})
        if (to_string(k) == s)
            return k;
    throw Error(ErrorKind::InputError, "unknown basis tag kind '" + s + "'");
}

std::string BasisTag::str() const
{
    std::string out = to_string(kind) + "(" + target;
    if (kind == TagKind::FaceFn)
        out += ", " + std::to_string(i) + ", " + std::to_string(j);
    else if (kind != TagKind::VertexValue)
        out += ", " + std::to_string(index);
    return out + ")";
}

} // namespace g1

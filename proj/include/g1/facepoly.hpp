/** @file facepoly.hpp

    @brief Bernstein-Bezier polynomials on the reference triangle and square.

    Reference corners: triangle (0,0),(1,0),(0,1); square (0,0),(1,0),(1,1),(0,1).
    Slot s is the edge from corner s to corner s+1 (counterclockwise).
    A frame (origin, toward) is the affine reparameterization that puts the
    corner `origin` at (0,0), the neighbour `toward` at (1,0) and the other
    neighbour of `origin` at (0,1). It maps the reference domain onto itself,
    so it acts on Bernstein coefficients as an index permutation.
*/
#pragma once

#include "g1/rational.hpp"
#include "g1/unipoly.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace g1 {

enum class FaceKind { Triangle, Quad };

int corner_count(FaceKind kind);
/// 1 for triangles, 0 for quads.
int fdelta(FaceKind kind);
std::string to_string(FaceKind kind);
FaceKind parse_face_kind(const std::string& s);
/// Integer reference coordinates of a corner.
std::array<int, 2> corner_point(FaceKind kind, int corner);
bool corners_adjacent(FaceKind kind, int a, int b);
/// The neighbour of `origin` that is not `toward`.
int other_neighbor(FaceKind kind, int origin, int toward);

/// Taylor data at a corner: f, f_u, f_v, f_uv.
using Jet = std::array<Rational, 4>;

/// Restriction g and transversal derivative h along an edge.
struct EdgeJet {
    UniPoly g, h;
};

/// Bivariate polynomial stored by Bernstein coefficients c_{i,j}.
/// Storage order: quad j-major (index j*(k+1)+i); triangle by i+j, then i.
class FacePoly {
public:
    FacePoly() = default;
    FacePoly(FaceKind kind, int k);
    static FacePoly constant(FaceKind kind, int k, const Rational& value);
    static std::size_t count(FaceKind kind, int k);

    FaceKind kind() const { return kind_; }
    int degree() const { return k_; }
    bool valid(int i, int j) const;
    std::size_t index(int i, int j) const;
    Rational& at(int i, int j) { return c_[index(i, j)]; }
    const Rational& at(int i, int j) const { return c_[index(i, j)]; }
    Vec& coeffs() { return c_; }
    const Vec& coeffs() const { return c_; }
    /// (i,j) of the storage position n.
    std::pair<int, int> index_pair(std::size_t n) const;
    bool is_zero() const;

    Rational eval(const Rational& u, const Rational& v) const;
    /// Degree k+1 representation of the same polynomial.
    FacePoly elevate() const;

    /// Reference index of frame index (fi, fj) for the frame (origin, toward).
    std::pair<int, int> frame_to_ref(int origin, int toward, int fi, int fj) const;
    /// Same polynomial expressed in the frame (origin, toward).
    FacePoly reframe(int origin, int toward) const;

    FacePoly& operator+=(const FacePoly& o);
    FacePoly& operator*=(const Rational& s);
    friend bool operator==(const FacePoly& a, const FacePoly& b)
    {
        return a.kind_ == b.kind_ && a.k_ == b.k_ && a.c_ == b.c_;
    }

private:
    FaceKind kind_ = FaceKind::Quad;
    int k_ = 0;
    Vec c_;
};

/// Monomial coefficients m[i][j] of u^i v^j.
struct MonomialTable {
    FaceKind kind;
    int k;
    std::vector<Vec> m;
};

MonomialTable bernstein_to_monomial(const FacePoly& p);
/// Throws Error(DegreeStructure) when a nonzero monomial lies outside the face's degree structure.
FacePoly monomial_to_bernstein(const MonomialTable& t);
Rational eval(const MonomialTable& t, const Rational& u, const Rational& v);
MonomialTable d_du(const MonomialTable& t);
MonomialTable d_dv(const MonomialTable& t);

/// Jet at `origin` in the frame (origin, toward); toward defaults to the next corner.
Jet jet_at_corner(const FacePoly& p, int origin, int toward);
Jet jet_at_corner(const FacePoly& p, int corner);
/// Frame coefficients c00, c10, c01, c11 realizing a jet.
std::array<Rational, 4> jet_to_corner_coeffs(FaceKind kind, int k, const Jet& jet);
/// Multiplier of (c11-c10-c01+c00) in the cross derivative: k(k-1) or k^2.
Rational cross_factor(FaceKind kind, int k);

/// Edge data in the frame (origin, toward): g(u) = f(u,0), h(u) = f_v(u,0).
EdgeJet edge_restriction_jet(const FacePoly& p, int origin, int toward);
/// Edge data of slot s, parameterized from corner s (or s+1 when reversed).
EdgeJet edge_restriction_jet(const FacePoly& p, int slot, bool reversed);
/// Start/end corners of a slot under the reversed flag.
int slot_start(FaceKind kind, int slot, bool reversed);
int slot_end(FaceKind kind, int slot, bool reversed);

/// Frame coefficients of the two rows next to the edge {v=0} realizing (g,h);
/// deg g <= k and deg h <= k - fdelta. Entries are ((i,j), value) with j in {0,1}.
std::vector<std::pair<std::pair<int, int>, Rational>> edge_rows(FaceKind kind, int k, const UniPoly& g,
                                                                const UniPoly& h);

} // namespace g1

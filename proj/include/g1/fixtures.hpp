/** @file fixtures.hpp

    @brief Built-in surfaces with gluing data: two patches, the round corner,
    the pruned octahedron, planar triangulations with gluing induced by the
    geometry, and random meshes for property tests.
*/
#pragma once

#include "g1/gluing.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace g1 {

struct Fixture {
    std::string name;
    TopoSurface surface;
    Gluings gluings;
    /// Human-readable vertex names (e.g. "gamma", "A") to vertex indices.
    std::map<std::string, int> vertices;
};

/// Two faces glued along one edge: side 0 is slot 0 of f0, side 1 is the last
/// slot of f1, reversed, so both faces have corner 0 at the edge start.
Fixture two_patch(FaceKind k1, FaceKind k2, const EdgeGluing& data = {UniPoly{}, UniPoly{-1}, UniPoly{1}});

/// Three quads around an interior vertex gamma, data (u-1, -1, 1) on the three
/// interior edges. Vertices: gamma, delta0..2, eps0..2.
Fixture round_corner();

/// Octahedron with the two triangles on each side of the diagonal AC merged
/// into the quad ABCD: six triangles, one quad, symmetric gluing. Vertices
/// A..F; edges named by their endpoints.
Fixture pruned_octahedron();

/// A closed surface of six quads.
Fixture cube();

/// nx x ny quads glued into a torus, constant data (0, -1, 1).
Fixture quad_torus(int nx, int ny);

struct PlanarOptions {
    int nx = 3, ny = 3;
    std::uint32_t seed = 1;
    /// Alternating diagonals and straight grid lines; yields crossing vertices.
    bool union_jack = false;
    /// Random interior vertex displacement as a fraction of the grid step.
    bool perturb = true;
};

/// Triangulated planar grid; gluing data from the affine geometry of each
/// pair of triangles, so the G1 splines are the planar C1 splines.
Fixture planar_triangulation(const PlanarOptions& opt);

/// Random grid of quads and split quads (triangles) without gluing data.
TopoSurface random_grid_mesh(std::uint32_t seed, int nx, int ny);

/// Names accepted by fixture_by_name.
std::vector<std::string> fixture_names();

/// Errors: InputError for unknown names.
Fixture fixture_by_name(const std::string& name);

} // namespace g1

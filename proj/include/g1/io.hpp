/** @file io.hpp

    @brief JSON files for surfaces with gluing data and for bases.

    Surface: {"faces":[{"id","kind"}], "edges":[{"id","sides":[{"face","slot",
    "reversed"}], "gluing":{"a":[...],"b":[...],"c":[...]}}]} with polynomial
    coefficients ascending, as "p/q" strings. Boundary edges may be omitted.
    Basis: {"surface-hash","degree","count","records":[{"tag":{...},
    "faces":{face id: [coefficients]}}]}; faces where a function vanishes are omitted.
*/
#pragma once

#include "g1/gluing.hpp"
#include "g1/spline.hpp"

#include <string>

namespace g1 {

struct SurfaceFile {
    TopoSurface surface;
    Gluings gluings;
};

/// Errors: InputError with line and column for malformed JSON, plus every
/// error of build_surface.
SurfaceFile read_surface(const std::string& text);
std::string write_surface(const TopoSurface& s, const Gluings& g);

/// FNV-1a hash (hex) of the compact surface serialization.
std::string surface_hash(const TopoSurface& s, const Gluings& g);

/// Errors: InputError (malformed file, hash mismatch, unknown face).
SplineBasis read_basis(const std::string& text, const TopoSurface& s, const Gluings& g);
std::string write_basis(const TopoSurface& s, const Gluings& g, const SplineBasis& b);

/// Whole file as a string. Errors: InputError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace g1

/** @file surface.hpp

    @brief Topological surfaces built from triangles and quads.

    Faces are glued along edges. Each edge side is (face, slot, reversed); the
    shared edge parameter u runs from the start corner of side 0 (slot start,
    or slot end when reversed) to its end, and the reversed flags make the
    start corners of both sides the same point. Side 0 plays the sigma_1 role
    (the edge is {v=0} of its edge frame) and side 1 the sigma_2 role.

    Around a vertex the fan lists faces sigma_0..sigma_{F-1} with edges
    tau_i between sigma_{i-1} and sigma_i. Face sigma_i is seen in the corner
    frame with u along tau_i and v along tau_{i+1}.
*/
#pragma once

#include "g1/facepoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace g1 {

struct FaceSpec {
    std::string id;
    FaceKind kind;
};

struct Side {
    int face = -1;
    int slot = -1;
    bool reversed = false;
    friend bool operator==(const Side&, const Side&) = default;
};

struct EdgeSpec {
    std::string id;
    std::vector<Side> sides;
};

struct Edge {
    std::string id;
    std::vector<Side> sides;
    /// Created for a slot that the input left unlisted.
    bool implicit = false;
    bool boundary() const { return sides.size() == 1; }
};

/// One face occurrence in a vertex fan, with its corner frame.
struct FanEntry {
    int face;
    int corner;
    int slot_u, slot_v;
    int corner_u, corner_v;
};

/// One edge occurrence in a vertex fan.
struct FanEdge {
    int edge;
    /// True when the vertex is the start (u=0) of the edge parameter.
    bool at_start;
    /// Side index whose face is fan entry i (tau_i is its u-axis), or -1.
    int side_u;
    /// Side index whose face is fan entry i-1 (tau_i is its v-axis), or -1.
    int side_v;
};

struct VertexClass {
    std::string id;
    std::vector<std::pair<int, int>> incidences;
    bool interior = false;
    std::vector<FanEntry> fan;
    /// Interior: F entries, edges[i] = tau_i. Boundary: F+1 entries with
    /// boundary edges first and last.
    std::vector<FanEdge> edges;
    int face_count() const { return static_cast<int>(fan.size()); }
};

struct SurfaceCounts {
    int quads = 0, triangles = 0;
    int edges = 0, vertices = 0, crossing_vertices = 0;
    int boundary_edges = 0, boundary_vertices = 0;
    int interior_edges() const { return edges - boundary_edges; }
    int interior_vertices() const { return vertices - boundary_vertices; }
};

class TopoSurface {
public:
    const std::vector<FaceSpec>& faces() const { return faces_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<VertexClass>& vertices() const { return vertices_; }
    const FaceSpec& face(int f) const { return faces_[f]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const VertexClass& vertex(int v) const { return vertices_[v]; }

    int face_index(const std::string& id) const;
    int edge_index(const std::string& id) const;
    int vertex_index(const std::string& id) const;
    /// Edge and side index owning a slot.
    std::pair<int, int> slot_edge(int face, int slot) const { return slot_edge_[face][slot]; }
    int vertex_of(int face, int corner) const { return corner_vertex_[face][corner]; }
    /// Vertex at the start (end=false) or end of the edge parameter.
    int edge_vertex(int e, bool end) const;
    int start_corner(int e, int side) const;
    int end_corner(int e, int side) const;

    /// Counts; crossing[e] holds the crossing flags at the start and end of edge e.
    SurfaceCounts counts(const std::vector<std::array<bool, 2>>& crossing) const;
    /// Counts that do not depend on gluing data (crossing_vertices left 0).
    SurfaceCounts counts() const;

    friend TopoSurface build_surface(const std::vector<FaceSpec>&, const std::vector<EdgeSpec>&);

private:
    std::vector<FaceSpec> faces_;
    std::vector<Edge> edges_;
    std::vector<VertexClass> vertices_;
    std::vector<std::vector<std::pair<int, int>>> slot_edge_;
    std::vector<std::vector<int>> corner_vertex_;
};

/// Validates the input, adds implicit boundary edges for unlisted slots
/// (id "<face>:<slot>"), computes vertex classes and fans.
/// Errors: DanglingReference, SlotReuse, SelfGluedEdge, NonManifoldVertex, InputError.
TopoSurface build_surface(const std::vector<FaceSpec>& faces, const std::vector<EdgeSpec>& edges);

/// Convenience builder from polygons given by vertex labels listed counterclockwise.
/// Edges are matched by label pairs and parameterized from the smaller label.
struct Polygon {
    std::string id;
    FaceKind kind;
    std::vector<int> labels;
};
struct PolygonSurface {
    std::vector<FaceSpec> faces;
    std::vector<EdgeSpec> edges;
    /// Label of the start and end of each listed edge.
    std::vector<std::array<int, 2>> edge_labels;
};
PolygonSurface surface_from_polygons(const std::vector<Polygon>& polys);

} // namespace g1

/** @file surface.cpp

    @brief Surface construction: validation, vertex classes, fans.
*/
#include "g1/surface.hpp"

#include "g1/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace g1 {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct WalkState {
    int face, corner, slot_in;
    bool operator==(const WalkState&) const = default;
};

} // namespace

int TopoSurface::face_index(const std::string& id) const
{
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (faces_[f].id == id)
            return static_cast<int>(f);
    throw Error(ErrorKind::DanglingReference, "unknown face '" + id + "'");
}

int TopoSurface::edge_index(const std::string& id) const
{
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].id == id)
            return static_cast<int>(e);
    throw Error(ErrorKind::DanglingReference, "unknown edge '" + id + "'");
}

int TopoSurface::vertex_index(const std::string& id) const
{
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (vertices_[v].id == id)
            return static_cast<int>(v);
    throw Error(ErrorKind::DanglingReference, "unknown vertex '" + id + "'");
}

int TopoSurface::start_corner(int e, int side) const
{
    const Side& s = edges_[e].sides[side];
    return slot_start(faces_[s.face].kind, s.slot, s.reversed);
}

int TopoSurface::end_corner(int e, int side) const
{
    const Side& s = edges_[e].sides[side];
    return slot_end(faces_[s.face].kind, s.slot, s.reversed);
}

int TopoSurface::edge_vertex(int e, bool end) const
{
    const Side& s = edges_[e].sides[0];
    return corner_vertex_[s.face][end ? end_corner(e, 0) : start_corner(e, 0)];
}

SurfaceCounts TopoSurface::counts() const
{
    SurfaceCounts c;
    for (const auto& f : faces_)
        (f.kind == FaceKind::Quad ? c.quads : c.triangles)++;
    c.edges = static_cast<int>(edges_.size());
    c.vertices = static_cast<int>(vertices_.size());
    for (const auto& e : edges_)
        c.boundary_edges += e.boundary() ? 1 : 0;
    for (const auto& v : vertices_)
        c.boundary_vertices += v.interior ? 0 : 1;
    return c;
}

SurfaceCounts TopoSurface::counts(const std::vector<std::array<bool, 2>>& crossing) const
{
    SurfaceCounts c = counts();
    for (const auto& v : vertices_) {
        if (!v.interior)
            continue;
        bool all = !v.edges.empty();
        for (const auto& fe : v.edges)
            all = all && crossing[fe.edge][fe.at_start ? 0 : 1];
        c.crossing_vertices += all ? 1 : 0;
    }
    return c;
}

TopoSurface build_surface(const std::vector<FaceSpec>& faces, const std::vector<EdgeSpec>& edges)
{
    TopoSurface s;
    s.faces_ = faces;
    std::set<std::string> ids;
    for (const auto& f : faces)
        if (!ids.insert(f.id).second)
            throw Error(ErrorKind::InputError, "duplicate face id '" + f.id + "'");
    const int nf = static_cast<int>(faces.size());
    s.slot_edge_.resize(nf);
    for (int f = 0; f < nf; ++f)
        s.slot_edge_[f].assign(corner_count(faces[f].kind), {-1, -1});

    std::set<std::string> edge_ids;
    for (const auto& es : edges) {
        if (!edge_ids.insert(es.id).second)
            throw Error(ErrorKind::InputError, "duplicate edge id '" + es.id + "'");
        if (es.sides.empty() || es.sides.size() > 2)
            throw Error(ErrorKind::InputError, "edge '" + es.id + "' must have one or two sides");
        for (const auto& sd : es.sides) {
            if (sd.face < 0 || sd.face >= nf)
                throw Error(ErrorKind::DanglingReference, "edge '" + es.id + "' references a missing face");
            if (sd.slot < 0 || sd.slot >= corner_count(faces[sd.face].kind))
                throw Error(ErrorKind::DanglingReference,
                            "edge '" + es.id + "' references slot " + std::to_string(sd.slot) + " of face '" +
                                faces[sd.face].id + "'");
        }
        if (es.sides.size() == 2 && es.sides[0].face == es.sides[1].face)
            throw Error(ErrorKind::SelfGluedEdge, "edge '" + es.id + "' glues face '" +
                                                      faces[es.sides[0].face].id + "' to itself");
        const int e = static_cast<int>(s.edges_.size());
        for (std::size_t k = 0; k < es.sides.size(); ++k) {
            auto& slot = s.slot_edge_[es.sides[k].face][es.sides[k].slot];
            if (slot.first >= 0)
                throw Error(ErrorKind::SlotReuse, "slot " + std::to_string(es.sides[k].slot) + " of face '" +
                                                      faces[es.sides[k].face].id + "' used twice");
            slot = {e, static_cast<int>(k)};
        }
        s.edges_.push_back(Edge{es.id, es.sides, false});
    }
    for (int f = 0; f < nf; ++f)
        for (int k = 0; k < corner_count(faces[f].kind); ++k)
            if (s.slot_edge_[f][k].first < 0) {
                s.slot_edge_[f][k] = {static_cast<int>(s.edges_.size()), 0};
                s.edges_.push_back(Edge{faces[f].id + ":" + std::to_string(k), {Side{f, k, false}}, true});
            }

    // Vertex classes by union-find over face corners.
    std::vector<int> offset(nf + 1, 0);
    for (int f = 0; f < nf; ++f)
        offset[f + 1] = offset[f] + corner_count(faces[f].kind);
    UnionFind uf(offset[nf]);
    for (int e = 0; e < static_cast<int>(s.edges_.size()); ++e) {
        const Edge& ed = s.edges_[e];
        if (ed.boundary())
            continue;
        const Side& a = ed.sides[0];
        const Side& b = ed.sides[1];
        const FaceKind ka = faces[a.face].kind, kb = faces[b.face].kind;
        uf.unite(offset[a.face] + slot_start(ka, a.slot, a.reversed), offset[b.face] + slot_start(kb, b.slot, b.reversed));
        uf.unite(offset[a.face] + slot_end(ka, a.slot, a.reversed), offset[b.face] + slot_end(kb, b.slot, b.reversed));
    }
    std::map<int, int> root_to_vertex;
    s.corner_vertex_.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const int n = corner_count(faces[f].kind);
        s.corner_vertex_[f].resize(n);
        for (int c = 0; c < n; ++c) {
            const int r = uf.find(offset[f] + c);
            auto [it, fresh] = root_to_vertex.emplace(r, static_cast<int>(s.vertices_.size()));
            if (fresh) {
                s.vertices_.emplace_back();
                s.vertices_.back().id = "v" + std::to_string(it->second);
            }
            s.corner_vertex_[f][c] = it->second;
            s.vertices_[it->second].incidences.emplace_back(f, c);
        }
    }

    // Fans: walk across edges from face corner to face corner.
    auto other_slot = [&](int f, int c, int slot) {
        const int n = corner_count(faces[f].kind);
        return slot == c ? (c + n - 1) % n : c;
    };
    auto slot_other_end = [&](int f, int slot, int c) {
        const int n = corner_count(faces[f].kind);
        return slot == c ? (c + 1) % n : slot;
    };
    // Returns the next state across the out-slot, or nullopt at a boundary.
    auto step = [&](const WalkState& w) -> std::optional<WalkState> {
        const int out = other_slot(w.face, w.corner, w.slot_in);
        const auto [e, side] = s.slot_edge_[w.face][out];
        const Edge& ed = s.edges_[e];
        if (ed.boundary())
            return std::nullopt;
        const int at_start = s.start_corner(e, side) == w.corner;
        const int other = 1 - side;
        const int c2 = at_start ? s.start_corner(e, other) : s.end_corner(e, other);
        return WalkState{ed.sides[other].face, c2, ed.sides[other].slot};
    };
    auto fan_edge = [&](int face, int slot, int corner, bool is_u) {
        const auto [e, side] = s.slot_edge_[face][slot];
        FanEdge fe{e, s.start_corner(e, side) == corner, -1, -1};
        (is_u ? fe.side_u : fe.side_v) = side;
        return fe;
    };

    for (auto& vc : s.vertices_) {
        const auto [f0, c0] = vc.incidences.front();
        const std::size_t limit = vc.incidences.size() + 1;
        WalkState start{f0, c0, c0};
        // Walk backwards (entering through the other slot) to find a chain start.
        WalkState w{f0, c0, other_slot(f0, c0, c0)};
        bool closed = false;
        for (std::size_t it = 0;; ++it) {
            auto nx = step(w);
            if (!nx)
                break;
            if (*nx == WalkState{f0, c0, other_slot(f0, c0, c0)}) {
                closed = true;
                break;
            }
            if (it > limit)
                throw Error(ErrorKind::Internal, "fan walk did not terminate");
            w = *nx;
        }
        if (!closed)
            start = WalkState{w.face, w.corner, other_slot(w.face, w.corner, w.slot_in)};
        vc.interior = closed;
        w = start;
        for (std::size_t it = 0;; ++it) {
            FanEntry fe;
            fe.face = w.face;
            fe.corner = w.corner;
            fe.slot_u = w.slot_in;
            fe.slot_v = other_slot(w.face, w.corner, w.slot_in);
            fe.corner_u = slot_other_end(w.face, fe.slot_u, w.corner);
            fe.corner_v = slot_other_end(w.face, fe.slot_v, w.corner);
            vc.fan.push_back(fe);
            auto nx = step(w);
            if (!nx || *nx == start)
                break;
            if (it > limit)
                throw Error(ErrorKind::Internal, "fan walk did not terminate");
            w = *nx;
        }
        if (vc.fan.size() != vc.incidences.size())
            throw Error(ErrorKind::NonManifoldVertex,
                        "vertex " + vc.id + " has " + std::to_string(vc.incidences.size()) +
                            " face corners but its fan reaches " + std::to_string(vc.fan.size()));
        const int F = static_cast<int>(vc.fan.size());
        for (int i = 0; i < F; ++i) {
            const FanEntry& en = vc.fan[i];
            FanEdge fe = fan_edge(en.face, en.slot_u, en.corner, true);
            if (i > 0 || closed) {
                const FanEntry& prev = vc.fan[(i + F - 1) % F];
                fe.side_v = s.slot_edge_[prev.face][prev.slot_v].second;
            }
            vc.edges.push_back(fe);
        }
        if (!closed) {
            const FanEntry& last = vc.fan.back();
            vc.edges.push_back(fan_edge(last.face, last.slot_v, last.corner, false));
        }
    }
    return s;
}

PolygonSurface surface_from_polygons(const std::vector<Polygon>& polys)
{
    PolygonSurface out;
    std::map<std::pair<int, int>, int> by_pair;
    for (std::size_t f = 0; f < polys.size(); ++f) {
        const Polygon& p = polys[f];
        if (static_cast<int>(p.labels.size()) != corner_count(p.kind))
            throw Error(ErrorKind::InputError, "polygon '" + p.id + "' has the wrong number of labels");
        out.faces.push_back({p.id, p.kind});
        const int n = corner_count(p.kind);
        for (int s = 0; s < n; ++s) {
            const int a = p.labels[s], b = p.labels[(s + 1) % n];
            const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            const Side side{static_cast<int>(f), s, a > b};
            auto it = by_pair.find(key);
            if (it == by_pair.end()) {
                by_pair.emplace(key, static_cast<int>(out.edges.size()));
                out.edges.push_back({std::to_string(key.first) + "-" + std::to_string(key.second), {side}});
                out.edge_labels.push_back({key.first, key.second});
            } else {
                auto& es = out.edges[it->second];
                if (es.sides.size() >= 2)
                    throw Error(ErrorKind::NonManifoldVertex, "edge " + es.id + " is shared by more than two faces");
                es.sides.push_back(side);
            }
        }
    }
    return out;
}

} // namespace g1

#include "g1/fixtures.hpp"

#include <random>

namespace g1 {

namespace {

using Point = std::array<Rational, 2>;

Rational det(const Point& x, const Point& y) { return x[0] * y[1] - x[1] * y[0]; }
Point sub(const Point& x, const Point& y) { return {x[0] - y[0], x[1] - y[1]}; }

struct LabeledSurface {
    std::vector<Polygon> polys;
    TopoSurface surface;
};

LabeledSurface from_polygons(std::vector<Polygon> polys, const std::vector<std::string>& names = {})
{
    PolygonSurface ps = surface_from_polygons(polys);
    if (!names.empty())
        for (std::size_t e = 0; e < ps.edges.size(); ++e)
            ps.edges[e].id = names[ps.edge_labels[e][0]] + names[ps.edge_labels[e][1]];
    return {std::move(polys), build_surface(ps.faces, ps.edges)};
}

std::map<std::string, int> name_vertices(const LabeledSurface& ls, const std::vector<std::string>& names)
{
    std::map<std::string, int> out;
    for (std::size_t f = 0; f < ls.polys.size(); ++f)
        for (std::size_t c = 0; c < ls.polys[f].labels.size(); ++c)
            out[names[ls.polys[f].labels[c]]] = ls.surface.vertex_of(static_cast<int>(f), static_cast<int>(c));
    return out;
}

} // namespace

Fixture two_patch(FaceKind k1, FaceKind k2, const EdgeGluing& data)
{
    Fixture fx;
    fx.name = std::string("two-patch-") + (k1 == FaceKind::Quad ? "q" : "t") + (k2 == FaceKind::Quad ? "q" : "t");
    fx.surface = build_surface({{"f0", k1}, {"f1", k2}}, {{"e", {{0, 0, false}, {1, corner_count(k2) - 1, true}}}});
    fx.gluings.resize(fx.surface.edges().size());
    fx.gluings[fx.surface.edge_index("e")] = normalize(data);
    fx.vertices["start"] = fx.surface.vertex_of(0, 0);
    fx.vertices["end"] = fx.surface.vertex_of(0, 1);
    return fx;
}

Fixture round_corner()
{
    Fixture fx;
    fx.name = "round-corner";
    std::vector<FaceSpec> faces;
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < 3; ++i) {
        faces.push_back({"s" + std::to_string(i), FaceKind::Quad});
        edges.push_back({"t" + std::to_string(i), {{i, 0, false}, {(i + 2) % 3, 3, true}}});
    }
    fx.surface = build_surface(faces, edges);
    fx.gluings.resize(fx.surface.edges().size());
    for (int i = 0; i < 3; ++i)
        fx.gluings[fx.surface.edge_index("t" + std::to_string(i))] = normalize({UniPoly{-1, 1}, UniPoly{-1}, UniPoly{1}});
    fx.vertices["gamma"] = fx.surface.vertex_of(0, 0);
    for (int i = 0; i < 3; ++i) {
        fx.vertices["delta" + std::to_string(i)] = fx.surface.vertex_of(i, 1);
        fx.vertices["eps" + std::to_string(i)] = fx.surface.vertex_of(i, 2);
    }
    return fx;
}

Fixture pruned_octahedron()
{
    const std::vector<std::string> names{"A", "B", "C", "D", "E", "F"};
    enum { A, B, C, D, E, F };
    const FaceKind T = FaceKind::Triangle;
    std::vector<Polygon> polys{{"AEF", T, {A, E, F}}, {"CEF", T, {C, E, F}}, {"ABE", T, {A, B, E}},
                               {"BCE", T, {B, C, E}}, {"ADF", T, {A, D, F}}, {"CDF", T, {C, D, F}},
                               {"ABCD", FaceKind::Quad, {A, B, C, D}}};
    const LabeledSurface ls = from_polygons(polys, names);
    Fixture fx;
    fx.name = "pruned-octahedron";
    fx.surface = ls.surface;
    fx.gluings = generate_symmetric_gluing(fx.surface);
    fx.vertices = name_vertices(ls, names);
    return fx;
}

Fixture cube()
{
    const FaceKind Q = FaceKind::Quad;
    std::vector<Polygon> polys{{"bottom", Q, {0, 3, 2, 1}}, {"top", Q, {4, 5, 6, 7}}, {"front", Q, {0, 1, 5, 4}},
                               {"right", Q, {1, 2, 6, 5}},  {"back", Q, {2, 3, 7, 6}}, {"left", Q, {3, 0, 4, 7}}};
    std::vector<std::string> names;
    for (int i = 0; i < 8; ++i)
        names.push_back("v" + std::to_string(i));
    const LabeledSurface ls = from_polygons(polys, names);
    Fixture fx;
    fx.name = "cube";
    fx.surface = ls.surface;
    fx.gluings = generate_symmetric_gluing(fx.surface);
    fx.vertices = name_vertices(ls, names);
    return fx;
}

Fixture quad_torus(int nx, int ny)
{
    if (nx < 3 || ny < 3)
        throw Error(ErrorKind::InputError, "torus grids need at least 3 x 3 quads");
    auto label = [&](int i, int j) { return ((i % nx) + nx) % nx + nx * (((j % ny) + ny) % ny); };
    std::vector<Polygon> polys;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            polys.push_back({"q" + std::to_string(i) + "_" + std::to_string(j), FaceKind::Quad,
                             {label(i, j), label(i + 1, j), label(i + 1, j + 1), label(i, j + 1)}});
    const LabeledSurface ls = from_polygons(polys);
    Fixture fx;
    fx.name = "torus-" + std::to_string(nx) + "x" + std::to_string(ny);
    fx.surface = ls.surface;
    fx.gluings.resize(fx.surface.edges().size());
    for (int e = 0; e < static_cast<int>(fx.surface.edges().size()); ++e)
        fx.gluings[e] = normalize({UniPoly{}, UniPoly{-1}, UniPoly{1}});
    return fx;
}

Fixture planar_triangulation(const PlanarOptions& opt)
{
    std::mt19937 rng(opt.seed);
    const int nx = opt.nx, ny = opt.ny;
    auto label = [&](int i, int j) { return i + (nx + 1) * j; };
    std::vector<Point> pts;
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i) {
            Point p{Rational(i), Rational(j)};
            const bool interior = i > 0 && j > 0 && i < nx && j < ny;
            if (opt.perturb && interior) {
                p[0] += ratio(static_cast<long>(rng() % 5) - 2, 10);
                p[1] += ratio(static_cast<long>(rng() % 5) - 2, 10);
            }
            pts.push_back(p);
        }
    std::vector<Polygon> polys;
    const FaceKind T = FaceKind::Triangle;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int a = label(i, j), b = label(i + 1, j), c = label(i + 1, j + 1), d = label(i, j + 1);
            const bool main_diagonal = opt.union_jack ? (i + j) % 2 == 0 : rng() % 2 == 0;
            const std::string id = "c" + std::to_string(i) + "_" + std::to_string(j);
            if (main_diagonal) {
                polys.push_back({id + "a", T, {a, b, c}});
                polys.push_back({id + "b", T, {a, c, d}});
            } else {
                polys.push_back({id + "a", T, {a, b, d}});
                polys.push_back({id + "b", T, {b, c, d}});
            }
        }
    const LabeledSurface ls = from_polygons(polys);
    Fixture fx;
    fx.name = opt.union_jack ? "planar-union-jack" : "planar";
    fx.surface = ls.surface;
    const TopoSurface& s = fx.surface;
    fx.gluings.resize(s.edges().size());
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
        if (s.edge(e).boundary())
            continue;
        std::array<Point, 2> third;
        Point p0, p1;
        for (int side = 0; side < 2; ++side) {
            const auto& labels = ls.polys[s.edge(e).sides[side].face].labels;
            const int sc = s.start_corner(e, side), ec = s.end_corner(e, side);
            p0 = pts[labels[sc]];
            p1 = pts[labels[ec]];
            third[side] = pts[labels[3 - sc - ec]];
        }
        const Point ev = sub(p1, p0), d1 = sub(third[0], p0), d2 = sub(third[1], p0);
        const Rational alpha = det(d1, d2) / det(ev, d2), beta = det(ev, d1) / det(ev, d2);
        fx.gluings[e] = normalize({UniPoly{alpha}, UniPoly{beta}, UniPoly{1}});
    }
    return fx;
}

TopoSurface random_grid_mesh(std::uint32_t seed, int nx, int ny)
{
    std::mt19937 rng(seed);
    auto label = [&](int i, int j) { return i + (nx + 1) * j; };
    std::vector<Polygon> polys;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int a = label(i, j), b = label(i + 1, j), c = label(i + 1, j + 1), d = label(i, j + 1);
            const std::string id = "c" + std::to_string(i) + "_" + std::to_string(j);
            switch (rng() % 3) {
            case 0:
                polys.push_back({id, FaceKind::Quad, {a, b, c, d}});
                break;
            case 1:
                polys.push_back({id + "a", FaceKind::Triangle, {a, b, c}});
                polys.push_back({id + "b", FaceKind::Triangle, {a, c, d}});
                break;
            default:
                polys.push_back({id + "a", FaceKind::Triangle, {a, b, d}});
                polys.push_back({id + "b", FaceKind::Triangle, {b, c, d}});
                break;
            }
        }
    return from_polygons(polys).surface;
}

std::vector<std::string> fixture_names()
{
    return {"two-patch-qq", "two-patch-qt", "two-patch-tt", "round-corner", "pruned-octahedron",
            "cube",         "torus-3x3",    "planar-3x3",   "planar-union-jack"};
}

Fixture fixture_by_name(const std::string& name)
{
    if (name == "two-patch-qq")
        return two_patch(FaceKind::Quad, FaceKind::Quad);
    if (name == "two-patch-qt")
        return two_patch(FaceKind::Quad, FaceKind::Triangle);
    if (name == "two-patch-tt")
        return two_patch(FaceKind::Triangle, FaceKind::Triangle);
    if (name == "round-corner")
        return round_corner();
    if (name == "pruned-octahedron")
        return pruned_octahedron();
    if (name == "cube")
        return cube();
    if (name == "torus-3x3")
        return quad_torus(3, 3);
    if (name == "planar-3x3")
        return planar_triangulation({});
    if (name == "planar-union-jack") {
        PlanarOptions opt;
        opt.nx = opt.ny = 4;
        opt.union_jack = true;
        opt.perturb = false;
        return planar_triangulation(opt);
    }
    throw Error(ErrorKind::InputError, "unknown fixture '" + name + "'");
}

} // namespace g1

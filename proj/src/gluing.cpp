/** @file gluing.cpp

    @brief Gluing data transforms, vertex compatibility, topology checks and
    the symmetric gluing generator.
*/
#include "g1/gluing.hpp"

#include "g1/sturm.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace g1 {

namespace {

using Mat2 = std::array<Rational, 4>; // row-major

Mat2 mul(const Mat2& x, const Mat2& y)
{
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

Mat2 jet_matrix(const VertexJet& j) { return {0, 1, j.b0, j.a0}; }

std::string mat_str(const Mat2& m)
{
    return "[[" + to_string(m[0]) + "," + to_string(m[1]) + "],[" + to_string(m[2]) + "," + to_string(m[3]) + "]]";
}

int face_delta(const TopoSurface& s, int e, int side)
{
    return fdelta(s.face(s.edge(e).sides[side].face).kind);
}

} // namespace

EdgeGluing normalize(EdgeGluing g)
{
    remove_content({&g.a, &g.b, &g.c});
    Rational lead = 0;
    for (const auto& x : g.c.coeffs())
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead < 0) {
        g.a *= -1;
        g.b *= -1;
        g.c *= -1;
    }
    return g;
}

EdgeGluing swap_roles(const EdgeGluing& g) { return normalize({-g.a, g.c, g.b}); }

EdgeGluing reroot(const EdgeGluing& g, int f1, int f2)
{
    const UniPoly a = g.c * Rational(f1) - g.b * Rational(f2) - g.a;
    return normalize({a.reflect(), g.b.reflect(), g.c.reflect()});
}

EdgeGluing fan_gluing(const TopoSurface& s, const Gluings& g, int v, int i)
{
    const FanEdge& fe = s.vertex(v).edges[i];
    if (s.edge(fe.edge).boundary() || !g[fe.edge])
        throw Error(ErrorKind::MissingGluing, "edge '" + s.edge(fe.edge).id + "' has no gluing data");
    EdgeGluing d = *g[fe.edge];
    if (!fe.at_start)
        d = reroot(d, face_delta(s, fe.edge, 0), face_delta(s, fe.edge, 1));
    if (fe.side_u == 1)
        d = swap_roles(d);
    return d;
}

std::vector<VertexJet> vertex_jets(const TopoSurface& s, const Gluings& g, int v)
{
    const VertexClass& vc = s.vertex(v);
    std::vector<VertexJet> out;
    for (int i = 0; i < static_cast<int>(vc.edges.size()); ++i) {
        VertexJet j;
        j.edge = vc.edges[i].edge;
        if (s.edge(j.edge).boundary()) {
            j.boundary = true;
            out.push_back(j);
            continue;
        }
        const EdgeGluing d = fan_gluing(s, g, v, i);
        const Rational c0 = d.c(0), dc0 = d.c.derivative()(0);
        if (c0 == 0 || d.b(0) == 0)
            throw Error(ErrorKind::ZeroDenominator,
                        "edge '" + s.edge(j.edge).id + "' at vertex " + vc.id + ": b(0) or c(0) vanishes");
        j.a0 = d.a(0) / c0;
        j.b0 = d.b(0) / c0;
        j.da0 = (d.a.derivative()(0) * c0 - d.a(0) * dc0) / (c0 * c0);
        j.db0 = (d.b.derivative()(0) * c0 - d.b(0) * dc0) / (c0 * c0);
        j.crossing = j.a0 == 0;
        out.push_back(j);
    }
    return out;
}

std::vector<std::array<bool, 2>> crossing_flags(const TopoSurface& s, const Gluings& g)
{
    std::vector<std::array<bool, 2>> out(s.edges().size(), {false, false});
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
        if (s.edge(e).boundary() || !g[e])
            continue;
        const EdgeGluing& d = *g[e];
        out[e][0] = d.a(0) == 0;
        const EdgeGluing r = reroot(d, face_delta(s, e, 0), face_delta(s, e, 1));
        out[e][1] = r.a(0) == 0;
    }
    return out;
}

bool Report::ok() const
{
    return std::none_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.status == Status::Fail; });
}

bool Report::has(ErrorKind kind) const
{
    return std::any_of(entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.error == kind; });
}

std::string Report::text() const
{
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.status == Status::Pass ? "PASS" : e.status == Status::Warn ? "WARN" : "FAIL") << " " << e.where
           << ": " << e.what;
        if (e.error)
            os << " [" << to_string(*e.error) << "]";
        os << "\n";
    }
    return os.str();
}

std::array<Rational, 2> condition2_residuals(const std::vector<VertexJet>& j)
{
    std::array<Rational, 2> res;
    for (int free = 0; free < 2; ++free) {
        Rational q[5];
        q[0] = free == 0 ? 1 : 0;
        q[1] = free == 1 ? 1 : 0;
        for (int i = 1; i <= 3; ++i)
            q[i + 1] = j[i].a0 * q[i] + j[i].b0 * q[i - 1];
        Rational s[4];
        s[0] = 0;
        for (int i = 1; i <= 3; ++i)
            s[i] = j[i].b0 * s[i - 1] + j[i].da0 * q[i] + j[i].db0 * q[i - 1];
        res[free] = j[0].b0 * s[3] + j[0].da0 * q[0] + j[0].db0 * q[3] - s[0];
    }
    return res;
}

Report check_vertex_compatibility(const TopoSurface& s, const std::vector<VertexJet>& jets, int v)
{
    Report r;
    const VertexClass& vc = s.vertex(v);
    const std::string where = "vertex " + vc.id;
    if (!vc.interior) {
        r.entries.push_back({Status::Pass, where, "boundary vertex, no cyclic condition", std::nullopt});
        return r;
    }
    Mat2 p = {1, 0, 0, 1};
    for (const auto& j : jets)
        p = mul(jet_matrix(j), p);
    if (p == Mat2{1, 0, 0, 1})
        r.entries.push_back({Status::Pass, where, "product of jet matrices is the identity", std::nullopt});
    else
        r.entries.push_back({Status::Fail, where, "product of jet matrices is " + mat_str(p) + ", expected identity",
                             ErrorKind::Condition1Violated});

    const bool all_crossing =
        !jets.empty() && std::all_of(jets.begin(), jets.end(), [](const VertexJet& j) { return j.crossing; });
    if (!all_crossing)
        return r;
    if (jets.size() != 4) {
        r.entries.push_back({Status::Fail, where,
                             "crossing vertex with " + std::to_string(jets.size()) + " edges (4 required)",
                             ErrorKind::CrossingVertexDegree});
        return r;
    }
    const Rational b13 = jets[0].b0 * jets[2].b0, b24 = jets[1].b0 * jets[3].b0;
    if (b13 != 1 || b24 != 1)
        r.entries.push_back({Status::Fail, where,
                             "opposite b products are " + to_string(b13) + " and " + to_string(b24) + ", expected 1",
                             ErrorKind::Condition1Violated});
    const auto res = condition2_residuals(jets);
    if (res[0] == 0 && res[1] == 0)
        r.entries.push_back({Status::Pass, where, "crossing vertex derivative condition holds", std::nullopt});
    else
        r.entries.push_back({Status::Fail, where,
                             "crossing vertex derivative residuals " + to_string(res[0]) + ", " + to_string(res[1]),
                             ErrorKind::Condition2Violated});
    return r;
}

Report check_topology(const TopoSurface& s, const Gluings& g, bool strict)
{
    Report r;
    const Status soft = strict ? Status::Fail : Status::Warn;
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
        if (s.edge(e).boundary() || !g[e])
            continue;
        const EdgeGluing& d = *g[e];
        const std::string where = "edge " + s.edge(e).id;
        bool roots = false;
        for (const auto& [name, poly] : {std::pair<const char*, const UniPoly*>{"b", &d.b}, {"c", &d.c}}) {
            if (poly->is_zero() || count_roots(*poly, 0, 1) > 0) {
                r.entries.push_back({soft, where, std::string(name) + " = " + poly->str() + " vanishes on [0,1]",
                                     ErrorKind::TopologyViolated});
                roots = true;
            }
        }
        if (roots)
            continue;
        if (sgn(d.b(0)) * sgn(d.c(0)) > 0)
            r.entries.push_back({soft, where, "b/c > 0 on [0,1]: faces pasted at a sharp edge",
                                 ErrorKind::TopologyViolated});
        else
            r.entries.push_back({Status::Pass, where, "b/c < 0 on [0,1]", std::nullopt});
    }
    for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v) {
        const VertexClass& vc = s.vertex(v);
        if (!vc.interior)
            continue;
        std::vector<VertexJet> jets;
        try {
            jets = vertex_jets(s, g, v);
        } catch (const Error&) {
            continue; // reported by validate
        }
        const int F = static_cast<int>(jets.size());
        bool good = true;
        for (int j = 1; j <= F - 2 && good; ++j) {
            Mat2 p = {1, 0, 0, 1};
            for (int k = j; k <= F - 2; ++k) {
                p = mul(jet_matrix(jets[k]), p);
                if (p[2] >= 0 && p[3] >= 0) {
                    r.entries.push_back({soft, "vertex " + vc.id,
                                         "fan sectors overlap: partial product " + std::to_string(j + 1) + ".." +
                                             std::to_string(k + 1) + " = " + mat_str(p),
                                         ErrorKind::TopologyViolated});
                    good = false;
                    break;
                }
            }
        }
        if (good)
            r.entries.push_back({Status::Pass, "vertex " + vc.id, "fan criterion holds", std::nullopt});
    }
    return r;
}

Report validate(const TopoSurface& s, const Gluings& g, bool strict)
{
    Report r;
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e)
        if (!s.edge(e).boundary() && (e >= static_cast<int>(g.size()) || !g[e]))
            r.entries.push_back({Status::Fail, "edge " + s.edge(e).id, "interior edge without gluing data",
                                 ErrorKind::MissingGluing});
    if (!r.ok())
        return r;
    for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v) {
        try {
            r.append(check_vertex_compatibility(s, vertex_jets(s, g, v), v));
        } catch (const Error& e) {
            r.entries.push_back({Status::Fail, "vertex " + s.vertex(v).id, e.what(), e.kind()});
        }
    }
    r.append(check_topology(s, g, strict));
    return r;
}

namespace {

using Ray = std::array<long, 2>;

long det(const Ray& x, const Ray& y) { return x[0] * y[1] - x[1] * y[0]; }

/// Fan coefficients of consecutive unimodular rays; cyclic or open chain.
std::vector<int> ray_coefficients(const std::vector<Ray>& u, bool cyclic)
{
    const int n = static_cast<int>(u.size());
    std::vector<int> a;
    if (cyclic) {
        for (int i = 0; i < n; ++i)
            a.push_back(static_cast<int>(det(u[(i + n - 1) % n], u[(i + 1) % n])));
    } else {
        for (int i = 1; i + 1 < n; ++i)
            a.push_back(static_cast<int>(det(u[i - 1], u[i + 1])));
    }
    return a;
}

/// Inserts the sum of two consecutive rays where the coefficients stay most uniform.
std::vector<Ray> blow_up(const std::vector<Ray>& u, bool cyclic)
{
    const int n = static_cast<int>(u.size());
    std::vector<Ray> best;
    std::array<long, 2> best_score{0, 0};
    for (int i = 0; i < (cyclic ? n : n - 1); ++i) {
        std::vector<Ray> cand = u;
        const Ray& x = u[i];
        const Ray& y = u[(i + 1) % n];
        cand.insert(cand.begin() + i + 1, Ray{x[0] + y[0], x[1] + y[1]});
        const auto a = ray_coefficients(cand, cyclic);
        const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
        long sq = 0;
        for (int v : a)
            sq += static_cast<long>(v) * v;
        const std::array<long, 2> score{*hi - *lo, sq};
        if (best.empty() || score < best_score) {
            best = cand;
            best_score = score;
        }
    }
    return best;
}

} // namespace

std::vector<int> symmetric_fan(int faces, bool interior)
{
    if (interior) {
        if (faces < 3)
            throw Error(ErrorKind::InputError, "interior vertex with " + std::to_string(faces) + " edges admits no fan");
        std::vector<Ray> u;
        if (faces == 3)
            u = {{1, 0}, {0, 1}, {-1, -1}};
        else if (faces == 4 || faces == 5)
            u = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        else
            u = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
        while (static_cast<int>(u.size()) < faces)
            u = blow_up(u, true);
        return ray_coefficients(u, true);
    }
    if (faces <= 1)
        return {};
    std::vector<Ray> u = {{1, 0}, {0, 1}, {-1, 0}};
    while (static_cast<int>(u.size()) < faces + 1)
        u = blow_up(u, false);
    return ray_coefficients(u, false);
}

Gluings generate_symmetric_gluing(const TopoSurface& s)
{
    const int ne = static_cast<int>(s.edges().size());
    // alpha[e][end]: prescribed value of the first-order coefficient at each endpoint.
    std::vector<std::array<Rational, 2>> alpha(ne);
    // Opposite edge ends through interior crossing vertices.
    std::map<std::pair<int, int>, std::pair<int, int>> link;
    for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v) {
        const VertexClass& vc = s.vertex(v);
        const auto fan = symmetric_fan(vc.face_count(), vc.interior);
        const int first = vc.interior ? 0 : 1;
        for (std::size_t k = 0; k < fan.size(); ++k) {
            const FanEdge& fe = vc.edges[first + k];
            alpha[fe.edge][fe.at_start ? 0 : 1] = fan[k];
        }
        const bool crossing = vc.interior && fan.size() == 4 &&
                              std::all_of(fan.begin(), fan.end(), [](int x) { return x == 0; });
        if (crossing)
            for (int k = 0; k < 4; ++k) {
                const FanEdge& x = vc.edges[k];
                const FanEdge& y = vc.edges[(k + 2) % 4];
                link[{x.edge, x.at_start ? 0 : 1}] = {y.edge, y.at_start ? 0 : 1};
            }
    }

    std::vector<std::optional<UniPoly>> a(ne);
    auto endpoint_values = [&](int e) {
        const int f = face_delta(s, e, 0) + face_delta(s, e, 1);
        return std::pair<Rational, Rational>{alpha[e][0], f - alpha[e][1]};
    };
    auto derivative_at = [&](int e, int end) { return a[e]->derivative()(end ? 1 : 0); };
    auto assign = [&](int e, std::optional<std::pair<int, Rational>> slope) {
        const auto [a0, a1] = endpoint_values(e);
        if (!slope) {
            a[e] = UniPoly{a0, a1 - a0};
        } else if (slope->first == 0) {
            const Rational d = slope->second;
            a[e] = UniPoly{a0, d, a1 - a0 - d};
        } else {
            const Rational d = slope->second;
            a[e] = UniPoly{a0, 2 * (a1 - a0) - d, d - (a1 - a0)};
        }
    };

    for (int e = 0; e < ne; ++e) {
        if (s.edge(e).boundary() || a[e])
            continue;
        // Component of edges chained through crossing vertices.
        std::vector<int> comp{e};
        std::vector<bool> seen(ne, false);
        seen[e] = true;
        for (std::size_t h = 0; h < comp.size(); ++h)
            for (int end = 0; end < 2; ++end) {
                auto it = link.find({comp[h], end});
                if (it != link.end() && !seen[it->second.first]) {
                    seen[it->second.first] = true;
                    comp.push_back(it->second.first);
                }
            }
        std::sort(comp.begin(), comp.end());
        int root = comp.front();
        for (int c : comp)
            if (link.count({c, 0}) && link.count({c, 1})) {
                root = c;
                break;
            }
        assign(root, std::nullopt);
        std::queue<int> todo;
        todo.push(root);
        while (!todo.empty()) {
            const int x = todo.front();
            todo.pop();
            for (int end = 0; end < 2; ++end) {
                auto it = link.find({x, end});
                if (it == link.end())
                    continue;
                const auto [y, yend] = it->second;
                const Rational d = derivative_at(x, end);
                if (a[y]) {
                    if (derivative_at(y, yend) != d)
                        throw Error(ErrorKind::InfeasibleCorrection,
                                    "edges '" + s.edge(x).id + "' and '" + s.edge(y).id +
                                        "' need slopes " + to_string(d) + " and " +
                                        to_string(derivative_at(y, yend)) + " at a shared crossing vertex");
                    continue;
                }
                assign(y, std::pair<int, Rational>{yend, d});
                todo.push(y);
            }
        }
    }

    Gluings g(ne);
    for (int e = 0; e < ne; ++e)
        if (!s.edge(e).boundary())
            g[e] = normalize({*a[e], UniPoly{-1}, UniPoly{1}});
    const Report r = validate(s, g, true);
    if (!r.ok()) {
        const ErrorKind kind = r.has(ErrorKind::Condition2Violated) ? ErrorKind::InfeasibleCorrection : ErrorKind::Internal;
        throw Error(kind, "generated gluing fails validation:\n" + r.text());
    }
    return g;
}

} // namespace g1

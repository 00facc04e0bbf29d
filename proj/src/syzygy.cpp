#include "g1/syzygy.hpp"

#include "g1/linalg.hpp"

#include <algorithm>

namespace g1 {

namespace {

int degree_or_minus_inf(const UniPoly& p) { return p.is_zero() ? -1000000 : p.degree(); }

/// Coefficient vector (C, B, A order) -> syzygy.
Syzygy unpack(const Vec& x, const std::array<int, 3>& caps)
{
    Syzygy z;
    std::size_t pos = 0;
    for (int comp : {2, 1, 0}) {
        Vec c;
        for (int i = 0; i <= caps[comp]; ++i)
            c.push_back(x[pos++]);
        z[comp] = UniPoly(c);
    }
    return z;
}

Vec pack(const Syzygy& z, const std::array<int, 3>& caps)
{
    Vec x;
    for (int comp : {2, 1, 0})
        for (int i = 0; i <= caps[comp]; ++i)
            x.push_back(z[comp].coeff(i));
    return x;
}

std::size_t packed_size(const std::array<int, 3>& caps)
{
    std::size_t n = 0;
    for (int c : caps)
        n += static_cast<std::size_t>(std::max(c + 1, 0));
    return n;
}

UniPoly shift(const UniPoly& p, int i) { return p * UniPoly::monomial(i); }

} // namespace

Syzygy cross(const Syzygy& x, const Syzygy& y)
{
    return {x[1] * y[2] - y[1] * x[2], x[2] * y[0] - y[2] * x[0], x[0] * y[1] - y[0] * x[1]};
}

UniPoly apply(const Syzygy& z, const EdgeGluing& g) { return z[0] * g.a + z[1] * g.b + z[2] * g.c; }

SyzygyInvariants syzygy_invariants(const EdgeGluing& g, FaceKind kind1, FaceKind kind2)
{
    if (g.b.is_zero() || g.c.is_zero())
        throw Error(ErrorKind::NonCoprimeInput, "b and c must be nonzero");
    if (gcd(g.a, gcd(g.b, g.c)).degree() > 0)
        throw Error(ErrorKind::NonCoprimeInput, "a, b, c share the factor " + gcd(g.a, gcd(g.b, g.c)).str());
    SyzygyInvariants inv;
    inv.n = std::max({g.a.degree(), g.b.degree(), g.c.degree()});
    inv.f1 = fdelta(kind1);
    inv.f2 = fdelta(kind2);
    inv.m = std::min(inv.f1, inv.f2);
    inv.d_a = inv.n + 1;
    inv.d_b = inv.n + inv.f2;
    inv.d_c = inv.n + inv.f1;
    const int slack = std::min({inv.d_a - degree_or_minus_inf(g.a), inv.d_b - degree_or_minus_inf(g.b),
                                inv.d_c - degree_or_minus_inf(g.c)});
    inv.e = slack == 0 ? 0 : 1;
    return inv;
}

std::array<int, 3> graded_caps(const SyzygyInvariants& inv, int d)
{
    return {d - inv.d_a, d - inv.d_b, d - inv.d_c};
}

std::vector<Syzygy> graded_syzygies(const EdgeGluing& g, const SyzygyInvariants& inv, int d)
{
    const auto caps = graded_caps(inv, d);
    const std::size_t cols = packed_size(caps);
    if (cols == 0)
        return {};
    const std::array<const UniPoly*, 3> data{&g.a, &g.b, &g.c};
    int top = 0;
    for (int comp = 0; comp < 3; ++comp)
        if (caps[comp] >= 0)
            top = std::max(top, caps[comp] + std::max(data[comp]->degree(), 0));
    Matrix m(static_cast<std::size_t>(top + 1), cols);
    std::size_t col = 0;
    for (int comp : {2, 1, 0})
        for (int i = 0; i <= caps[comp]; ++i, ++col)
            for (int t = 0; t <= data[comp]->degree(); ++t)
                m(static_cast<std::size_t>(i + t), col) = data[comp]->coeff(t);
    std::vector<Syzygy> out;
    for (const auto& v : nullspace(m))
        out.push_back(unpack(v, caps));
    return out;
}

MuBasis mu_basis(const EdgeGluing& g, FaceKind kind1, FaceKind kind2)
{
    MuBasis mb;
    mb.inv = syzygy_invariants(g, kind1, kind2);
    const auto& inv = mb.inv;
    const int base = inv.n + inv.m;
    const int total = inv.d_a + inv.d_b + inv.d_c - inv.e;

    int d = 0;
    std::vector<Syzygy> ns;
    for (;; ++d) {
        if (d > total)
            throw Error(ErrorKind::Internal, "no syzygy found up to graded degree " + std::to_string(total));
        ns = graded_syzygies(g, inv, d);
        if (!ns.empty())
            break;
    }
    mb.d1 = d;
    mb.S1 = ns.front();

    // Second generator: first graded degree where syzygies exceed the multiples of S1.
    for (d = mb.d1;; ++d) {
        if (d > total)
            throw Error(ErrorKind::Internal, "second generator not found up to graded degree " + std::to_string(total));
        const auto caps = graded_caps(inv, d);
        const std::size_t cols = packed_size(caps);
        std::vector<Vec> multiples;
        for (int i = 0; i <= d - mb.d1; ++i)
            multiples.push_back(pack({shift(mb.S1[0], i), shift(mb.S1[1], i), shift(mb.S1[2], i)}, caps));
        Matrix mm = Matrix::from_rows(multiples, cols);
        const auto piv = rref(mm);
        std::vector<Vec> rest;
        for (const auto& z : graded_syzygies(g, inv, d)) {
            Vec v = pack(z, caps);
            for (std::size_t r = 0; r < piv.size(); ++r) {
                const Rational f = v[piv[r]];
                if (f != 0)
                    for (std::size_t c = 0; c < cols; ++c)
                        v[c] -= f * mm(r, c);
            }
            if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; }))
                rest.push_back(v);
        }
        if (!rest.empty()) {
            mb.d2 = d;
            mb.S2 = unpack(row_basis(rest, cols).front(), caps);
            break;
        }
    }
    if (mb.d2 != total - mb.d1)
        throw Error(ErrorKind::Internal, "generator degrees " + std::to_string(mb.d1) + ", " + std::to_string(mb.d2) +
                                             " do not add up to " + std::to_string(total));

    const Syzygy x = cross(mb.S1, mb.S2);
    const std::array<const UniPoly*, 3> data{&g.a, &g.b, &g.c};
    Rational lambda = 0;
    for (int comp = 0; comp < 3 && lambda == 0; ++comp)
        if (!data[comp]->is_zero())
            lambda = x[comp].coeff(data[comp]->degree()) / data[comp]->coeff(data[comp]->degree());
    if (lambda == 0)
        throw Error(ErrorKind::Internal, "degenerate outer product of the generators");
    for (auto& p : mb.S2)
        p *= 1 / lambda;
    const Syzygy y = cross(mb.S1, mb.S2);
    if (y[0] != g.a || y[1] != g.b || y[2] != g.c)
        throw Error(ErrorKind::Internal, "outer product of the generators is not proportional to (a,b,c)");
    mb.mu = mb.d1 - base;
    mb.nu = mb.d2 - base;
    return mb;
}

int dim_Zk(const MuBasis& mb, int k)
{
    const int m = mb.inv.m;
    return std::max(k - mb.mu - m + 1, 0) + std::max(k - mb.nu - m + 1, 0);
}

std::pair<int, int> pq_caps(const MuBasis& mb, int k)
{
    return {k + mb.inv.n - mb.d1, k + mb.inv.n - mb.d2};
}

Syzygy combine(const MuBasis& mb, const UniPoly& P, const UniPoly& Q)
{
    return {P * mb.S1[0] + Q * mb.S2[0], P * mb.S1[1] + Q * mb.S2[1], P * mb.S1[2] + Q * mb.S2[2]};
}

std::optional<std::pair<UniPoly, UniPoly>> express_in_basis(const MuBasis& mb, const Syzygy& z)
{
    if (z[0].is_zero() && z[1].is_zero() && z[2].is_zero())
        return std::pair<UniPoly, UniPoly>{};
    const auto& inv = mb.inv;
    const int D = std::max({degree_or_minus_inf(z[0]) + inv.d_a, degree_or_minus_inf(z[1]) + inv.d_b,
                            degree_or_minus_inf(z[2]) + inv.d_c});
    const int cp = D - mb.d1, cq = D - mb.d2;
    if (cp < 0)
        return std::nullopt;
    const auto caps = graded_caps(inv, D);
    const std::size_t rows = packed_size(caps);
    const std::size_t cols = static_cast<std::size_t>(cp + 1 + std::max(cq + 1, 0));
    Matrix m(rows, cols);
    std::size_t col = 0;
    for (int i = 0; i <= cp; ++i, ++col) {
        const Vec v = pack({shift(mb.S1[0], i), shift(mb.S1[1], i), shift(mb.S1[2], i)}, caps);
        for (std::size_t r = 0; r < rows; ++r)
            m(r, col) = v[r];
    }
    for (int i = 0; i <= cq; ++i, ++col) {
        const Vec v = pack({shift(mb.S2[0], i), shift(mb.S2[1], i), shift(mb.S2[2], i)}, caps);
        for (std::size_t r = 0; r < rows; ++r)
            m(r, col) = v[r];
    }
    const auto x = solve(m, pack(z, caps));
    if (!x)
        return std::nullopt;
    Vec p(x->begin(), x->begin() + cp + 1), q(x->begin() + cp + 1, x->end());
    return std::pair<UniPoly, UniPoly>{UniPoly(p), UniPoly(q)};
}

} // namespace g1

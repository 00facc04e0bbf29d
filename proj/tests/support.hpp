// Shared helpers for the test programs: seeded random rationals and polynomials.
#pragma once

#include "g1/facepoly.hpp"
#include "g1/gluing.hpp"
#include "g1/linalg.hpp"
#include "g1/rational.hpp"
#include "g1/unipoly.hpp"

#include <random>

namespace g1::test {

class Rng {
public:
    explicit Rng(std::uint32_t seed) : gen_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    /// Small rational p/q with |p| <= 9 and 1 <= q <= 5.
    Rational rational() { return ratio(integer(-9, 9), integer(1, 5)); }

    /// Rational in [0,1].
    Rational unit() { return ratio(integer(0, 12), 12); }

    UniPoly poly(int max_degree)
    {
        Vec c;
        for (int i = 0; i <= integer(0, max_degree); ++i)
            c.push_back(integer(-3, 3));
        return UniPoly(c);
    }

    UniPoly nonzero_poly(int max_degree)
    {
        for (;;) {
            UniPoly p = poly(max_degree);
            if (!p.is_zero())
                return p;
        }
    }

    FacePoly face(FaceKind kind, int k)
    {
        FacePoly p(kind, k);
        for (auto& x : p.coeffs())
            x = rational();
        return p;
    }

    /// Random triple with b, c nonzero and no common factor.
    EdgeGluing coprime_triple(int max_degree)
    {
        for (;;) {
            EdgeGluing g{poly(max_degree), nonzero_poly(max_degree), nonzero_poly(max_degree)};
            if (gcd(g.a, gcd(g.b, g.c)).degree() == 0)
                return g;
        }
    }

private:
    std::mt19937 gen_;
};

/// Coefficient matching for A a + B b + C c = 0 with deg A <= ca, deg B <= cb, deg C <= cc.
inline Matrix syzygy_system(const EdgeGluing& g, int ca, int cb, int cc)
{
    const std::array<const UniPoly*, 3> data{&g.a, &g.b, &g.c};
    const std::array<int, 3> caps{ca, cb, cc};
    int top = 0, cols = 0;
    for (int x = 0; x < 3; ++x) {
        cols += std::max(caps[x] + 1, 0);
        if (!data[x]->is_zero() && caps[x] >= 0)
            top = std::max(top, caps[x] + data[x]->degree());
    }
    Matrix m(static_cast<std::size_t>(top + 1), static_cast<std::size_t>(cols));
    int col = 0;
    for (int x = 0; x < 3; ++x)
        for (int i = 0; i <= caps[x]; ++i, ++col)
            for (int t = 0; t <= data[x]->degree(); ++t)
                m(i + t, col) += data[x]->coeff(t);
    return m;
}

/// Z_k caps: deg A <= k-1, deg B <= k - fdelta(sigma_2), deg C <= k - fdelta(sigma_1).
inline int brute_nullity(const EdgeGluing& g, FaceKind k1, FaceKind k2, int k)
{
    const int ca = k - 1, cb = k - fdelta(k2), cc = k - fdelta(k1);
    const int cols = std::max(ca + 1, 0) + std::max(cb + 1, 0) + std::max(cc + 1, 0);
    if (cols == 0)
        return 0;
    return cols - static_cast<int>(rank(syzygy_system(g, ca, cb, cc)));
}

inline const FaceKind kKinds[2] = {FaceKind::Quad, FaceKind::Triangle};

} // namespace g1::test

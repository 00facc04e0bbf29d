/** @file syzygy.hpp

    @brief Syzygies A*a + B*b + C*c = 0 of edge gluing data, graded by the
    homogenization degrees (d_a, d_b, d_c), and their mu-basis.
*/
#pragma once

#include "g1/facepoly.hpp"
#include "g1/gluing.hpp"

#include <array>
#include <optional>
#include <utility>

namespace g1 {

/// (A, B, C).
using Syzygy = std::array<UniPoly, 3>;

struct SyzygyInvariants {
    int n = 0, m = 0, e = 0;
    int d_a = 0, d_b = 0, d_c = 0;
    /// fdelta of the sigma_1 and sigma_2 faces.
    int f1 = 0, f2 = 0;
};

struct MuBasis {
    Syzygy S1, S2;
    SyzygyInvariants inv;
    int mu = 0, nu = 0;
    /// Graded degrees of S1 and S2.
    int d1 = 0, d2 = 0;
};

/// Errors: NonCoprimeInput (common factor, or b or c zero).
SyzygyInvariants syzygy_invariants(const EdgeGluing& g, FaceKind kind1, FaceKind kind2);

/// Errors: NonCoprimeInput, Internal when the generator count is inconsistent.
MuBasis mu_basis(const EdgeGluing& g, FaceKind kind1, FaceKind kind2);

/// Caps of the syzygies of graded degree d: maximal degrees of A, B, C (negative: absent).
std::array<int, 3> graded_caps(const SyzygyInvariants& inv, int d);

/// Nullspace basis of the coefficient system at graded degree d (canonical reduced form).
std::vector<Syzygy> graded_syzygies(const EdgeGluing& g, const SyzygyInvariants& inv, int d);

/// dim Z_k: (k-mu-m+1)_+ + (k-nu-m+1)_+.
int dim_Zk(const MuBasis& mb, int k);

/// Maximal degrees of P and Q with P*S1 + Q*S2 in Z_k (negative: absent).
std::pair<int, int> pq_caps(const MuBasis& mb, int k);

/// P*S1 + Q*S2.
Syzygy combine(const MuBasis& mb, const UniPoly& P, const UniPoly& Q);

/// (P, Q) with z = P*S1 + Q*S2, or nullopt when z is not in the module.
std::optional<std::pair<UniPoly, UniPoly>> express_in_basis(const MuBasis& mb, const Syzygy& z);

/// Componentwise B1C2-B2C1, C1A2-C2A1, A1B2-A2B1.
Syzygy cross(const Syzygy& x, const Syzygy& y);

/// A*a + B*b + C*c.
UniPoly apply(const Syzygy& z, const EdgeGluing& g);

} // namespace g1

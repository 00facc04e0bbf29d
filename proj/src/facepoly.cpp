/** @file facepoly.cpp

    @brief Bernstein-Bezier face polynomials, frames, jets and edge data.
*/
#include "g1/facepoly.hpp"

#include "g1/error.hpp"

namespace g1 {

int corner_count(FaceKind kind) { return kind == FaceKind::Triangle ? 3 : 4; }

int fdelta(FaceKind kind) { return kind == FaceKind::Triangle ? 1 : 0; }

std::string to_string(FaceKind kind) { return kind == FaceKind::Triangle ? "triangle" : "quad"; }

FaceKind parse_face_kind(const std::string& s)
{
    if (s == "triangle" || s == "tri")
        return FaceKind::Triangle;
    if (s == "quad" || s == "rectangle")
        return FaceKind::Quad;
    throw Error(ErrorKind::InputError, "unknown face kind '" + s + "'");
}

std::array<int, 2> corner_point(FaceKind kind, int corner)
{
    static const std::array<int, 2> tri[3] = {{0, 0}, {1, 0}, {0, 1}};
    static const std::array<int, 2> quad[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return kind == FaceKind::Triangle ? tri[corner] : quad[corner];
}

bool corners_adjacent(FaceKind kind, int a, int b)
{
    const int n = corner_count(kind);
    return a != b && ((a + 1) % n == b || (b + 1) % n == a);
}

int other_neighbor(FaceKind kind, int origin, int toward)
{
    const int n = corner_count(kind);
    const int next = (origin + 1) % n, prev = (origin + n - 1) % n;
    if (toward == next)
        return prev;
    if (toward == prev)
        return next;
    throw Error(ErrorKind::Internal, "corners are not adjacent");
}

int slot_start(FaceKind kind, int slot, bool reversed)
{
    return reversed ? (slot + 1) % corner_count(kind) : slot;
}

int slot_end(FaceKind kind, int slot, bool reversed)
{
    return reversed ? slot : (slot + 1) % corner_count(kind);
}

FacePoly::FacePoly(FaceKind kind, int k) : kind_(kind), k_(k), c_(count(kind, k)) {}

FacePoly FacePoly::constant(FaceKind kind, int k, const Rational& value)
{
    FacePoly p(kind, k);
    for (auto& c : p.c_)
        c = value;
    return p;
}

std::size_t FacePoly::count(FaceKind kind, int k)
{
    const std::size_t n = static_cast<std::size_t>(k) + 1;
    return kind == FaceKind::Triangle ? n * (n + 1) / 2 : n * n;
}

bool FacePoly::valid(int i, int j) const
{
    if (i < 0 || j < 0)
        return false;
    return kind_ == FaceKind::Triangle ? i + j <= k_ : (i <= k_ && j <= k_);
}

std::size_t FacePoly::index(int i, int j) const
{
    if (kind_ == FaceKind::Quad)
        return static_cast<std::size_t>(j) * (k_ + 1) + i;
    const std::size_t s = static_cast<std::size_t>(i + j);
    return s * (s + 1) / 2 + i;
}

std::pair<int, int> FacePoly::index_pair(std::size_t n) const
{
    if (kind_ == FaceKind::Quad)
        return {static_cast<int>(n % (k_ + 1)), static_cast<int>(n / (k_ + 1))};
    int s = 0;
    while (static_cast<std::size_t>((s + 1) * (s + 2) / 2) <= n)
        ++s;
    const int i = static_cast<int>(n) - s * (s + 1) / 2;
    return {i, s - i};
}

bool FacePoly::is_zero() const
{
    for (const auto& c : c_)
        if (c != 0)
            return false;
    return true;
}

namespace {

/// Powers x^0..x^n.
Vec powers(const Rational& x, int n)
{
    Vec p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int i = 1; i <= n; ++i)
        p[i] = p[i - 1] * x;
    return p;
}

Integer multinomial(int k, int i, int j)
{
    return binomial(k, i) * binomial(k - i, j);
}

} // namespace

Rational FacePoly::eval(const Rational& u, const Rational& v) const
{
    const Vec pu = powers(u, k_), pv = powers(v, k_);
    Rational s = 0;
    if (kind_ == FaceKind::Quad) {
        const Vec qu = powers(1 - u, k_), qv = powers(1 - v, k_);
        for (int j = 0; j <= k_; ++j) {
            Rational row = 0;
            for (int i = 0; i <= k_; ++i)
                row += at(i, j) * binomial(k_, i) * pu[i] * qu[k_ - i];
            s += row * binomial(k_, j) * pv[j] * qv[k_ - j];
        }
        return s;
    }
    const Vec pw = powers(1 - u - v, k_);
    for (int j = 0; j <= k_; ++j)
        for (int i = 0; i + j <= k_; ++i)
            s += at(i, j) * multinomial(k_, i, j) * pu[i] * pv[j] * pw[k_ - i - j];
    return s;
}

FacePoly FacePoly::elevate() const
{
    FacePoly e(kind_, k_ + 1);
    const Rational inv = Rational(1) / (k_ + 1);
    auto get = [this](int i, int j) { return valid(i, j) ? at(i, j) : Rational(0); };
    for (std::size_t n = 0; n < e.c_.size(); ++n) {
        const auto [i, j] = e.index_pair(n);
        if (kind_ == FaceKind::Triangle) {
            e.c_[n] = (i * get(i - 1, j) + j * get(i, j - 1) + (k_ + 1 - i - j) * get(i, j)) * inv;
        } else {
            auto col = [&](int jj) -> Rational { return (i * get(i - 1, jj) + (k_ + 1 - i) * get(i, jj)) * inv; };
            e.c_[n] = (j * col(j - 1) + (k_ + 1 - j) * col(j)) * inv;
        }
    }
    return e;
}

std::pair<int, int> FacePoly::frame_to_ref(int origin, int toward, int fi, int fj) const
{
    const auto p = corner_point(kind_, origin);
    const auto q = corner_point(kind_, toward);
    const auto r = corner_point(kind_, other_neighbor(kind_, origin, toward));
    return {k_ * p[0] + fi * (q[0] - p[0]) + fj * (r[0] - p[0]),
            k_ * p[1] + fi * (q[1] - p[1]) + fj * (r[1] - p[1])};
}

FacePoly FacePoly::reframe(int origin, int toward) const
{
    FacePoly f(kind_, k_);
    for (std::size_t n = 0; n < f.c_.size(); ++n) {
        const auto [i, j] = f.index_pair(n);
        const auto [ri, rj] = frame_to_ref(origin, toward, i, j);
        f.c_[n] = at(ri, rj);
    }
    return f;
}

FacePoly& FacePoly::operator+=(const FacePoly& o)
{
    if (o.kind_ != kind_ || o.k_ != k_)
        throw Error(ErrorKind::DegreeStructure, "adding face polynomials of different structure");
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] += o.c_[n];
    return *this;
}

FacePoly& FacePoly::operator*=(const Rational& s)
{
    for (auto& c : c_)
        c *= s;
    return *this;
}

MonomialTable bernstein_to_monomial(const FacePoly& p)
{
    const int k = p.degree();
    MonomialTable t{p.kind(), k, std::vector<Vec>(k + 1, Vec(k + 1))};
    if (p.kind() == FaceKind::Quad) {
        // Univariate expansion B^k_i(u) = sum_a C(k,i) C(k-i,a) (-1)^a u^(i+a).
        std::vector<Vec> basis(k + 1, Vec(k + 1));
        for (int i = 0; i <= k; ++i)
            for (int a = 0; i + a <= k; ++a)
                basis[i][i + a] = Rational(binomial(k, i) * binomial(k - i, a) * (a % 2 ? -1 : 1));
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= k; ++i) {
                const Rational& c = p.at(i, j);
                if (c == 0)
                    continue;
                for (int r = i; r <= k; ++r)
                    for (int s = j; s <= k; ++s)
                        t.m[r][s] += c * basis[i][r] * basis[j][s];
            }
        return t;
    }
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i + j <= k; ++i) {
            const Rational& c = p.at(i, j);
            if (c == 0)
                continue;
            const int l = k - i - j;
            const Rational base = c * multinomial(k, i, j);
            for (int a = 0; a <= l; ++a)
                for (int b = 0; a + b <= l; ++b) {
                    Rational term = base * multinomial(l, a, b);
                    if ((a + b) % 2)
                        term = -term;
                    t.m[i + a][j + b] += term;
                }
        }
    return t;
}

FacePoly monomial_to_bernstein(const MonomialTable& t)
{
    const int k = t.k;
    FacePoly p(t.kind, k);
    for (int r = 0; r < static_cast<int>(t.m.size()); ++r)
        for (int s = 0; s < static_cast<int>(t.m[r].size()); ++s) {
            const Rational& c = t.m[r][s];
            if (c == 0)
                continue;
            const bool fits = t.kind == FaceKind::Triangle ? r + s <= k : (r <= k && s <= k);
            if (!fits)
                throw Error(ErrorKind::DegreeStructure,
                            "monomial u^" + std::to_string(r) + " v^" + std::to_string(s) +
                                " outside degree " + std::to_string(k) + " " + to_string(t.kind));
            if (t.kind == FaceKind::Quad) {
                const Rational sr = c / Rational(binomial(k, r) * binomial(k, s));
                for (int j = s; j <= k; ++j)
                    for (int i = r; i <= k; ++i)
                        p.at(i, j) += sr * binomial(i, r) * binomial(j, s);
            } else {
                // u^r v^s = sum (i!/(i-r)!)(j!/(j-s)!)((k-r-s)!/k!) b_{i,j}
                // with i!/(i-r)! = C(i,r) r!
                Integer kf, krs, rf, sf;
                mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
                mpz_fac_ui(krs.get_mpz_t(), static_cast<unsigned long>(k - r - s));
                mpz_fac_ui(rf.get_mpz_t(), static_cast<unsigned long>(r));
                mpz_fac_ui(sf.get_mpz_t(), static_cast<unsigned long>(s));
                const Rational base = c * Rational(krs * rf * sf, kf);
                for (int j = s; j <= k; ++j)
                    for (int i = r; i + j <= k; ++i)
                        p.at(i, j) += base * binomial(i, r) * binomial(j, s);
            }
        }
    for (auto& c : p.coeffs())
        c.canonicalize();
    return p;
}

Rational eval(const MonomialTable& t, const Rational& u, const Rational& v)
{
    const int n = static_cast<int>(t.m.size()) - 1;
    const Vec pu = powers(u, n), pv = powers(v, n);
    Rational s = 0;
    for (int r = 0; r <= n; ++r)
        for (int q = 0; q < static_cast<int>(t.m[r].size()); ++q)
            if (t.m[r][q] != 0)
                s += t.m[r][q] * pu[r] * pv[q];
    return s;
}

MonomialTable d_du(const MonomialTable& t)
{
    MonomialTable d{t.kind, t.k, std::vector<Vec>(t.m.size(), Vec(t.m.size()))};
    for (std::size_t r = 1; r < t.m.size(); ++r)
        for (std::size_t s = 0; s < t.m[r].size(); ++s)
            d.m[r - 1][s] = t.m[r][s] * static_cast<long>(r);
    return d;
}

MonomialTable d_dv(const MonomialTable& t)
{
    MonomialTable d{t.kind, t.k, std::vector<Vec>(t.m.size(), Vec(t.m.size()))};
    for (std::size_t r = 0; r < t.m.size(); ++r)
        for (std::size_t s = 1; s < t.m[r].size(); ++s)
            d.m[r][s - 1] = t.m[r][s] * static_cast<long>(s);
    return d;
}

Rational cross_factor(FaceKind kind, int k)
{
    return kind == FaceKind::Triangle ? Rational(k * (k - 1)) : Rational(k * k);
}

Jet jet_at_corner(const FacePoly& p, int origin, int toward)
{
    const int k = p.degree();
    auto c = [&](int i, int j) {
        if (!p.valid(i, j))
            return Rational(0);
        const auto [ri, rj] = p.frame_to_ref(origin, toward, i, j);
        return p.at(ri, rj);
    };
    const Rational c00 = c(0, 0), c10 = c(1, 0), c01 = c(0, 1), c11 = c(1, 1);
    return {c00, k * (c10 - c00), k * (c01 - c00), cross_factor(p.kind(), k) * (c11 - c10 - c01 + c00)};
}

Jet jet_at_corner(const FacePoly& p, int corner)
{
    return jet_at_corner(p, corner, (corner + 1) % corner_count(p.kind()));
}

std::array<Rational, 4> jet_to_corner_coeffs(FaceKind kind, int k, const Jet& jet)
{
    const Rational c00 = jet[0];
    const Rational c10 = jet[0] + jet[1] / k;
    const Rational c01 = jet[0] + jet[2] / k;
    const Rational c11 = jet[3] / cross_factor(kind, k) + c10 + c01 - c00;
    return {c00, c10, c01, c11};
}

EdgeJet edge_restriction_jet(const FacePoly& p, int origin, int toward)
{
    const int k = p.degree();
    auto c = [&](int i, int j) {
        const auto [ri, rj] = p.frame_to_ref(origin, toward, i, j);
        return p.at(ri, rj);
    };
    Vec g(k + 1);
    for (int i = 0; i <= k; ++i)
        g[i] = c(i, 0);
    EdgeJet out;
    out.g = UniPoly::from_bernstein(g);
    const int hk = k - fdelta(p.kind());
    if (k == 0 || hk < 0)
        return out;
    Vec h(hk + 1);
    for (int i = 0; i <= hk; ++i)
        h[i] = k * (c(i, 1) - c(i, 0));
    out.h = UniPoly::from_bernstein(h);
    return out;
}

EdgeJet edge_restriction_jet(const FacePoly& p, int slot, bool reversed)
{
    return edge_restriction_jet(p, slot_start(p.kind(), slot, reversed), slot_end(p.kind(), slot, reversed));
}

std::vector<std::pair<std::pair<int, int>, Rational>> edge_rows(FaceKind kind, int k, const UniPoly& g,
                                                                const UniPoly& h)
{
    const int hk = k - fdelta(kind);
    if (g.degree() > k || h.degree() > hk)
        throw Error(ErrorKind::DegreeBoundViolated, "edge data (deg g=" + std::to_string(g.degree()) +
                                                        ", deg h=" + std::to_string(h.degree()) +
                                                        ") does not fit degree " + std::to_string(k));
    const Vec gb = g.to_bernstein(k);
    std::vector<std::pair<std::pair<int, int>, Rational>> out;
    for (int i = 0; i <= k; ++i)
        out.push_back({{i, 0}, gb[i]});
    if (k == 0)
        return out;
    const Vec hb = h.to_bernstein(hk);
    for (int i = 0; i <= hk; ++i)
        out.push_back({{i, 1}, gb[i] + hb[i] / k});
    return out;
}

} // namespace g1

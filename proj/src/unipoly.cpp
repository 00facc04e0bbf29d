/** @file unipoly.cpp

    @brief Univariate rational polynomial arithmetic.
*/
#include "g1/unipoly.hpp"

#include "g1/error.hpp"

#include <algorithm>
#include <sstream>

namespace g1 {

UniPoly::UniPoly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(Vec{c}); }

UniPoly UniPoly::monomial(int power, const Rational& c)
{
    Vec v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_bernstein(const Vec& b)
{
    // B^k_i(u) = C(k,i) u^i (1-u)^(k-i) = sum_j C(k,i) C(k-i,j) (-1)^j u^(i+j).
    const int k = static_cast<int>(b.size()) - 1;
    Vec out(b.size());
    for (int i = 0; i <= k; ++i) {
        if (b[i] == 0)
            continue;
        for (int j = 0; i + j <= k; ++j) {
            Rational t = b[i] * binomial(k, i) * binomial(k - i, j);
            if (j % 2)
                out[i + j] -= t;
            else
                out[i + j] += t;
        }
    }
    return UniPoly(std::move(out));
}

Rational UniPoly::coeff(int i) const
{
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational UniPoly::operator()(const Rational& u) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * u + *it;
    return r;
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    Vec d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::integrate() const
{
    if (c_.empty())
        return {};
    Vec r(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return UniPoly(std::move(r));
}

Rational UniPoly::integral01() const
{
    Rational s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        s += c_[i] / Rational(static_cast<long>(i + 1));
    return s;
}

UniPoly UniPoly::reflect() const
{
    // sum c_i (1-u)^i
    Vec out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Rational t = c_[i] * binomial(static_cast<int>(i), static_cast<int>(j));
            if (j % 2)
                out[j] -= t;
            else
                out[j] += t;
        }
    return UniPoly(std::move(out));
}

Vec UniPoly::to_bernstein(int k) const
{
    if (degree() > k)
        throw Error(ErrorKind::DegreeStructure, "degree " + std::to_string(degree()) +
                                                    " exceeds Bernstein degree " + std::to_string(k));
    // u^r = sum_{i>=r} C(i,r)/C(k,r) B^k_i
    Vec b(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= degree(); ++r) {
        if (c_[r] == 0)
            continue;
        const Rational scale = c_[r] / Rational(binomial(k, r));
        for (int i = r; i <= k; ++i)
            b[i] += scale * binomial(i, r);
    }
    return b;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= s;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    Vec r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

void UniPoly::divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const
{
    if (d.is_zero())
        throw Error(ErrorKind::Internal, "polynomial division by zero");
    Vec rem = c_;
    Vec quo(std::max<int>(0, degree() - d.degree() + 1));
    const Rational& lead = d.c_.back();
    for (int i = degree(); i >= d.degree(); --i) {
        if (rem[i] == 0)
            continue;
        const Rational f = rem[i] / lead;
        quo[i - d.degree()] = f;
        for (int j = 0; j <= d.degree(); ++j)
            rem[i - d.degree() + j] -= f * d.c_[j];
    }
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return {};
    return *this * (Rational(1) / c_.back());
}

std::string UniPoly::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& x = c_[i];
        if (x == 0)
            continue;
        Rational mag = abs(x);
        if (!first)
            os << (x < 0 ? " - " : " + ");
        else if (x < 0)
            os << "-";
        if (i == 0 || mag != 1)
            os << mag.get_str();
        if (i > 0)
            os << (i == 0 || mag != 1 ? "*" : "") << "u" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly q, r;
        x.divmod(y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

void remove_content(std::vector<UniPoly*> polys)
{
    Integer den = 1;
    for (auto* p : polys)
        for (const auto& c : p->coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (auto* p : polys)
        for (const auto& c : p->coeffs()) {
            Rational t = c * den;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num_mpz_t());
        }
    if (g == 0)
        return;
    const Rational scale = Rational(den) / Rational(g);
    for (auto* p : polys)
        *p *= scale;
}

} // namespace g1

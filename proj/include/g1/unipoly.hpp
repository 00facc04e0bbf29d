/** @file unipoly.hpp

    @brief Univariate polynomials over the rationals in the edge parameter u.
*/
#pragma once

#include "g1/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace g1 {

/// Dense polynomial with ascending coefficients and no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree -1, which
/// callers treat as minus infinity.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Vec coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int power, const Rational& c = 1);
    /// Polynomial with the given Bernstein coefficients of degree coeffs.size()-1.
    static UniPoly from_bernstein(const Vec& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Vec& coeffs() const { return c_; }
    /// Coefficient of u^i, zero beyond the degree.
    Rational coeff(int i) const;

    Rational operator()(const Rational& u) const;
    UniPoly derivative() const;
    /// Antiderivative vanishing at 0.
    UniPoly integrate() const;
    /// Definite integral over [0,1].
    Rational integral01() const;
    /// p(1-u).
    UniPoly reflect() const;
    /// Bernstein coefficients at degree k >= degree().
    Vec to_bernstein(int k) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on division by zero.
    void divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const;
    UniPoly monic() const;
    std::string str() const;

private:
    void trim();
    Vec c_;
};

/// Monic gcd; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Scales a list of polynomials by one positive rational so that all
/// coefficients become integers with joint gcd 1.
void remove_content(std::vector<UniPoly*> polys);

} // namespace g1

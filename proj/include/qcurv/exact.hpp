#pragma once

#include "qcurv/error.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qcurv {

// Canonical after every arithmetic op; parse_rational canonicalizes input.
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
// Machine form, always "p/q".
std::string to_string(const Rational& q);
// Human form: integers without "/1".
std::string pretty(const Rational& q);
std::string latex(const Rational& q);

Rational rat(long p, long q = 1);
Rational power(const Rational& base, long e);

Rational double_factorial(long k);
Rational pochhammer(const Rational& a, long n);
Rational factorial(long k);
Rational binomial(long n, long k);
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");
    static UniPoly constant(const Rational& c, std::string var = "x");
    static UniPoly monomial(const Rational& c, int deg, std::string var = "x");
    // (x - a)
    static UniPoly linear_root(const Rational& a, std::string var = "x");

    const std::vector<Rational>& coeffs() const { return c_; }
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const;

    Rational operator()(const Rational& x0) const;
    UniPoly derivative() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    std::string str() const;
    std::string latex_str() const;

private:
    void trim();
    std::vector<Rational> c_;
    std::string var_ = "x";
};

struct Node {
    Rational x;
    Rational y;
};

// Basis polynomials l_i with l_i(x_j) = delta_ij.
std::vector<UniPoly> lagrange_basis(const std::vector<Rational>& xs, const std::string& var = "x");
UniPoly lagrange_interpolate(const std::vector<Node>& nodes, const std::string& var = "x");

}  // namespace qcurv

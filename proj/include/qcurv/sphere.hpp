#pragma once

#include "qcurv/coeff.hpp"
#include "qcurv/exact.hpp"
#include "qcurv/report.hpp"

#include <vector>

namespace qcurv {

using MPoly = UniPoly;  // variable m = n/2

MPoly mpoly(std::vector<Rational> coeffs);
MPoly sphere_q(int N);
MPoly gjms_on_constant(int j);

// numerator / (1 - c r^2)^K, numerator stored as one r-polynomial per power of m.
class RadialFunction {
public:
    RadialFunction(std::vector<UniPoly> by_m_power, int K, Rational c);
    static RadialFunction q_bar(const Rational& lambda);

    const std::vector<UniPoly>& numerator() const { return num_; }
    int denominator_power() const { return K_; }
    const Rational& scale() const { return c_; }

    // Divide out common (1 - c r^2) factors.
    RadialFunction canonical() const;
    // Same function with numerator and denominator multiplied by (1 - c r^2).
    RadialFunction expanded_once() const;
    MPoly at_zero() const;
    bool operator==(const RadialFunction& o) const;

private:
    std::vector<UniPoly> num_;
    int K_ = 0;
    Rational c_;
    friend RadialFunction bar_apply(const RadialFunction& f, const Rational& lambda);
};

// Pbar_2 = d^2/dr^2 - m lambda r (1 - c r^2)^{-1} d/dr - lambda m (m - 1/2) (1 - c r^2)^{-1}, c = lambda/4
RadialFunction bar_apply(const RadialFunction& f, const Rational& lambda = Rational(1));
// i* Pbar_2^k (Qbar_2) as a polynomial in m.
MPoly bar_value(int k, const Rational& lambda = Rational(1));

// Right side of F evaluated on the sphere (lambda = 1) or an Einstein metric.
MPoly formula_on_einstein(const RecursiveFormula& F, const Rational& lambda);
Report verify_formula_on_sphere(const RecursiveFormula& F);
Report einstein_scaling_check(const RecursiveFormula& F, const std::vector<Rational>& lambdas);

}  // namespace qcurv

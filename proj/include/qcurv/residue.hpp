#pragma once

#include "qcurv/coeff.hpp"
#include "qcurv/op_algebra.hpp"
#include "qcurv/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qcurv {

struct ResidueFamily {
    int N = 0;
    Rational n;
    std::vector<std::pair<Rational, OpExpr>> nodes;
    OpExpr expanded;  // coefficients are polynomials in lambda of degree <= N
};

// Memoized by (N, n).
const ResidueFamily& residue_family(int N, const Rational& n);

// Q^res_{2N}(lambda) applied to 1, as a list of value expressions (index = power of lambda).
std::vector<ValueExpr> qres_polynomial(int N, const Rational& n);

RecursiveFormula critical_formula(int N);

struct UniversalityProbe {
    RecursiveFormula formula;     // solved from Q^res(0) = 0
    Rational normalization;       // coefficient c of Q_{2N} in Q^res(0)
    ValueExpr derivative_residual;  // two derivative routes at -n/2+N, subtracted
};

RecursiveFormula universality_residual(int N, const Rational& n);
UniversalityProbe universality_probe(int N, const Rational& n);

Report cross_check(int N_max);
Report check_family_nodes(int N, const Rational& n);

std::string derivation_trace(int N, const Rational& n);

}  // namespace qcurv

#pragma once

#include "qcurv/compositions.hpp"
#include "qcurv/exact.hpp"
#include "qcurv/report.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcurv {

struct FormulaTerm {
    Rational coeff;
    Composition word;
    int q_order = 0;  // order of the Q-curvature acted on: 2N - 2|I|
};

struct RecursiveFormula {
    int N = 0;
    std::string source = "rpoly";
    std::vector<FormulaTerm> terms;
    Rational bar_coeff;
    int bar_power = 0;
};

using CoeffMap = std::map<std::pair<Composition, int>, Rational>;
CoeffMap coeff_map(const RecursiveFormula& F);
// Empty string when F and G agree exactly (terms and bar part).
std::string formula_diff(const RecursiveFormula& F, const RecursiveFormula& G);

Rational coeff_a(const Composition& I, int N);
Rational bar_coefficient(int N);
RecursiveFormula assemble_formula(int N);
Report check_sign_law(const RecursiveFormula& F);

// Sum of r_I over all compositions of a given size, optionally restricted
// to a fixed last entry. Built by aggregating the r_I construction itself,
// so sizes near 20 stay cheap.
UniPoly r_sum(int size);
Rational alpha(int j, int N);
// Same quantity summed term by term from coeff_a.
Rational alpha_direct(int j, int N);
Rational beta(int j, int N);
// Coefficient of z^j w^k in (1-z)^(-1/2) (1-w)^(-1/2).
Rational gen_G(int j, int k);
Report check_alpha_layer(int N_max);
Report check_gen_f(int max_total_degree);

// Coefficient of x^I y^e in the refined generating function.
Rational q_series_coeff(const Composition& I, int e);
std::vector<Rational> q_series(const std::vector<Composition>& x_orders, int y_order);
Report check_q_series(int max_total_degree);

Report closed_form_check(int N_max);

std::string formula_json(const RecursiveFormula& F);
RecursiveFormula formula_from_json(const std::string& text);
std::string formula_latex(const RecursiveFormula& F);
std::string formula_text(const RecursiveFormula& F);

}  // namespace qcurv

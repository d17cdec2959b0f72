#include "qcurv/sphere.hpp"

#include <doctest.h>

using namespace qcurv;

TEST_CASE("sphere Q-curvature") {
    CHECK(sphere_q(1) == mpoly({0, 1}));
    CHECK(sphere_q(2) == mpoly({0, -1, 0, 1}));
    CHECK(sphere_q(4) == mpoly({0, -36, 0, 49, 0, -14, 0, 1}));
}

TEST_CASE("GJMS operators on constants") {
    CHECK(gjms_on_constant(1) == mpoly({0, 1, -1}));
    // (m+1) m (m-1) (m-2)
    CHECK(gjms_on_constant(2) == mpoly({0, 2, -1, -2, 1}));
    for (int j = 1; j <= 6; ++j) CHECK(gjms_on_constant(j)(Rational(j)) == 0);
}

TEST_CASE("bulk powers on the bar curvature") {
    CHECK(bar_value(0) == mpoly({0, 1}));
    // at r = 0: f'' = m/2, potential -m^2 (m - 1/2)
    CHECK(bar_value(1) == mpoly({0, rat(1, 2), rat(1, 2), -1}));
    CHECK(bar_value(1, Rational(2)) == bar_value(1) * Rational(4));
    MPoly mm1 = mpoly({0, -1, 1});  // m (m - 1)
    CHECK(bar_value(1) == mm1 * mpoly({1, 2}) * rat(-1, 2));
    CHECK(bar_value(2) == mm1 * mpoly({-6, -5, 0, 4}) * rat(1, 4));
    CHECK(bar_value(3) == mm1 * mpoly({90, 25, -31, -22, -4, 8}) * rat(-1, 8));
    for (int k = 0; k <= 4; ++k) CHECK(bar_value(k).degree() == 2 * k + 1);
}

TEST_CASE("non-bar parts on the round sphere") {
    // N=3 subtotal: the m^2 coefficient is +2/3; only that sign closes the Q_6 identity
    for (auto [N, sub] : {std::pair{3, mpoly({0, 0, rat(2, 3), rat(-5, 3), rat(8, 3), rat(-5, 3)})},
                          std::pair{4, mpoly({0, 0, rat(-130, 5), rat(133, 5), rat(18, 5), rat(-34, 5), rat(24, 5),
                                              rat(-11, 5)})}}) {
        RecursiveFormula F = assemble_formula(N);
        RecursiveFormula rest = F;
        rest.bar_coeff = 0;
        CHECK(formula_on_einstein(rest, Rational(1)) == sub);
        CHECK(sub + bar_value(N - 1) * F.bar_coeff == sphere_q(N));
    }
}

TEST_CASE("formulas hold on spheres and Einstein metrics") {
    for (int N = 2; N <= 6; ++N) CHECK(verify_formula_on_sphere(assemble_formula(N)).ok());
    CHECK(formula_on_einstein(assemble_formula(2), Rational(2)) == sphere_q(2) * Rational(4));
    CHECK(formula_on_einstein(assemble_formula(3), Rational(-1)) == sphere_q(3) * Rational(-1));
    CHECK(einstein_scaling_check(assemble_formula(4), {Rational(1), Rational(2), Rational(-1), rat(5, 7)}).ok());
    CHECK_THROWS_WITH_AS(formula_on_einstein(assemble_formula(2), Rational(0)), "degenerate scale", Error);
}

TEST_CASE("radial representation is canonical") {
    RadialFunction f = RadialFunction::q_bar(Rational(1));
    RadialFunction g = f.expanded_once().expanded_once();
    CHECK(g.denominator_power() == f.denominator_power() + 2);
    CHECK(g.canonical() == f.canonical());
    CHECK(g.at_zero() == f.at_zero());
    CHECK(bar_apply(g).canonical() == bar_apply(f).canonical());
    CHECK(bar_apply(bar_apply(g)).at_zero() == bar_value(2));
}

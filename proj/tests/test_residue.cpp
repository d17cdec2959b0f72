#include "qcurv/residue.hpp"

#include <doctest.h>

using namespace qcurv;

namespace {

Word W(std::vector<int> b, bool r, int k) { return Word{std::move(b), r, k}; }

Rational coeff_at(const OpExpr& e, const Word& w) {
    auto it = e.terms().find(w);
    return it == e.terms().end() ? Rational(0) : it->second.coeff(0);
}

}  // namespace

TEST_CASE("second-order family at n=4") {
    const auto& f = residue_family(1, Rational(4));
    OpExpr at1 = f.expanded.at(1);
    CHECK(coeff_at(at1, W({1}, true, 0)) == 5);
    CHECK(coeff_at(at1, W({}, true, 1)) == -4);
    CHECK(at1.terms().size() == 2);
    OpExpr atm = f.expanded.at(rat(-7, 2));
    CHECK(coeff_at(atm, W({}, true, 1)) == 5);
    CHECK(coeff_at(atm, W({1}, true, 0)) == -4);
}

TEST_CASE("fourth-order family at n=4 matches the worked coefficients") {
    const auto& f = residue_family(2, Rational(4));
    CHECK(f.expanded.degree() == 2);
    auto coeff = [&](const Word& w, int p) {
        auto it = f.expanded.terms().find(w);
        return it == f.expanded.terms().end() ? Rational(0) : it->second.coeff(p);
    };
    // lambda^2 and lambda^1 parts away from the P_4 i* channel
    CHECK(coeff(W({1, 1}, true, 0), 2) == 2);
    CHECK(coeff(W({1}, true, 1), 2) == rat(-8, 3));
    CHECK(coeff(W({}, true, 2), 2) == rat(4, 3));
    CHECK(coeff(W({1, 1}, true, 0), 1) == 3);
    CHECK(coeff(W({1}, true, 1), 1) == rat(-4, 3));
    CHECK(coeff(W({}, true, 2), 1) == rat(-4, 3));
    CHECK(coeff(W({2}, true, 0), 0) == 1);
}

TEST_CASE("families reproduce their nodes") {
    for (int N = 1; N <= 4; ++N)
        for (int n : {2 * N, 4 * N, 4 * N + 2}) CHECK(check_family_nodes(N, Rational(n)).ok());
}

TEST_CASE("critical formulas") {
    RecursiveFormula F2 = critical_formula(2);
    CHECK(F2.source == "residue");
    CHECK(formula_diff(F2, assemble_formula(2)).empty());
    CHECK(F2.terms.size() == 1);
    CHECK(F2.terms[0].coeff == 1);
    CHECK(F2.bar_coeff == -2);

    RecursiveFormula F3 = critical_formula(3);
    CHECK(F3.terms.size() == 3);
    CHECK(F3.bar_coeff == rat(8, 3));
    CHECK(formula_diff(F3, assemble_formula(3)).empty());

    RecursiveFormula F4 = critical_formula(4);
    CHECK(F4.terms.size() == 7);
    CHECK(F4.bar_coeff == rat(-16, 5));
    CHECK_THROWS_AS(critical_formula(1), Error);
}

TEST_CASE("bar normalization emerges") {
    for (int N = 2; N <= 6; ++N) CHECK(critical_formula(N).bar_coeff == bar_coefficient(N));
}

TEST_CASE("critical family vanishes at 0 on constants") {
    for (int N = 2; N <= 5; ++N) {
        auto q = qres_polynomial(N, Rational(2 * N));
        CHECK(q[0].terms().empty());
        CHECK(q.size() <= static_cast<size_t>(N + 1));
    }
}

TEST_CASE("universality probe") {
    RecursiveFormula U = universality_residual(2, Rational(16));
    CHECK(formula_diff(U, assemble_formula(2)).empty());
    CHECK(formula_diff(universality_residual(3, Rational(16)), assemble_formula(3)).empty());
    CHECK(formula_diff(universality_residual(4, Rational(16)), assemble_formula(4)).empty());

    for (int N = 2; N <= 4; ++N)
        for (int n : {4 * N, 4 * N + 2, 4 * N + 4}) {
            UniversalityProbe p = universality_probe(N, Rational(n));
            ValueExpr want = formula_defect(critical_formula(N)) * (Rational(n - 1) / (2 * N - 1));
            CHECK(p.derivative_residual == want);
            CHECK(p.normalization != 0);
        }
    CHECK_THROWS_AS(universality_probe(3, Rational(10)), Error);
    CHECK_THROWS_AS(universality_probe(3, Rational(13)), Error);
}

TEST_CASE("cross check report") {
    Report rep = cross_check(4);
    CHECK(rep.ok());
    CHECK(rep.lines.size() == 3);
}

TEST_CASE("derivation trace") {
    std::string t = derivation_trace(1, Rational(4));
    CHECK(t.find("node λ=-1") != std::string::npos);
    CHECK(t.find("expanded") != std::string::npos);
}

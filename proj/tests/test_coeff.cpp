#include "qcurv/coeff.hpp"
#include "qcurv/rpoly.hpp"

#include <doctest.h>

using namespace qcurv;

namespace {

Rational term(const RecursiveFormula& F, const Composition& I) {
    for (const auto& t : F.terms)
        if (t.word == I) return t.coeff;
    FAIL("missing term " << comp_key(I));
    return 0;
}

}  // namespace

TEST_CASE("coeff_a") {
    CHECK(coeff_a({2, 1}, 4) == rat(28, 5));
    CHECK(coeff_a({1}, 2) == 1);
    CHECK(coeff_a({1, 3}, 5) == rat(-69, 35));
    CHECK_THROWS_WITH_AS(coeff_a({2, 1}, 3), "coefficient undefined below threshold", Error);
}

TEST_CASE("bar coefficient") {
    CHECK(bar_coefficient(1) == 1);
    CHECK(bar_coefficient(2) == -2);
    CHECK(bar_coefficient(4) == rat(-16, 5));
    CHECK(bar_coefficient(7) == rat(1024, 231));
    CHECK(bar_coefficient(8) == rat(-2048, 429));
}

TEST_CASE("assembled formulas") {
    RecursiveFormula F3 = assemble_formula(3);
    REQUIRE(F3.terms.size() == 3);
    CHECK(term(F3, {1}) == rat(2, 3));
    CHECK(term(F3, {1, 1}) == rat(-5, 3));
    CHECK(term(F3, {2}) == rat(2, 3));
    CHECK(F3.bar_coeff == rat(8, 3));
    CHECK(F3.bar_power == 2);
    CHECK(F3.terms[0].q_order == 4);

    RecursiveFormula F5 = assemble_formula(5);
    CHECK(F5.terms.size() == 15);
    CHECK(F5.bar_coeff == rat(128, 35));
    CHECK(term(F5, {1}) == rat(4, 7));
    CHECK(term(F5, {4}) == rat(20, 7));

    RecursiveFormula F8 = assemble_formula(8);
    CHECK(F8.terms.size() == 127);
    CHECK(F8.bar_coeff == rat(-2048, 429));
    CHECK(term(F8, {1}) == rat(7, 13));

    // canonical order: size, then length, then lexicographic
    CHECK(F5.terms[1].word == Composition{2});
    CHECK(F5.terms[2].word == Composition{1, 1});
}

TEST_CASE("sign law with the I=(1) exception") {
    for (int N = 2; N <= 8; ++N) {
        Report rep = check_sign_law(assemble_formula(N));
        CHECK(rep.ok());
        CHECK(rep.lines[0].detail.find("exception I=(1)") != std::string::npos);
    }
}

TEST_CASE("alpha and beta") {
    CHECK(alpha(2, 5) == rat(-18, 35));
    CHECK(alpha(0, 9) == -1);
    CHECK(alpha(4, 7) == rat(-5, 11));
    CHECK(beta(2, 5) == rat(-18, 35));
    CHECK(beta(1, 3) == rat(2, 3));
    for (int N = 1; N <= 6; ++N) CHECK(beta(0, N) == -1);
    CHECK_THROWS_AS(alpha(5, 5), Error);
    for (int N = 2; N <= 9; ++N)
        for (int j = 0; j < N; ++j) CHECK(alpha(j, N) == alpha_direct(j, N));
}

TEST_CASE("aggregated r sums match direct sums") {
    for (int s = 1; s <= 8; ++s) {
        UniPoly direct;
        for (const auto& I : enumerate_compositions(s)) direct += build_r(I).poly;
        CHECK(r_sum(s) == direct);
    }
}

TEST_CASE("alpha layer identities") {
    // N=3: 1 + 2/3 + 1 = 8/3
    Rational alt = 0;
    for (int j = 0; j < 3; ++j) alt += Rational(j % 2 ? 1 : -1) * alpha(j, 3);
    CHECK(alt == rat(8, 3));
    CHECK(check_alpha_layer(12).ok());
    CHECK(gen_G(1, 1) == rat(1, 4));
    CHECK(beta(1, 3) * double_factorial(3) / double_factorial(4) == rat(1, 4));
    CHECK(check_gen_f(8).ok());
}

TEST_CASE("refined generating function") {
    CHECK(q_series_coeff({1}, 0) == rat(1, 2));
    auto v = q_series({{1}, {2, 1}}, 1);
    CHECK(v[0] == double_factorial(3) / double_factorial(4) * coeff_a({1}, 3));
    CHECK(v[1] == double_factorial(7) / double_factorial(8) * coeff_a({2, 1}, 5));
    CHECK(check_q_series(4).ok());
}

TEST_CASE("closed forms") {
    CHECK(coeff_a({3}, 4) == rat(-9, 5));
    CHECK(coeff_a({4}, 5) == rat(20, 7));
    CHECK(closed_form_check(9).ok());
}

TEST_CASE("formula JSON round trip and output formats") {
    RecursiveFormula F = assemble_formula(4);
    std::string js = formula_json(F);
    CHECK(js.find("\"source\": \"rpoly\"") != std::string::npos);
    CHECK(js.find("\"coeff\": \"-16/5\"") != std::string::npos);
    RecursiveFormula G = formula_from_json(js);
    CHECK(formula_diff(F, G).empty());
    CHECK(G.terms.size() == F.terms.size());
    CHECK(formula_json(G) == js);
    CHECK_THROWS_AS(formula_from_json("{\"N\": 2}"), Error);

    std::string tex = formula_latex(F);
    CHECK(tex.rfind("Q_8 = \\frac{3}{5} P_2 (Q_6)", 0) == 0);
    CHECK(tex.find("- 4 P_2^2 (Q_4)") != std::string::npos);
    CHECK(tex.find("P_2 P_4 (Q_2)") != std::string::npos);
    CHECK(tex.find("- \\frac{16}{5} i^* \\bar{P}_2^3 (\\bar{Q}_2)") != std::string::npos);
    CHECK(formula_latex(assemble_formula(2)) == "Q_4 = P_2 (Q_2) - 2 i^* \\bar{P}_2 (\\bar{Q}_2)");
    CHECK(formula_text(assemble_formula(2)) == "Q_4 = P_2(Q_2) - 2 i* Pbar_2(Qbar_2)");
}

TEST_CASE("formula diff reports differences") {
    RecursiveFormula F = assemble_formula(3);
    RecursiveFormula G = F;
    G.terms[0].coeff += 1;
    CHECK_FALSE(formula_diff(F, G).empty());
    G = F;
    G.bar_coeff = 0;
    CHECK_FALSE(formula_diff(F, G).empty());
}

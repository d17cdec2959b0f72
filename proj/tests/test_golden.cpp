#include "qcurv/golden.hpp"

#include <doctest.h>

using namespace qcurv;

TEST_CASE("record parsing") {
    auto p = parse_golden_polys("# comment\n1,2;1/2,0,-3/4\n");
    REQUIRE(p.size() == 1);
    CHECK(p[0].index == Composition{1, 2});
    CHECK(p[0].coeffs == std::vector<Rational>{rat(1, 2), 0, rat(-3, 4)});

    auto v = parse_golden_values("v2;1,1;1/2;-1/4\n");
    REQUIRE(v.size() == 1);
    CHECK(v[0].table == "v2");
    CHECK(v[0].x == rat(1, 2));
    CHECK(v[0].value == rat(-1, 4));

    auto a = parse_golden_alpha("4;2;6/4\n");
    REQUIRE(a.size() == 1);
    CHECK(a[0].value == rat(3, 2));

    CHECK_THROWS_AS(parse_golden_values("v2;1,1;1/2\n"), Error);
    CHECK_THROWS_AS(parse_golden_formulas("3;what\n"), Error);
}

TEST_CASE("embedded data is complete") {
    CHECK(golden_polys().size() == 30);
    CHECK(golden_values().size() == 354);
    CHECK(golden_alpha().size() == 55);
    auto f = golden_formulas();
    CHECK(f.size() == 7);
    CHECK(f.begin()->first == 2);
    CHECK(f.rbegin()->first == 8);
    CHECK(f.at(5).terms.size() == 15);
    CHECK(f.at(5).bar_coeff == rat(128, 35));
    CHECK_THROWS_AS(golden_text("nope"), Error);
}

TEST_CASE("engine agrees with the tables") {
    TableSummary s;
    Report rep = verify_tables(&s);
    CHECK(rep.ok());
    CHECK(s.polys == 30);
    CHECK(s.values == 354);
    REQUIRE(s.source_inconsistencies.size() == 1);
    CHECK(s.source_inconsistencies[0].find("3,1,1") != std::string::npos);
    CHECK(verify_alpha_table().ok());
    CHECK(verify_golden_formulas(6).ok());
}

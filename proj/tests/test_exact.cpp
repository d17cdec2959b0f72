#include "qcurv/exact.hpp"

#include <doctest.h>

#include <random>

using namespace qcurv;

TEST_CASE("rational parsing canonicalizes") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("0/7")) == "0/1");
    CHECK(to_string(parse_rational("5")) == "5/1");
    CHECK(to_string(parse_rational(" +12 / 8 ")) == "3/2");
    CHECK(pretty(parse_rational("10/5")) == "2");
    CHECK(latex(rat(-3, 4)) == "-\\frac{3}{4}");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("normalization is idempotent") {
    for (const char* s : {"4/6", "-9/3", "0/5", "17/51"}) {
        Rational q = parse_rational(s);
        CHECK(parse_rational(to_string(q)) == q);
        CHECK(q.get_den() > 0);
        CHECK(gcd(q.get_num(), q.get_den()) == 1);
    }
}

TEST_CASE("double factorial and pochhammer") {
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(-1) == 1);
    CHECK_THROWS_AS(double_factorial(-2), Error);
    CHECK(pochhammer(rat(1, 2), 2) == rat(3, 4));
    CHECK(pochhammer(rat(7, 3), 0) == 1);
    CHECK(binomial(6, 2) == 15);
    CHECK(factorial(5) == 120);
    CHECK(power(rat(-2), -3) == rat(-1, 8));
}

TEST_CASE("polynomial arithmetic") {
    UniPoly x({0, 1});
    CHECK((x * x) == UniPoly({0, 0, 1}));
    UniPoly p({1, 2, 3});
    CHECK((p + UniPoly()) == p);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(UniPoly({1, 0, 0}).degree() == 0);
    CHECK(p(rat(2)) == 17);
    CHECK(UniPoly()(rat(5)) == 0);
    CHECK(p.derivative() == UniPoly({2, 6}));
    CHECK((p * rat(0)).is_zero());
    CHECK(p.str() == "3*x^2 + 2*x + 1");
}

TEST_CASE("ring axioms on sampled polynomials") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto rnd = [&] {
        std::vector<Rational> c;
        for (int i = 0; i < 5; ++i) c.push_back(rat(d(gen), 1 + std::abs(d(gen))));
        return UniPoly(c);
    };
    for (int t = 0; t < 20; ++t) {
        UniPoly a = rnd(), b = rnd(), c = rnd();
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a + b) == (b + a));
    }
}

TEST_CASE("lagrange interpolation") {
    // 3x3 system solved by hand: 2x^2 + 1
    UniPoly p = lagrange_interpolate({{0, 1}, {1, 3}, {2, 9}});
    CHECK(p == UniPoly({1, 0, 2}));

    Rational c = rat(-1, 4);
    UniPoly k = lagrange_interpolate({{rat(1, 2), c}, {rat(-1, 2), c}, {rat(-3, 2), c}});
    CHECK(k == UniPoly::constant(c));

    CHECK_THROWS_WITH_AS(lagrange_interpolate({{1, 2}, {1, 3}}), "degenerate node set", Error);
    CHECK_THROWS_AS(lagrange_interpolate({}), Error);
}

TEST_CASE("interpolation reproduces random node sets") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int size = 1; size <= 12; ++size) {
        std::vector<Node> nodes;
        std::vector<Rational> used;
        while (static_cast<int>(nodes.size()) < size) {
            Rational x = rat(d(gen), 1 + std::abs(d(gen)) % 7);
            bool dup = false;
            for (const auto& u : used) dup = dup || u == x;
            if (dup) continue;
            used.push_back(x);
            nodes.push_back({x, rat(d(gen), 1 + std::abs(d(gen)) % 5)});
        }
        UniPoly p = lagrange_interpolate(nodes);
        CHECK(p.degree() < size);
        for (const auto& nd : nodes) CHECK(p(nd.x) == nd.y);
    }
}

TEST_CASE("lagrange basis is a partition of unity") {
    std::vector<Rational> xs{rat(1, 2), rat(-1, 2), rat(-3, 2), rat(-1), rat(3)};
    auto basis = lagrange_basis(xs);
    UniPoly sum;
    for (const auto& b : basis) sum += b;
    CHECK(sum == UniPoly::constant(1));
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < xs.size(); ++j) CHECK(basis[i](xs[j]) == (i == j ? 1 : 0));
}

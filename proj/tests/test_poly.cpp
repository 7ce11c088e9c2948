#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecurve/poly.hpp"

using namespace freecurve;

namespace {

HomPoly P(const std::string& s) { return HomPoly::parse(s); }

HomPoly random_form(int degree, Rng& rng) {
    HomPoly p(degree);
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree - i; ++j)
            if (rng.uniform(0, 2) != 0) p.add_term({i, j, degree - i - j}, rng.rational());
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK((P("x^2*y") + P("-x^2*y")).is_zero());
    HomPoly q = P("y^2 - 2*x*z");
    CHECK(q * q == P("4*x^2*z^2 - 4*x*y^2*z + y^4"));
    CHECK(q.scaled(rat(3, 2)) == P("3/2*y^2 - 3*x*z"));
    CHECK_THROWS_AS(P("x^2") + P("x^3"), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    CHECK(P("x^3*z").partial(Var::X) == P("3*x^2*z"));
    Rat d = rat(5, 7);
    CHECK(HomPoly::monomial({0, 2, 0}, d).partial(Var::Y) ==
          HomPoly::monomial({0, 1, 0}, 2 * d));
    HomPoly g = P("x^4 + y^4 + z^4");
    HomPoly euler = HomPoly::variable(Var::X) * g.partial(Var::X) +
                    HomPoly::variable(Var::Y) * g.partial(Var::Y) +
                    HomPoly::variable(Var::Z) * g.partial(Var::Z);
    CHECK(euler == g.scaled(Rat(4)));
}

TEST_CASE("Euler identity and commuting mixed partials on random forms") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rng.uniform(2, 6));
        HomPoly p = random_form(d, rng);
        if (p.is_zero()) continue;
        HomPoly euler = HomPoly::variable(Var::X) * p.partial(Var::X) +
                        HomPoly::variable(Var::Y) * p.partial(Var::Y) +
                        HomPoly::variable(Var::Z) * p.partial(Var::Z);
        CHECK(euler == p.scaled(Rat(d)));
        CHECK(p.partial(Var::X).partial(Var::Y) == p.partial(Var::Y).partial(Var::X));
    }
}

TEST_CASE("ring laws on random forms") {
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        HomPoly a = random_form(3, rng), b = random_form(3, rng), c = random_form(2, rng);
        CHECK(a + b == b + a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * c) * c == a * (c * c));
    }
}

TEST_CASE("evaluation") {
    HomPoly q = P("y^2 - 2*x*z");
    CHECK(q.evaluate(Rat(1), Rat(0), Rat(0)) == Rat(0));
    CHECK(q.evaluate(Rat(1), Rat(2), Rat(1)) == Rat(2));
    CHECK(P("x^3*z - y^3*z").evaluate(Rat(1), Rat(1), Rat(5)) == Rat(0));
}

TEST_CASE("canonical text round trip") {
    HomPoly q = P("y^2 - 2*x*z");
    CHECK((q * q).to_string() == "4*x^2*z^2 - 4*x*y^2*z + y^4");
    CHECK(P("  -3/2 * x^2*y + 1/2*z ^3 ").to_string() == "-3/2*x^2*y + 1/2*z^3");
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        HomPoly p = random_form(4, rng);
        if (p.is_zero()) continue;
        CHECK(HomPoly::parse(p.to_string()) == p);
    }
    CHECK(HomPoly(3).to_string() == "0");
    CHECK_THROWS_AS(HomPoly::parse("x + y^2"), std::invalid_argument);
}

TEST_CASE("squarefree test") {
    CHECK_FALSE(squarefree_test(P("x^2*y*z")));
    CHECK(squarefree_test(P("x^3*z - y^3*z")));
    // non-reduced sample: conic counted twice times a transversal conic
    CHECK_FALSE(squarefree_test(P("y^2 - 2*x*z") * P("y^2 - 2*x*z") * P("x^2 + y^2 + z^2")));
    CHECK_THROWS_AS(squarefree_test(HomPoly(2)), std::invalid_argument);
}

TEST_CASE("squarefree test flags squared factors on a random corpus") {
    Rng rng(14);
    for (int trial = 0; trial < 15; ++trial) {
        HomPoly f = random_form(static_cast<int>(rng.uniform(1, 2)), rng);
        HomPoly h = random_form(2, rng);
        if (f.is_zero() || f.degree() < 1 || h.is_zero()) continue;
        CHECK_FALSE(squarefree_test(f * f * h));
    }
    // distinct linear forms stay squarefree
    for (int trial = 0; trial < 10; ++trial) {
        HomPoly a = P("x"), b = P("y"), c = P("z");
        HomPoly l(1);
        l.add_term({1, 0, 0}, rng.rational());
        l.add_term({0, 1, 0}, rng.rational());
        l.add_term({0, 0, 1}, Rat(1));
        CHECK(squarefree_test(a * b * c * l));
    }
}

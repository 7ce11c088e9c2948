#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecurve/generator.hpp"
#include "freecurve/verification.hpp"

using namespace freecurve;

namespace {

HomPoly P(const std::string& s) { return HomPoly::parse(s); }

bool contains_up_to_scale(const std::vector<SyzygyColumn>& space, const SyzygyColumn& t) {
    for (const auto& s : space) {
        // s == c * t for some c: compare cross products of all coefficients
        Rat c(0);
        bool ok = true, have = false;
        for (int slot = 0; slot < 3 && ok; ++slot) {
            for (const auto& [e, v] : t[slot].terms()) {
                Rat w = s[static_cast<std::size_t>(slot)].coeff(e);
                if (!have) {
                    if (sgn(w) == 0) { ok = false; break; }
                    c = w / v;
                    have = true;
                } else if (w != c * v) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // no extra support allowed on this slot
                for (const auto& [e, w] : s[static_cast<std::size_t>(slot)].terms())
                    if (t[slot].coeff(e) * c != w) ok = false;
            }
        }
        if (ok && have) return true;
    }
    return false;
}

CurveCertificate sample_curve(int case_id, int i, int n) {
    FactorSpec s;
    s.case_id = case_id;
    s.i = i;
    for (int d = 1; d <= n; ++d) {
        s.factors.clear();
        for (int t = 0; t < d; ++t) s.factors.emplace_back(Rat(1), Rat(t + 1));
        try {
            return table1_curve(s, n);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::logic_error("no factor count accepted");
}

}  // namespace

TEST_CASE("monomial counts") {
    CHECK(monomial_count(-1) == 0);
    CHECK(monomial_count(0) == 1);
    CHECK(monomial_count(3) == 10);
}

TEST_CASE("degree one syzygy spaces") {
    HomPoly g = P("x^3*z - y^3*z");
    auto s1 = syzygy_space(g, 1);
    REQUIRE(s1.size() == 1);
    SyzygyColumn expected{P("x"), P("y"), P("-3*z")};
    CHECK(contains_up_to_scale(s1, expected));

    CurveCertificate pl = ploski_curve(4, {Rat(1), Rat(1)});
    auto s2 = syzygy_space(pl.g, 1);
    REQUIRE(s2.size() == 1);
    SyzygyColumn yz0{P("y"), P("z"), HomPoly(1)};
    CHECK(contains_up_to_scale(s2, yz0));

    CHECK(syzygy_space(P("x^4 + y^4 + z^4"), 1).empty());
}

TEST_CASE("linear syzygy spaces stay at most one-dimensional on the corpus") {
    for (int n : {4, 5}) {
        for (const auto& [case_id, i] : table1_admissible(n)) {
            CurveCertificate c = sample_curve(case_id, i, n);
            CHECK(syzygy_space(c.g, 1).size() <= 1);
        }
    }
}

TEST_CASE("freeness profile of a known free quartic") {
    FreenessVerdict v = freeness_profile(P("x^3*z - y^3*z"), 5);
    CHECK(v.is_free);
    REQUIRE(v.exponents.has_value());
    CHECK(*v.exponents == std::pair<int, int>{1, 2});
    CHECK(v.exponents->first + v.exponents->second == 3);
    std::vector<long long> observed, predicted;
    for (const auto& row : v.profile) {
        observed.push_back(row[1]);
        predicted.push_back(row[2]);
    }
    CHECK(observed == predicted);
    CHECK(observed == std::vector<long long>{0, 1, 4, 9, 16, 25});
}

TEST_CASE("smooth curves fail the profile at the linear step") {
    FreenessVerdict v = freeness_profile(P("x^4 + y^4 + z^4"), 5);
    CHECK_FALSE(v.is_free);
    CHECK(v.profile[1] == std::array<long long, 3>{1, 0, 1});
}

TEST_CASE("tangent conic pencils are free") {
    CurveCertificate pl = ploski_curve(4, {Rat(1), Rat(1)});
    FreenessVerdict v = freeness_profile(pl.g, 5);
    CHECK(v.is_free);
    CHECK(tjurina_number(pl.g) == 7);
}

TEST_CASE("freeness profile guards") {
    CHECK_THROWS_AS(freeness_profile(P("x^2*y^2*z^2").scaled(Rat(1)), 3), std::invalid_argument);
    // concurrent lines: all partials live in the x,y pencil
    CHECK_THROWS_AS(freeness_profile(P("x^2*y - x*y^2"), 4), std::invalid_argument);
}

TEST_CASE("Tjurina numbers") {
    CHECK(tjurina_number(P("x^3*z - y^3*z")) == 7);
    CHECK(tjurina_number(P("x*y*z")) == 3);
    HomPoly pair = P("y^2 - x*z") * P("y^2 - 2*x*z");
    CHECK(tjurina_number(pair) == 6);
    CHECK_THROWS_AS(tjurina_number(P("x^2*y*z")), std::invalid_argument);
}

TEST_CASE("free corpus curves attain the maximal Tjurina number") {
    for (int n : {4, 5}) {
        long long target = static_cast<long long>(n) * n - 3 * n + 3;
        int tested = 0;
        for (const auto& [case_id, i] : table1_admissible(n)) {
            if (tested++ >= 4) break;
            CurveCertificate c = sample_curve(case_id, i, n);
            FreenessVerdict v = freeness_profile(c.g, n + 1);
            CHECK(v.is_free);
            CHECK(tjurina_number(c.g) == target);
        }
    }
}

TEST_CASE("rank of the evaluated matrix detects quasi-homogeneity") {
    // diagonal syzygy: every singularity quasi-homogeneous
    CurveCertificate c = sample_curve(1, 3, 4);  // z times a split cubic
    QhPoint q = qh_rank_at_point(c.matrix, {Rat(0), Rat(0), Rat(1)});
    CHECK(q.rank >= 1);
    CHECK(q.quasi_homogeneous);

    // the degree 4 conic pair carries a tame tangency: still quasi-homogeneous
    CurveCertificate p4 = ploski_curve(4, {Rat(1), Rat(1)});
    QhPoint q4 = qh_rank_at_point(p4.matrix, {Rat(1), Rat(0), Rat(0)});
    CHECK(q4.rank == 1);
    CHECK(q4.quasi_homogeneous);

    // three or more conics in the pencil: the singularity stops being
    // quasi-homogeneous and the whole matrix vanishes at the point
    for (int n = 5; n <= 8; ++n) {
        std::vector<Rat> lambdas(static_cast<std::size_t>(n / 2), Rat(1));
        CurveCertificate pl = ploski_curve(n, lambdas);
        QhPoint qp = qh_rank_at_point(pl.matrix, {Rat(1), Rat(0), Rat(0)});
        CHECK(qp.rank == 0);
        CHECK_FALSE(qp.quasi_homogeneous);
    }

    CurveCertificate c2 = sample_curve(1, 3, 4);
    CHECK_THROWS_AS(qh_rank_at_point(c2.matrix, {Rat(1), Rat(1), Rat(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(qh_rank_at_point(c2.matrix, {Rat(0), Rat(0), Rat(0)}),
                    std::invalid_argument);
}

TEST_CASE("mixed partials column spans the rest of the syzygies") {
    CurveCertificate c = sample_curve(5, 2, 6);
    CHECK(c.abc == std::array<Int, 3>{8, -1, -4});
    CHECK(buchweitz_conca_check(c.g, {Rat(16), Rat(-2), Rat(-8)}));
    CHECK(buchweitz_conca_check(c.g, {Rat(8), Rat(-1), Rat(-4)}));

    // corpus sweep at n = 5 over rows with all of a, b, c nonzero
    for (const auto& [case_id, i] : table1_admissible(5)) {
        CurveCertificate k = sample_curve(case_id, i, 5);
        if (sgn(Rat(k.abc[1])) == 0 || sgn(Rat(k.abc[2])) == 0) continue;
        CHECK(buchweitz_conca_check(
            k.g, {Rat(k.abc[0]), Rat(k.abc[1]), Rat(k.abc[2])}));
    }

    // b = 0 on row (5) at i = n/2: the guard refuses
    CurveCertificate z = sample_curve(5, 3, 6);
    CHECK(z.abc == std::array<Int, 3>{1, 0, -1});
    CHECK_THROWS_AS(buchweitz_conca_check(z.g, {Rat(1), Rat(0), Rat(-1)}),
                    std::invalid_argument);

    // abc that is not a syzygy at all
    CHECK_THROWS_AS(buchweitz_conca_check(P("x^3*z - y^3*z"), {Rat(1), Rat(2), Rat(3)}),
                    std::invalid_argument);
}

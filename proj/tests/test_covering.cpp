#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcert/covering.hpp"
#include "surfcert/polykernel.hpp"
#include "surfcert/roots.hpp"
#include "surfcert/surface.hpp"

using namespace surfcert;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

QuadExt qi(long long a, long long b) { return QuadExt(rat(a), rat(b), -1); }

const WeierstrassCurve kBase(rat(0), rat(-16));

MapToP1 wu_gamma() {
    return MapToP1(parse_poly("w0*w2 + w1^2 + 16*w2^2"), parse_poly("w0*w1 + w1*w2"),
                   curve_equation(kBase));
}

ConicPencil wu_pencil() {
    return ConicPencil(parse_poly("x0^2 + x1^2 - x2^2"), parse_poly("x0^2 - x1^2"));
}

const UniPoly kBranchReference = UniPoly::from_coeffs_desc(
    "u0", {rat(1), rat(0), rat(60627, 4913), rat(0), rat(159828, 4913), rat(0),
           rat(-3505917, 19652), rat(0), rat(-42057961, 58956), rat(0), rat(76076, 14739), rat(0),
           rat(-4112, 132651)});

}  // namespace

TEST_CASE("curve equation homogenizes the weierstrass model") {
    CHECK(curve_equation(kBase) == parse_poly("w1^2*w2 - w0^3 + 16*w2^3"));
}

TEST_CASE("map validation") {
    CHECK_THROWS_AS(MapToP1(parse_poly("w0"), parse_poly("w0"), curve_equation(kBase)),
                    std::invalid_argument);
    CHECK_THROWS_AS(MapToP1(parse_poly("w0"), parse_poly("w1^2"), curve_equation(kBase)),
                    std::invalid_argument);
}

TEST_CASE("base locus avoids the curve") {
    auto [ok, w] = base_locus_disjoint_check(wu_gamma());
    CHECK(ok);
    for (const auto& c : w.decision.charts) CHECK(c.empty);

    MapToP1 coord(parse_poly("w0"), parse_poly("w1"), curve_equation(kBase));
    auto [ok2, w2] = base_locus_disjoint_check(coord);
    CHECK(ok2);

    // The x-coordinate forms (w0 : w2) share the zero (0:1:0) with the curve.
    MapToP1 xmap(parse_poly("w0"), parse_poly("w2"), curve_equation(kBase));
    auto [ok3, w3] = base_locus_disjoint_check(xmap);
    CHECK(!ok3);
}

TEST_CASE("gamma evaluation on the listed points") {
    MapToP1 g = wu_gamma();
    CHECK(gamma_evaluate(g, {rat(0), rat(1), rat(0)}) == P1Point::at_infinity());

    auto [inf_p, val_p] = gamma_evaluate_qe(g, {qi(0, 0), qi(0, 4), qi(1, 0)});
    CHECK(!inf_p);
    CHECK(val_p.is_zero());
    auto [inf_m, val_m] = gamma_evaluate_qe(g, {qi(0, 0), qi(0, -4), qi(1, 0)});
    CHECK(!inf_m);
    CHECK(val_m.is_zero());

    // Base-locus point of the x-coordinate presentation.
    MapToP1 xmap(parse_poly("w0"), parse_poly("w2"), curve_equation(kBase));
    CHECK_THROWS_AS(gamma_evaluate(xmap, {rat(0), rat(1), rat(0)}), std::domain_error);
}

TEST_CASE("gamma commutes with conjugation on Q(i) points") {
    MapToP1 g = wu_gamma();
    std::vector<std::vector<QuadExt>> pts{{qi(0, 0), qi(0, 4), qi(1, 0)},
                                          {qi(0, 0), qi(0, -4), qi(1, 0)}};
    for (const auto& p : pts) {
        std::vector<QuadExt> conj{p[0].conj(), p[1].conj(), p[2].conj()};
        auto [inf1, v1] = gamma_evaluate_qe(g, p);
        auto [inf2, v2] = gamma_evaluate_qe(g, conj);
        CHECK(inf1 == inf2);
        if (!inf1) CHECK(v1.conj() == v2);
    }
}

TEST_CASE("covering degree") {
    CHECK(gamma_degree(wu_gamma()).degree == 6);
    MapToP1 xmap(parse_poly("w0"), parse_poly("w2"), curve_equation(kBase));
    CHECK(gamma_degree(xmap).degree == 2);
    MapToP1 ymap(parse_poly("w1"), parse_poly("w2"), curve_equation(kBase));
    CHECK(gamma_degree(ymap).degree == 3);
}

TEST_CASE("covering degree is invariant under target scaling") {
    for (long long lam : {2LL, 3LL}) {
        MapToP1 scaled(parse_poly("w0*w2 + w1^2 + 16*w2^2") * rat(lam),
                       parse_poly("w0*w1 + w1*w2"), curve_equation(kBase));
        CHECK(gamma_degree(scaled).degree == 6);
    }
}

TEST_CASE("covering degree agrees across seeds") {
    for (unsigned seed : {0u, 1u, 7u}) CHECK(gamma_degree(wu_gamma(), seed).degree == 6);
}

TEST_CASE("branch locus matches the reference polynomial") {
    UniPoly b = branch_locus(wu_gamma());
    CHECK(b == kBranchReference);
    CHECK(b.leading() == rat(1));
    CHECK(squarefree_part(b) == b);
    CHECK(!b.eval(rat(0)).is_zero());  // nonzero constant term
    CHECK(rational_roots(b).empty());
    CHECK(quad_field_roots(b, -1).empty());
}

TEST_CASE("branch locus of the x-coordinate double cover") {
    MapToP1 xmap(parse_poly("w0"), parse_poly("w2"), curve_equation(kBase));
    UniPoly b = branch_locus(xmap);
    CHECK(b.degree() == 3);
    CHECK(b == UniPoly("u0", {rat(-16), rat(0), rat(0), rat(1)}));  // u0^3 - 16
}

TEST_CASE("branch values avoid the critical locus") {
    UniPoly b = branch_locus(wu_gamma());
    CriticalLocus cl = critical_locus(wu_pencil());
    for (const auto& [p, m] : cl.points) {
        REQUIRE(!p.infinite);
        CHECK(!b.eval(p.t).is_zero());
    }
}

TEST_CASE("etale check over R") {
    UniPoly b = branch_locus(wu_gamma());
    std::vector<P1Point> R{P1Point::finite(rat(0)), P1Point::finite(rat(1)),
                           P1Point::finite(rat(-1))};
    CHECK(etale_over_R_check(b, R));
    CHECK(etale_over_R_check(b, {}));  // empty R: vacuous

    // (u0 - 1) * q(u0) with 1 in R fails.
    UniPoly bad = UniPoly("u0", {rat(-1), rat(1)}) * b;
    CHECK(!etale_over_R_check(bad, R));

    // Infinity handling needs the covering degree and the full affine budget.
    std::vector<P1Point> Rinf{P1Point::at_infinity()};
    CHECK(etale_over_R_check(b, Rinf, 6));
    CHECK(!etale_over_R_check(b, Rinf, 7));
    CHECK_THROWS_AS(etale_over_R_check(b, Rinf), std::invalid_argument);
}

TEST_CASE("x-coordinate covering composed into the critical locus fails etale") {
    // 1/(x - 1) as forms: the chart system picks up the branch value 0,
    // which lies in R.
    MapToP1 moeb(parse_poly("w2"), parse_poly("w0 - w2"), curve_equation(kBase));
    UniPoly b = branch_locus(moeb);
    CHECK(b.eval(rat(0)).is_zero());
    std::vector<P1Point> R{P1Point::finite(rat(0)), P1Point::finite(rat(1)),
                           P1Point::finite(rat(-1))};
    CHECK(!etale_over_R_check(b, R));
}

TEST_CASE("branch locus and degree through the elimination interface") {
    // The branch polynomial is squarefree and monic, and both elimination
    // orders agree through branch_system.
    auto sys = branch_system(wu_gamma());
    UniPoly b1 = eliminate_uni(sys, {"w1", "w0"});
    UniPoly b2 = eliminate_uni(sys, {"w0", "w1"});
    CHECK(UniPoly("u0", b1.coeffs()) == kBranchReference);
    CHECK(UniPoly("u0", b2.coeffs()) == kBranchReference);
}

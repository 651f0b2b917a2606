#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcert/covering.hpp"
#include "surfcert/local_points.hpp"
#include "surfcert/torsion.hpp"

using namespace surfcert;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

const PolyQ kCInf = parse_poly("x0^2 + x1^2 - x2^2");
const PolyQ kC0 = parse_poly("x0^2 - x1^2");
const WeierstrassCurve kBase(rat(0), rat(-16));

}  // namespace

TEST_CASE("projective point counts mod p") {
    CHECK(count_plane_curve_mod_p(kCInf, 7) == 8);    // smooth conic: p + 1
    CHECK(count_plane_curve_mod_p(kC0, 5) == 11);     // two lines through a point: 2p + 1
    CHECK(count_plane_curve_mod_p(curve_equation(kBase), 5) == reduce_and_count(kBase, 5));
    CHECK_THROWS_AS(count_plane_curve_mod_p(kCInf, 4), std::invalid_argument);
}

TEST_CASE("smooth conic counts p + 1 for good odd primes") {
    for (long long p : odd_primes_up_to(50))
        CHECK(count_plane_curve_mod_p(kCInf, p) == p + 1);
}

TEST_CASE("hensel certificates") {
    // (3:2:1) is not on the conic mod 7; (2:2:1) is, with a unit partial.
    CHECK_THROWS_AS(hensel_lift_certify(kCInf, 7, {3, 2, 1}), std::invalid_argument);
    LocalPointCertificate c = hensel_lift_certify(kCInf, 7, {2, 2, 1});
    CHECK(c.valid);
    CHECK(c.unit_partial_index == 0);
    CHECK(c.unit_partial_value == 4);  // d/dx0 = 2*x0 = 4
    CHECK(certificate_replays(kCInf, c));

    // The node of the split conic is the unique non-liftable point.
    LocalPointCertificate node = hensel_lift_certify(kC0, 5, {0, 0, 1});
    CHECK(!node.valid);
    LocalPointCertificate smooth = hensel_lift_certify(kC0, 5, {1, 1, 1});
    CHECK(smooth.valid);
    CHECK(smooth.unit_partial_value == 2);
}

TEST_CASE("node is the unique hensel failure for every odd p <= 50") {
    for (long long p : odd_primes_up_to(50)) {
        long long failures = 0;
        auto consider = [&](long long a, long long b, long long c) {
            std::map<std::string, Fp> pt{{"x0", Fp(a, p)}, {"x1", Fp(b, p)}, {"x2", Fp(c, p)}};
            Fp v = kC0.eval<Fp>(pt, [p](const Rational& r) { return Fp::from_rational(r, p); });
            if (!v.is_zero()) return;
            LocalPointCertificate cert = hensel_lift_certify(kC0, p, {a, b, c});
            if (!cert.valid) {
                ++failures;
                CHECK(a == 0);
                CHECK(b == 0);
            }
        };
        for (long long a = 0; a < p; ++a)
            for (long long b = 0; b < p; ++b) consider(a, b, 1);
        for (long long a = 0; a < p; ++a) consider(a, 1, 0);
        consider(1, 0, 0);
        CHECK(failures == 1);
    }
}

TEST_CASE("real solvability of conics") {
    RealSolvability s1 = real_solvability_conic(kCInf);
    CHECK(s1.solvable);
    CHECK(s1.positives == 2);
    CHECK(s1.negatives == 1);

    RealSolvability s2 = real_solvability_conic(parse_poly("x0^2 + x1^2 + x2^2"));
    CHECK(!s2.solvable);
    CHECK(s2.positives == 3);

    RealSolvability s3 = real_solvability_conic(kC0);
    CHECK(s3.solvable);

    // Needs completing the square first.
    RealSolvability s4 = real_solvability_conic(parse_poly("x0*x1 - x2^2"));
    CHECK(s4.solvable);
    RealSolvability s5 = real_solvability_conic(parse_poly("x0*x1 + x1*x2 + x0*x2"));
    CHECK(s5.solvable);
}

TEST_CASE("weak approximation witness") {
    WAWitness w = wa_witness_build(Place::prime(5), Place::prime(13));
    CHECK(w.p1 == std::array<Rational, 3>{rat(1), rat(1), rat(0)});
    CHECK(w.p2 == std::array<Rational, 3>{rat(1), rat(-1), rat(0)});
    CHECK(w.intersection == std::array<Rational, 3>{rat(0), rat(0), rat(1)});
    CHECK(wa_witness_verify(w));
    CHECK_THROWS_AS(wa_witness_build(Place::prime(5), Place::prime(5)), std::invalid_argument);

    // Tampered witnesses fail re-verification.
    WAWitness bad = w;
    bad.p2 = {rat(1), rat(1), rat(1)};  // on the wrong component
    CHECK(!wa_witness_verify(bad));
    WAWitness bad2 = w;
    bad2.p1 = {rat(0), rat(0), rat(1)};  // the singular point
    CHECK(!wa_witness_verify(bad2));
    WAWitness bad3 = w;
    bad3.component2 = bad3.component1;
    CHECK(!wa_witness_verify(bad3));
}

TEST_CASE("everywhere local sweep on the smooth conic") {
    auto entries = everywhere_local_sweep(kCInf, 50, "F-conic");
    CHECK(entries.size() == odd_primes_up_to(50).size());
    for (const auto& e : entries) {
        REQUIRE(e.cert.has_value());
        CHECK(e.cert->valid);
        CHECK(certificate_replays(kCInf, *e.cert));
    }
}

TEST_CASE("everywhere local sweep on the base curve") {
    auto entries = everywhere_local_sweep(curve_equation(kBase), 50, "base-curve");
    for (const auto& e : entries) {
        if (!good_reduction(kBase, e.p)) continue;
        REQUIRE(e.cert.has_value());
        CHECK(certificate_replays(curve_equation(kBase), *e.cert));
    }
}

TEST_CASE("everywhere local sweep on the split conic") {
    auto entries = everywhere_local_sweep(kC0, 50, "G-conic");
    for (const auto& e : entries) {
        REQUIRE(e.cert.has_value());
        CHECK(e.cert->valid);
    }
    CHECK_THROWS_AS(everywhere_local_sweep(kC0, 2), std::invalid_argument);
}

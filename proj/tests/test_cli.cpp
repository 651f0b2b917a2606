#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcert/config.hpp"
#include "surfcert/pipeline.hpp"
#include "surfcert/report.hpp"

using namespace surfcert;

TEST_CASE("builtin config carries the published instance") {
    PipelineConfig cfg = builtin_config("wu-example");
    CHECK(cfg.curve_a == Rational(0));
    CHECK(cfg.curve_b == Rational(-16));
    CHECK(cfg.quad_d == -1);
    CHECK(cfg.pencil_f == parse_poly("x0^2 + x1^2 - x2^2"));
    CHECK(cfg.pencil_g == parse_poly("x0^2 - x1^2"));
    CHECK(cfg.gamma_num == parse_poly("w0*w2 + w1^2 + 16*w2^2"));
    CHECK(cfg.gamma_den == parse_poly("w0*w1 + w1*w2"));
    CHECK(cfg.claimed_k_points.size() == 1);
    CHECK(cfg.claimed_l_points.size() == 3);
    CHECK_THROWS_AS(builtin_config("nope"), std::invalid_argument);
}

TEST_CASE("config parse errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_config(""), doctest::Contains("missing curve"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("name = x\ncurve_a = 0\ncurve_b = -16\nquad_d = -1\n"
                                      "pencil_f = x0^2\npencil_g = 2*x0^2\n"
                                      "gamma_num = w0\ngamma_den = w1\n"),
                         doctest::Contains("pencil degenerate"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("curve_a 0\n"), doctest::Contains("key = value"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("mystery = 1\n"), doctest::Contains("unknown key"),
                         ConfigError);
}

TEST_CASE("config round trip") {
    PipelineConfig cfg = builtin_config("wu-example");
    PipelineConfig back = parse_config(cfg.serialize());
    CHECK(back.name == cfg.name);
    CHECK(back.curve_a == cfg.curve_a);
    CHECK(back.curve_b == cfg.curve_b);
    CHECK(back.quad_d == cfg.quad_d);
    CHECK(back.pencil_f == cfg.pencil_f);
    CHECK(back.pencil_g == cfg.pencil_g);
    CHECK(back.gamma_num == cfg.gamma_num);
    CHECK(back.gamma_den == cfg.gamma_den);
    CHECK(back.prime_bound == cfg.prime_bound);
    CHECK(back.claimed_k_points.size() == cfg.claimed_k_points.size());
    CHECK(back.claimed_l_points.size() == cfg.claimed_l_points.size());
    CHECK(back.serialize() == cfg.serialize());
}

TEST_CASE("claimed point coordinates parse radicals") {
    PipelineConfig cfg = parse_config(
        "curve_a = 0\ncurve_b = -16\nquad_d = -1\n"
        "pencil_f = x0^2 + x1^2 - x2^2\npencil_g = x0^2 - x1^2\n"
        "gamma_num = w0*w2 + w1^2 + 16*w2^2\ngamma_den = w0*w1 + w1*w2\n"
        "claimed_k_points = (4:4*sqrt(3):1)\n");
    REQUIRE(cfg.claimed_k_points.size() == 1);
    const Coordinate& y = cfg.claimed_k_points[0][1];
    CHECK(y.radicand == 3);
    CHECK(y.b == Rational(4));
    CHECK(!y.fits_field(-1));
}

TEST_CASE("full pipeline on the builtin instance") {
    VerificationReport rep = run_pipeline(builtin_config("wu-example"));
    CHECK(rep.pass());
    CHECK(rep.count(CheckStatus::Assumption) == 1);
    CHECK(rep.count(CheckStatus::Fail) == 0);
    const CheckRecord* assm = rep.find("mordell_weil_finiteness");
    REQUIRE(assm != nullptr);
    CHECK(assm->status == CheckStatus::Assumption);
    for (const char* name :
         {"curve_validity", "torsion_over_q", "torsion_over_l", "point_set_cross_check",
          "base_locus_disjoint", "gamma_point_images", "gamma_degree", "critical_locus",
          "transversality", "total_space_smooth", "branch_locus", "branch_polynomial_reference",
          "etale_over_critical_locus", "surface_assembly", "fiber_specialization",
          "surface_rational_point", "wa_obstruction_witness"}) {
        const CheckRecord* r = rep.find(name);
        REQUIRE_MESSAGE(r != nullptr, name);
        CHECK_MESSAGE(r->status == CheckStatus::Pass, name);
    }
}

TEST_CASE("pipeline negative control: x-coordinate covering") {
    PipelineConfig cfg = builtin_config("wu-example");
    cfg.name = "x-map-control";
    cfg.gamma_num = parse_poly("w2");
    cfg.gamma_den = parse_poly("w0 - w2");
    VerificationReport rep = run_pipeline(cfg);
    CHECK(!rep.pass());
    const CheckRecord* etale = rep.find("etale_over_critical_locus");
    REQUIRE(etale != nullptr);
    CHECK(etale->status == CheckStatus::Fail);
    // Independent stages still ran.
    CHECK(rep.find("wa_obstruction_witness")->status == CheckStatus::Pass);
    CHECK(rep.find("critical_locus")->status == CheckStatus::Pass);
}

TEST_CASE("pipeline negative control: wrong claimed points") {
    PipelineConfig cfg = builtin_config("wu-example");
    cfg.name = "claims-control";
    Coordinate four{Rational(4), Rational(0), 0};
    Coordinate y{Rational(0), Rational(4), 3};  // 4*sqrt(3)
    Coordinate one{Rational(1), Rational(0), 0};
    Coordinate zero{Rational(0), Rational(0), 0};
    cfg.claimed_k_points.push_back({four, y, one});
    VerificationReport rep = run_pipeline(cfg);
    CHECK(!rep.pass());
    const CheckRecord* cross = rep.find("point_set_cross_check");
    REQUIRE(cross != nullptr);
    CHECK(cross->status == CheckStatus::Fail);
    (void)zero;
}

TEST_CASE("report json round trip and determinism") {
    VerificationReport rep = run_pipeline(builtin_config("wu-example"));
    Json j = rep.to_json();
    VerificationReport back = VerificationReport::from_json(j);
    CHECK(back.records.size() == rep.records.size());
    for (size_t i = 0; i < rep.records.size(); ++i) {
        CHECK(back.records[i].name == rep.records[i].name);
        CHECK(back.records[i].status == rep.records[i].status);
        CHECK(back.records[i].anchor == rep.records[i].anchor);
    }
    CHECK(back.to_json().dump(2) == j.dump(2));

    VerificationReport rep2 = run_pipeline(builtin_config("wu-example"));
    CHECK(rep2.to_json().dump(2) == j.dump(2));
}

TEST_CASE("every check carries an anchor or the plumbing tag") {
    VerificationReport rep = run_pipeline(builtin_config("wu-example"));
    for (const auto& r : rep.records) {
        bool anchored = r.anchor == "plumbing" || r.anchor.rfind("ref ", 0) == 0;
        CHECK_MESSAGE(anchored, r.name);
    }
}

TEST_CASE("text report shape") {
    VerificationReport rep = run_pipeline(builtin_config("wu-example"));
    std::string text = rep.to_text(0.5);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("modulo listed assumptions") != std::string::npos);
}

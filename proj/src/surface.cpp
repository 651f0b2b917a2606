#include "surfcert/surface.hpp"

#include "surfcert/polykernel.hpp"
#include "surfcert/roots.hpp"

namespace surfcert {

SurfaceModel assemble_surface(const WeierstrassCurve& curve, const ConicPencil& pencil,
                              const MapToP1& gamma) {
    SurfaceModel X;
    X.w_vars = gamma.w_vars;
    X.x_vars = pencil.x_vars;
    X.equation1 = gamma.num * pencil.F + gamma.den * pencil.G;
    X.equation2 = curve_equation(curve, gamma.w_vars);
    if (X.equation1.degree_in_group(X.w_vars) != 2 || X.equation1.degree_in_group(X.x_vars) != 2)
        throw std::logic_error("assemble_surface: first equation is not of bidegree (2,2)");
    if (X.equation2.degree_in_group(X.w_vars) != 3 || X.equation2.degree_in_group(X.x_vars) != 0)
        throw std::logic_error("assemble_surface: second equation is not of bidegree (3,0)");
    return X;
}

bool surface_point_check_q(const SurfaceModel& X, const std::vector<Rational>& wpoint,
                           const std::vector<Rational>& xpoint) {
    return surface_point_check<Rational>(X, wpoint, xpoint,
                                         [](const Rational& c) { return c; });
}

bool surface_point_check_qe(const SurfaceModel& X, const std::vector<QuadExt>& wpoint,
                            const std::vector<QuadExt>& xpoint) {
    long long d = wpoint.at(0).d();
    return surface_point_check<QuadExt>(
        X, wpoint, xpoint, [d](const Rational& c) { return QuadExt::from_rational(c, d); });
}

MultiPoly<QuadExt> fiber_form(const SurfaceModel& X, const std::vector<QuadExt>& wpoint) {
    long long d = wpoint.at(0).d();
    std::map<std::string, QuadExt> sub;
    for (size_t i = 0; i < 3; ++i) sub[X.w_vars[i]] = wpoint[i];
    return X.equation1.specialize<QuadExt>(
        sub, [d](const Rational& c) { return QuadExt::from_rational(c, d); });
}

bool is_scalar_multiple_qe(const MultiPoly<QuadExt>& f, const PolyQ& g, long long d) {
    if (f.is_zero() || g.is_zero()) return false;
    MultiPoly<QuadExt> ge = g.specialize<QuadExt>(
        {}, [d](const Rational& c) { return QuadExt::from_rational(c, d); });
    auto [fa, gb] = MultiPoly<QuadExt>::aligned(f, ge);
    auto [eg, cg] = gb.leading_term();
    auto it = fa.terms().find(eg);
    if (it == fa.terms().end()) return false;
    QuadExt scale = it->second / cg;
    if (scale.is_zero()) return false;
    return fa == gb * scale;
}

SmoothnessCertificate full_smoothness_certificate(const WeierstrassCurve& curve,
                                                  const ConicPencil& pencil, const MapToP1& gamma,
                                                  unsigned seed) {
    SmoothnessCertificate cert;
    auto push = [&cert](const std::string& name, bool pass, std::string witness) {
        cert.checks.push_back({name, pass, std::move(witness)});
    };

    // 1. Base curve is smooth.
    Rational disc = curve.discriminant();
    push("curve_smooth", !disc.is_zero(), "discriminant = " + disc.str());

    // 2. Transversality of the pencil's base curves.
    try {
        auto [ok, w] = transversality_check(pencil);
        std::string detail = "minors:";
        for (const auto& m : w.minors) detail += " {" + m.str() + "}";
        for (const auto& c : w.decision.charts)
            detail += "; chart " + c.chart_var + ": " +
                      (c.empty ? "empty (" + c.certificate + ")" : "zero found (" + c.certificate + ")");
        push("transversality", ok, detail);
    } catch (const std::exception& e) {
        push("transversality", false, e.what());
    }

    // 3. Smoothness of the incidence locus over P^1.
    try {
        auto [ok, w] = total_space_smoothness(pencil);
        push("total_space_smooth", ok, w.chain);
    } catch (const std::exception& e) {
        push("total_space_smooth", false, e.what());
    }

    // 4. Critical locus of the pencil.
    std::vector<P1Point> R;
    bool crit_ok = false;
    try {
        CriticalLocus cl = critical_locus(pencil);
        crit_ok = !cl.irrational_factor.has_value();
        std::string detail = "det = " + cl.determinant.str() + "; points:";
        for (const auto& [p, m] : cl.points) {
            detail += " " + p.str() + (m > 1 ? "^" + std::to_string(m) : "");
            R.push_back(p);
        }
        if (cl.irrational_factor)
            detail += "; irrational factor " + cl.irrational_factor->str();
        push("critical_locus", crit_ok, detail);
    } catch (const std::exception& e) {
        push("critical_locus", false, e.what());
    }

    // 5. Branch locus of the covering.
    std::optional<UniPoly> branch;
    try {
        branch = branch_locus(gamma);
        push("branch_locus", true, "branch polynomial = " + branch->str());
    } catch (const std::exception& e) {
        push("branch_locus", false, e.what());
    }

    // 6. The covering is unramified over the critical locus.
    if (branch && crit_ok) {
        std::optional<int> degree;
        std::string extra;
        try {
            degree = gamma_degree(gamma, seed).degree;
            // Ramification bookkeeping: a full affine branch divisor of a
            // genus-one covering leaves no branching at infinity.
            bool affine_complete = branch->degree() == 2 * *degree;
            extra = "; covering degree " + std::to_string(*degree) +
                    (affine_complete ? "; branch locus complete in the finite chart"
                                     : "; possible branching at infinity");
        } catch (const std::exception&) {
            extra = "; covering degree unavailable";
        }
        try {
            bool ok = etale_over_R_check(*branch, R, degree);
            std::string vals;
            for (const auto& r : R)
                if (!r.infinite) vals += " b(" + r.t.str() + ") = " + branch->eval(r.t).str();
            push("etale_over_critical_locus", ok, "values:" + vals + extra);
        } catch (const std::exception& e) {
            push("etale_over_critical_locus", false, e.what());
        }
    } else {
        push("etale_over_critical_locus", false, "dependencies failed");
    }

    cert.pass = true;
    for (const auto& c : cert.checks) cert.pass = cert.pass && c.pass;
    return cert;
}

}  // namespace surfcert

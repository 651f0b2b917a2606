#include "surfcert/projective_zero.hpp"

#include "surfcert/polykernel.hpp"
#include "surfcert/roots.hpp"
#include "surfcert/unipoly.hpp"

#include <set>

namespace surfcert {

namespace {

struct AffineResult {
    bool empty;
    std::string certificate;
    std::optional<AffineWitness> witness;
};

PolyQ substitute_one(const PolyQ& f, const std::string& v, const Rational& val) {
    std::map<std::string, Rational> sub{{v, val}};
    return f.specialize<Rational>(sub, [](const Rational& c) { return c; }).prune_vars();
}

// Solvability of a univariate system: all polys in var z (or constants).
AffineResult solve_univariate(const std::vector<PolyQ>& polys, const std::string& z) {
    UniPoly g(z);
    bool all_zero = true;
    for (const auto& f : polys) {
        if (f.is_zero()) continue;
        all_zero = false;
        if (f.is_constant()) return {true, "unit constraint " + f.str(), std::nullopt};
        g = g.is_zero() ? UniPoly::from_multipoly(f, z) : gcd(g, UniPoly::from_multipoly(f, z));
    }
    if (all_zero) {
        AffineWitness w{true, {Rational(0)}, ""};
        return {false, "system vanishes identically", w};
    }
    if (g.degree() < 1) return {true, "coprime univariate constraints", std::nullopt};
    auto roots = rational_roots(g);
    if (!roots.empty()) {
        AffineWitness w{true, {roots[0]}, ""};
        return {false, "root of " + g.str(), w};
    }
    AffineWitness w{false, {}, "algebraic root of " + g.str()};
    return {false, "nonconstant gcd " + g.str(), w};
}

AffineResult solve_affine(std::vector<PolyQ> polys, const std::string& y, const std::string& z,
                          int depth);

// Handle a pair with identically-zero resultant by gcd splitting.
AffineResult split_on_pair(const std::vector<PolyQ>& polys, size_t i, size_t j,
                           const std::string& y, const std::string& z, int depth) {
    PolyQ h = gcd_mp(polys[i], polys[j]);
    std::vector<PolyQ> with_h;
    for (size_t k = 0; k < polys.size(); ++k)
        if (k != i && k != j) with_h.push_back(polys[k]);
    std::vector<PolyQ> reduced = with_h;
    with_h.push_back(h);
    auto qi = try_exact_divide(polys[i], h);
    auto qj = try_exact_divide(polys[j], h);
    if (!qi || !qj) throw std::logic_error("projective zero decision: inexact gcd division");
    reduced.push_back(*qi);
    reduced.push_back(*qj);
    AffineResult a = solve_affine(with_h, y, z, depth + 1);
    if (!a.empty) return a;
    AffineResult b = solve_affine(reduced, y, z, depth + 1);
    if (!b.empty) return b;
    return {true, "split branches both empty (" + a.certificate + "; " + b.certificate + ")",
            std::nullopt};
}

AffineResult solve_affine(std::vector<PolyQ> polys, const std::string& y, const std::string& z,
                          int depth) {
    if (depth > 16) throw std::runtime_error("projective zero decision: split recursion too deep");

    std::vector<PolyQ> sys;
    for (auto& f : polys) {
        PolyQ p = f.prune_vars();
        if (p.is_zero()) continue;
        if (p.is_constant()) return {true, "unit constraint " + p.str(), std::nullopt};
        sys.push_back(p);
    }
    if (sys.empty()) {
        AffineWitness w{true, {Rational(0), Rational(0)}, ""};
        return {false, "system vanishes identically", w};
    }

    // Common factor across the whole system: a curve of common zeros.
    PolyQ g_all = sys[0];
    for (size_t i = 1; i < sys.size() && !g_all.is_constant(); ++i) g_all = gcd_mp(g_all, sys[i]);
    if (!g_all.is_constant()) {
        AffineWitness w{false, {}, "common factor " + g_all.str()};
        // Try to pin a rational point on the factor for the record.
        for (int a = -5; a <= 5 && !w.rational; ++a)
            for (int b = -5; b <= 5; ++b) {
                std::map<std::string, Rational> sub{{y, Rational(a)}, {z, Rational(b)}};
                bool ok = true;
                for (const auto& f : sys) {
                    std::map<std::string, Rational> pt;
                    for (const auto& v : f.vars()) pt[v] = sub.count(v) ? sub[v] : Rational(0);
                    if (!f.eval_same(pt).is_zero()) { ok = false; break; }
                }
                if (ok) {
                    w.rational = true;
                    w.point = {Rational(a), Rational(b)};
                    break;
                }
            }
        return {false, "common factor " + g_all.str(), w};
    }

    std::set<std::string> present;
    for (const auto& f : sys)
        for (const auto& v : f.vars()) present.insert(v);
    if (present.empty()) return {true, "constants only", std::nullopt};
    if (present.size() == 1) return solve_univariate(sys, *present.begin());

    // Eliminate z; keep y.
    std::vector<PolyQ> zfull, zfree;
    for (const auto& f : sys) {
        if (f.degree_in(z) >= 1) zfull.push_back(f);
        else zfree.push_back(f);
    }

    std::vector<PolyQ> projected = zfree;
    for (size_t i = 0; i < zfull.size(); ++i)
        for (size_t j = i + 1; j < zfull.size(); ++j) {
            PolyQ r = resultant_wrt(zfull[i], zfull[j], z).prune_vars();
            if (r.is_zero()) {
                // Locate original indices for the splitter.
                std::vector<PolyQ> all = sys;
                size_t ii = 0, jj = 0;
                for (size_t k = 0; k < all.size(); ++k) {
                    if (all[k] == zfull[i]) ii = k;
                    if (all[k] == zfull[j]) jj = k;
                }
                return split_on_pair(all, ii, jj, y, z, depth);
            }
            projected.push_back(r);
        }

    if (zfull.size() == 1 && zfree.empty()) {
        // Single bivariate constraint: its zero set is a curve.
        AffineWitness w{false, {}, "plane curve " + zfull[0].str()};
        for (int a = -6; a <= 6 && !w.rational; ++a) {
            PolyQ slice = substitute_one(zfull[0], y, Rational(a));
            if (slice.is_zero()) {
                w.rational = true;
                w.point = {Rational(a), Rational(0)};
                break;
            }
            if (slice.is_constant()) continue;
            auto roots = rational_roots(UniPoly::from_multipoly(slice, z));
            if (!roots.empty()) {
                w.rational = true;
                w.point = {Rational(a), roots[0]};
            }
        }
        if (!w.rational) {
            // Any nonconstant bivariate polynomial has zeros over the closure.
            for (int a = -6; a <= 6; ++a) {
                PolyQ slice = substitute_one(zfull[0], y, Rational(a));
                if (!slice.is_constant()) {
                    w.detail = "algebraic point above " + y + " = " + std::to_string(a);
                    break;
                }
            }
        }
        return {false, "single curve constraint", w};
    }

    UniPoly G(y);
    for (const auto& f : projected) {
        if (f.is_zero()) continue;
        if (f.is_constant()) return {true, "eliminant constant " + f.str(), std::nullopt};
        if (f.degree_in(y) == 0)
            throw std::runtime_error("projective zero decision: projected constraint in wrong variable");
        G = G.is_zero() ? UniPoly::from_multipoly(f, y).primitive()
                        : gcd(G, UniPoly::from_multipoly(f, y));
        if (!G.is_zero() && G.degree() == 0) return {true, "coprime eliminants", std::nullopt};
    }
    if (G.is_zero())
        throw std::runtime_error("projective zero decision: no projected constraints");

    auto [roots, complete] = rational_roots_with_multiplicity(G);
    for (const auto& [y0, mult] : roots) {
        std::vector<PolyQ> zsys;
        bool infeasible = false;
        bool all_zero = true;
        for (const auto& f : sys) {
            PolyQ s = substitute_one(f, y, y0);
            if (s.is_zero()) continue;
            all_zero = false;
            if (s.is_constant()) { infeasible = true; break; }
            zsys.push_back(s);
        }
        if (infeasible) continue;
        if (all_zero) {
            AffineWitness w{true, {y0, Rational(0)}, ""};
            return {false, "fiber vanishes identically", w};
        }
        AffineResult sub = solve_univariate(zsys, z);
        if (!sub.empty) {
            AffineWitness w{false, {}, ""};
            if (sub.witness && sub.witness->rational) {
                w.rational = true;
                w.point = {y0, sub.witness->point[0]};
            } else {
                w.detail = y + " = " + y0.str() + ", " + (sub.witness ? sub.witness->detail : "");
            }
            return {false, "candidate " + y + " = " + y0.str() + " extends", w};
        }
    }
    if (complete) return {true, "all rational candidates fail to extend", std::nullopt};

    // Irrational candidate values remain; retry with the variables swapped.
    if (depth == 0) {
        AffineResult swapped = solve_affine(sys, z, y, depth + 1);
        if (swapped.empty) return swapped;
        if (swapped.witness && swapped.witness->rational) {
            std::swap(swapped.witness->point[0], swapped.witness->point[1]);
            return swapped;
        }
    }
    throw std::runtime_error(
        "projective zero decision: irrational candidate locus, unsupported input shape");
}

}  // namespace

ProjectiveDecision decide_projective_zeros(const std::vector<PolyQ>& system,
                                           const std::vector<std::string>& vars3) {
    if (vars3.size() != 3)
        throw std::invalid_argument("decide_projective_zeros: need exactly three variables");
    for (const auto& f : system)
        if (!f.is_homogeneous())
            throw std::invalid_argument("decide_projective_zeros: system must be homogeneous");

    ProjectiveDecision out;
    for (size_t i = 0; i < 3; ++i) {
        std::string chart = vars3[i];
        std::string y = vars3[(i + 1) % 3], z = vars3[(i + 2) % 3];
        std::vector<PolyQ> affine;
        for (const auto& f : system) affine.push_back(substitute_one(f, chart, Rational(1)));
        AffineResult res = solve_affine(affine, y, z, 0);
        ChartOutcome oc;
        oc.chart_var = chart;
        oc.empty = res.empty;
        oc.certificate = res.certificate;
        if (res.witness) {
            AffineWitness w = *res.witness;
            if (w.rational) {
                // Lift to projective coordinates in vars3 order.
                std::vector<Rational> proj(3, Rational(0));
                proj[i] = Rational(1);
                proj[(i + 1) % 3] = w.point[0];
                proj[(i + 2) % 3] = w.point[1];
                w.point = proj;
            }
            oc.witness = w;
        }
        if (!res.empty) out.empty = false;
        out.charts.push_back(std::move(oc));
    }
    return out;
}

}  // namespace surfcert

#pragma once

#include "surfcert/elliptic.hpp"
#include "surfcert/pencil.hpp"
#include "surfcert/projective_zero.hpp"
#include "surfcert/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfcert {

// Rational map to P^1 given by two homogeneous forms of equal degree on the
// ambient plane of a Weierstrass curve.
struct MapToP1 {
    PolyQ num, den;
    PolyQ curve_eq;                   // homogeneous cubic of the domain curve
    std::vector<std::string> w_vars;  // ambient coordinates, e.g. {w0, w1, w2}

    MapToP1(PolyQ n, PolyQ d, PolyQ curve, std::vector<std::string> wv = {"w0", "w1", "w2"});
};

// Homogeneous curve equation w1^2 w2 - w0^3 - a w0 w2^2 - b w2^3 of a
// short Weierstrass model.
PolyQ curve_equation(const WeierstrassCurve& c, const std::vector<std::string>& w_vars = {"w0", "w1",
                                                                                          "w2"});

struct BaseLocusWitness {
    ProjectiveDecision decision;
};

// True iff {num, den, curve} has no common projective zero.
std::pair<bool, BaseLocusWitness> base_locus_disjoint_check(const MapToP1& gamma);

// Evaluate the map at a curve point with coordinates in F; signals a
// base-locus point when both forms vanish.
template <typename F>
std::pair<F, F> gamma_evaluate_raw(const MapToP1& gamma, const std::vector<F>& wpoint,
                                   const std::function<F(const Rational&)>& embed) {
    if (wpoint.size() != 3) throw std::invalid_argument("gamma_evaluate: need three coordinates");
    std::map<std::string, F> pt;
    for (size_t i = 0; i < 3; ++i) pt[gamma.w_vars[i]] = wpoint[i];
    F n = gamma.num.eval<F>(pt, embed);
    F d = gamma.den.eval<F>(pt, embed);
    if (n.is_zero() && d.is_zero())
        throw std::domain_error("gamma_evaluate: base-locus point");
    return {n, d};
}

// Normalized P^1 image of a rational point.
P1Point gamma_evaluate(const MapToP1& gamma, const std::vector<Rational>& wpoint);

// Normalized image of a Q(sqrt(d)) point: (1:0), or (t:1) with t in the field.
std::pair<bool, QuadExt> gamma_evaluate_qe(const MapToP1& gamma, const std::vector<QuadExt>& wpoint);

struct GammaDegreeResult {
    int degree = 0;
    std::vector<Rational> samples;  // parameter draws actually used
};

// Covering degree by sampled fiber elimination: for seeded rational t, the
// eliminant of {curve, num - t*den} in each single surviving variable; the
// degree is the larger orientation, and two samples must agree.
GammaDegreeResult gamma_degree(const MapToP1& gamma, unsigned seed = 0);

// Monic squarefree eliminant of the dehomogenized branch system
// {curve, num - u0*den, jacobian}, eliminating the two curve variables.
UniPoly branch_locus(const MapToP1& gamma);

// The dehomogenized branch system itself (chart w2 = 1): curve, fiber at u0,
// and the Jacobian determinant of the pair in the two chart variables.
std::vector<PolyQ> branch_system(const MapToP1& gamma);

// True iff the branch polynomial is nonzero on every finite point of R; when
// (1:0) lies in R the homogenized-eliminant degree must match the
// ramification total 2*degree(gamma) of a genus-one covering.
bool etale_over_R_check(const UniPoly& branch, const std::vector<P1Point>& R,
                        std::optional<int> covering_degree = std::nullopt);

}  // namespace surfcert

#pragma once

#include "surfcert/covering.hpp"
#include "surfcert/elliptic.hpp"
#include "surfcert/pencil.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfcert {

// Surface in P^2 x P^2 cut out by a bidegree-(2,2) equation together with the
// curve cubic (bidegree (3,0)).
struct SurfaceModel {
    PolyQ equation1;  // num(gamma)*F + den(gamma)*G
    PolyQ equation2;  // homogeneous curve equation
    std::vector<std::string> w_vars, x_vars;
};

SurfaceModel assemble_surface(const WeierstrassCurve& curve, const ConicPencil& pencil,
                              const MapToP1& gamma);

// Both equations vanish at the pair of projective points.
template <typename F>
bool surface_point_check(const SurfaceModel& X, const std::vector<F>& wpoint,
                         const std::vector<F>& xpoint,
                         const std::function<F(const Rational&)>& embed) {
    if (wpoint.size() != 3 || xpoint.size() != 3)
        throw std::invalid_argument("surface_point_check: need three coordinates per factor");
    std::map<std::string, F> pt;
    for (size_t i = 0; i < 3; ++i) pt[X.w_vars[i]] = wpoint[i];
    for (size_t i = 0; i < 3; ++i) pt[X.x_vars[i]] = xpoint[i];
    std::map<std::string, F> wonly;
    for (size_t i = 0; i < 3; ++i) wonly[X.w_vars[i]] = wpoint[i];
    return X.equation1.eval<F>(pt, embed).is_zero() &&
           X.equation2.eval<F>(wonly, embed).is_zero();
}

bool surface_point_check_q(const SurfaceModel& X, const std::vector<Rational>& wpoint,
                           const std::vector<Rational>& xpoint);
bool surface_point_check_qe(const SurfaceModel& X, const std::vector<QuadExt>& wpoint,
                            const std::vector<QuadExt>& xpoint);

// The first equation with the w-point substituted: a quadric in x over F.
MultiPoly<QuadExt> fiber_form(const SurfaceModel& X, const std::vector<QuadExt>& wpoint);

// Is f a nonzero F-scalar multiple of the rational form g?
bool is_scalar_multiple_qe(const MultiPoly<QuadExt>& f, const PolyQ& g, long long d);

struct SmoothnessSubCheck {
    std::string name;
    bool pass = false;
    std::string witness;
};

// The paper-style implication chain: base curve smooth, transversal pencil,
// smooth incidence locus, critical locus, branch locus, and branch/critical
// disjointness; passing certifies smoothness of the assembled surface via the
// fibration criterion.
struct SmoothnessCertificate {
    std::vector<SmoothnessSubCheck> checks;
    bool pass = false;
    std::string label = "smoothness via fibration criterion";

    const SmoothnessSubCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

SmoothnessCertificate full_smoothness_certificate(const WeierstrassCurve& curve,
                                                  const ConicPencil& pencil, const MapToP1& gamma,
                                                  unsigned seed = 0);

}  // namespace surfcert

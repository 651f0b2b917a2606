#pragma once

#include "surfcert/multipoly.hpp"
#include "surfcert/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfcert {

// Exact division; empty when the division is not exact.
std::optional<PolyQ> try_exact_divide(const PolyQ& f, const PolyQ& g);

// GCD for polynomials in at most two variables (primitive PRS in the main
// variable, univariate Euclid below). Result is primitive with positive
// leading sign.
PolyQ gcd_mp(const PolyQ& a, const PolyQ& b);

// Content of f viewed in (Q[rest])[v]: gcd of the v-coefficients.
PolyQ content_wrt(const PolyQ& f, const std::string& v);

// f with rational content removed and sign normalized (integer-primitive).
PolyQ primitive_part_q(const PolyQ& f);

// Squarefree reduction of f with respect to v (requires <= 2 variables).
PolyQ squarefree_wrt(const PolyQ& f, const std::string& v);

// Determinant of a square matrix of polynomials, exact, by recursive
// evaluation/interpolation down to rational Gaussian elimination.
PolyQ det_poly_matrix(const std::vector<std::vector<PolyQ>>& m);

// Sylvester resultant of f and g with respect to v (both of positive degree).
PolyQ resultant_wrt(const PolyQ& f, const PolyQ& g, const std::string& v);

struct EliminationError : std::runtime_error {
    explicit EliminationError(const std::string& stage, const std::string& what)
        : std::runtime_error("elimination failed at " + stage + ": " + what), stage_name(stage) {}
    std::string stage_name;
};

// Iterated pairwise-resultant elimination. Drops the listed variables in
// order; contents with respect to the stage variable fork the system (the
// zero set of content*pp is a union). The result vanishes on the projection
// of the solution set. With one remaining variable the output is the monic
// squarefree gcd of the surviving univariate constraints; otherwise the
// primitive sign-normalized combination.
PolyQ eliminate(const std::vector<PolyQ>& system, const std::vector<std::string>& drop_vars);

// Same pipeline, returned as a UniPoly (exactly one variable may remain).
UniPoly eliminate_uni(const std::vector<PolyQ>& system, const std::vector<std::string>& drop_vars);

}  // namespace surfcert

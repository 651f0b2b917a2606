#pragma once

#include "surfcert/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfcert {

struct AffineWitness {
    bool rational = false;
    std::vector<Rational> point;   // filled when rational
    std::string detail;            // structural description otherwise
};

struct ChartOutcome {
    std::string chart_var;
    bool empty = true;
    std::string certificate;       // eliminant constants / common factor / witness
    std::optional<AffineWitness> witness;
};

struct ProjectiveDecision {
    bool empty = true;
    std::vector<ChartOutcome> charts;
};

// Decide whether a homogeneous system in exactly three variables has a common
// zero in the projective plane over the algebraic closure. Chart-by-chart
// resultant elimination with exact back-substitution at rational candidates;
// inputs whose candidate loci stay irrational in both chart orientations are
// rejected as out of scope.
ProjectiveDecision decide_projective_zeros(const std::vector<PolyQ>& system,
                                           const std::vector<std::string>& vars3);

}  // namespace surfcert

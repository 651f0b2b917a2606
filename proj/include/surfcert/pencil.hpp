#pragma once

#include "surfcert/multipoly.hpp"
#include "surfcert/projective_zero.hpp"
#include "surfcert/unipoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace surfcert {

// Point of the projective line, normalized to (t : 1) or (1 : 0).
struct P1Point {
    bool infinite = false;
    Rational t;  // meaningful when finite

    static P1Point at_infinity() { return {true, Rational(0)}; }
    static P1Point finite(Rational v) { return {false, std::move(v)}; }

    friend bool operator==(const P1Point& a, const P1Point& b) {
        return a.infinite == b.infinite && (a.infinite || a.t == b.t);
    }
    std::string str() const { return infinite ? "(1:0)" : "(" + t.str() + ":1)"; }
};

// Pencil u0*F + u1*G of plane conics; F, G homogeneous quadrics in x0, x1, x2,
// not proportional.
struct ConicPencil {
    PolyQ F, G;
    std::vector<std::string> x_vars;  // the three plane coordinates

    ConicPencil(PolyQ f, PolyQ g, std::vector<std::string> xv = {"x0", "x1", "x2"});
};

// Symmetric matrix of a quadric: q = x^T M x, off-diagonal entries halved.
std::array<std::array<Rational, 3>, 3> conic_matrix(const PolyQ& q,
                                                    const std::vector<std::string>& x_vars);

// Matrix of the pencil member u0 F + u1 G; entries linear in (u0, u1).
std::array<std::array<PolyQ, 3>, 3> pencil_matrix(const ConicPencil& pencil);

struct CriticalLocus {
    std::vector<std::pair<P1Point, int>> points;   // with multiplicity
    std::optional<UniPoly> irrational_factor;      // defining factor if roots leave Q
    PolyQ determinant;                             // det of the pencil matrix in (u0, u1)
};

// Parameters over which the pencil's total space fails to be smooth over P^1:
// the vanishing of det(u0 M_F + u1 M_G).
CriticalLocus critical_locus(const ConicPencil& pencil);

struct TransversalityWitness {
    std::vector<PolyQ> minors;          // 2x2 minors of the stacked gradients
    ProjectiveDecision decision;        // chart-by-chart elimination outcome
};

// True iff {F, G, minors} has no common projective zero.
std::pair<bool, TransversalityWitness> transversality_check(const ConicPencil& pencil);

struct TotalSpaceWitness {
    bool transversal = false;
    std::string chain;                  // the implication chain, humanly readable
};

// Smoothness of the incidence locus {u0 F + u1 G = 0} in P^1 x P^2: a singular
// point would force F = G = 0 with dependent gradients, which transversality
// excludes.
std::pair<bool, TotalSpaceWitness> total_space_smoothness(const ConicPencil& pencil);

}  // namespace surfcert

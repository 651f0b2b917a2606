#pragma once

#include "surfcert/multipoly.hpp"
#include "surfcert/prime_field.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace surfcert {

// Place of Q: an odd prime, or the real place.
struct Place {
    bool real = false;
    long long p = 0;

    static Place real_place() { return {true, 0}; }
    static Place prime(long long p) { return {false, p}; }
    friend bool operator==(const Place& a, const Place& b) {
        return a.real == b.real && (a.real || a.p == b.p);
    }
    std::string str() const { return real ? "real" : std::to_string(p); }
};

// Mod-p point with the simple-root lifting hypothesis: the curve equation
// vanishes and some partial derivative is a unit.
struct LocalPointCertificate {
    long long p = 0;
    std::string curve_id;
    std::array<long long, 3> point{0, 0, 0};
    bool valid = false;
    int unit_partial_index = -1;    // which partial is nonzero mod p
    long long unit_partial_value = 0;
};

// Number of projective F_p points of a plane curve, by chart enumeration.
long long count_plane_curve_mod_p(const PolyQ& f, long long p);

// Certificate for a given mod-p point (which must satisfy f = 0 mod p).
LocalPointCertificate hensel_lift_certify(const PolyQ& f, long long p,
                                          const std::array<long long, 3>& point,
                                          const std::string& curve_id = "");

// Re-check a serialized certificate from its own data.
bool certificate_replays(const PolyQ& f, const LocalPointCertificate& cert);

struct RealSolvability {
    bool solvable = false;
    int positives = 0, negatives = 0, zeros = 0;
};

// Signature decision for a plane conic over R (diagonalization by congruence).
RealSolvability real_solvability_conic(const PolyQ& q,
                                       const std::vector<std::string>& x_vars = {"x0", "x1", "x2"});

// Weak-approximation failure witness on the split pair of lines x0^2 = x1^2:
// two points on distinct components with the unique intersection avoided.
struct WAWitness {
    Place v1, v2;
    std::array<Rational, 3> p1, p2;           // on x0 = x1 and x0 = -x1
    std::array<Rational, 3> intersection;     // the shared singular point
    PolyQ component1, component2;             // the two linear forms
};

WAWitness wa_witness_build(const Place& v1, const Place& v2);

// The three structural assertions, re-checked from the witness coordinates.
bool wa_witness_verify(const WAWitness& w);

struct SweepEntry {
    long long p;
    std::optional<LocalPointCertificate> cert;  // empty when no smooth point found
};

// A certified smooth point modulo every odd prime p <= bound, where one exists.
std::vector<SweepEntry> everywhere_local_sweep(const PolyQ& f, long long bound,
                                               const std::string& curve_id = "");

}  // namespace surfcert

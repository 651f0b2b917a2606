#pragma once

#include "surfcert/elliptic.hpp"

#include <string>
#include <vector>

namespace surfcert {

// Torsion determination result. Points are closed under negation and the
// group law (checked at construction).
struct TorsionReport {
    long long order = 1;
    std::vector<ECPointQE> points;       // includes the identity
    std::vector<std::string> methods;    // lutz-nagell | division-poly | reduction-bound
    std::vector<std::string> assumptions;

    static TorsionReport make(const WeierstrassCurve& curve, long long d,
                              std::vector<ECPointQE> pts, std::vector<std::string> methods,
                              std::vector<std::string> assumptions);
};

// Full rational torsion subgroup by Lutz-Nagell enumeration (integer a, b).
TorsionReport lutz_nagell_torsion(const WeierstrassCurve& curve);

// #E(F_p) by direct enumeration; p odd, good reduction.
long long reduce_and_count(const WeierstrassCurve& curve, long long p);

bool good_reduction(const WeierstrassCurve& curve, long long p);

// gcd of #E(F_p) over the prime list; bounds torsion order.
long long torsion_bound_gcd(const WeierstrassCurve& curve, const std::vector<long long>& primes);

// Odd good primes p with (d/p) = 1, smallest first.
std::vector<long long> split_primes_for(const WeierstrassCurve& curve, long long d, int count);

// Full torsion of E over Q(sqrt(d)): reduction bound over split primes, then
// 2- and 3-division polynomial roots in the field. A bound with a prime
// factor outside {2, 3} is reported as "bound too weak".
TorsionReport torsion_over_quadratic_field(const WeierstrassCurve& curve, long long d,
                                           const std::vector<long long>& split_primes = {});

}  // namespace surfcert

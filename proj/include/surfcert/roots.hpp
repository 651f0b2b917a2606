#pragma once

#include "surfcert/quadratic_field.hpp"
#include "surfcert/unipoly.hpp"

#include <set>
#include <vector>

namespace surfcert {

// Trial-division factorization. Throws past the desk-scale cap.
std::vector<std::pair<BigInt, int>> factorize(BigInt n);

std::vector<BigInt> divisors(const BigInt& n);

// All rational roots of f (f nonzero), by divisor search on the primitive
// integer model.
std::vector<Rational> rational_roots(const UniPoly& f);

// Roots with multiplicity; the returned flag is false if irrational roots remain.
std::pair<std::vector<std::pair<Rational, int>>, bool> rational_roots_with_multiplicity(const UniPoly& f);

// All roots of f lying in Q(sqrt(d)), exact. Rational roots are found by
// divisor search; the strictly quadratic ones through the real/radical part
// split f(a + b*sqrt(d)) = A(a, b^2) + b*C(a, b^2)*sqrt(d) and a resultant in
// the b^2 slot.
std::vector<QuadExt> quad_field_roots(const UniPoly& f, long long d);

}  // namespace surfcert

#include "surfcert/torsion.hpp"

#include "surfcert/prime_field.hpp"
#include "surfcert/roots.hpp"
#include "surfcert/unipoly.hpp"

#include <algorithm>
#include <numeric>

namespace surfcert {

namespace {

constexpr long long kOrderCeiling = 12;

QuadExt embed(const Rational& r, long long d) { return QuadExt::from_rational(r, d); }

// Order of a point by repeated addition, capped.
long long point_order(const WeierstrassCurve& c, const ECPointQE& p, long long d) {
    QuadExt a = embed(c.a(), d);
    ECPointQE acc = p;
    for (long long n = 1; n <= kOrderCeiling; ++n) {
        if (acc.is_infinity()) return n;
        acc = ec_add(acc, p, a);
    }
    return 0;  // not torsion within the ceiling
}

}  // namespace

TorsionReport TorsionReport::make(const WeierstrassCurve& curve, long long d,
                                  std::vector<ECPointQE> pts, std::vector<std::string> methods,
                                  std::vector<std::string> assumptions) {
    QuadExt a = embed(curve.a(), d);
    QuadExt b = embed(curve.b(), d);
    bool has_identity = false;
    for (const auto& p : pts) {
        if (p.is_infinity()) has_identity = true;
        if (!on_curve(curve, p, a, b))
            throw std::invalid_argument("TorsionReport: point not on curve: " + p.str());
    }
    if (!has_identity) pts.push_back(ECPointQE::infinity());
    for (const auto& p : pts) {
        ECPointQE np = ec_negate(p);
        if (std::find(pts.begin(), pts.end(), np) == pts.end())
            throw std::invalid_argument("TorsionReport: set not closed under negation");
        for (const auto& q : pts) {
            ECPointQE s = ec_add(p, q, a);
            if (std::find(pts.begin(), pts.end(), s) == pts.end())
                throw std::invalid_argument("TorsionReport: set not closed under addition");
        }
    }
    TorsionReport r;
    r.order = static_cast<long long>(pts.size());
    r.points = std::move(pts);
    r.methods = std::move(methods);
    r.assumptions = std::move(assumptions);
    return r;
}

TorsionReport lutz_nagell_torsion(const WeierstrassCurve& curve) {
    if (!curve.a().is_integer() || !curve.b().is_integer())
        throw std::invalid_argument("lutz_nagell_torsion: requires integer coefficients");
    BigInt a = curve.a().num(), b = curve.b().num();
    Rational disc = curve.discriminant();
    BigInt D = disc.num() < 0 ? BigInt(-disc.num()) : disc.num();

    // Candidate y-values: 0 and divisors y with y^2 | D.
    std::vector<BigInt> ys{0};
    for (const BigInt& y : divisors(D))
        if (D % (y * y) == 0) ys.push_back(y);

    std::vector<ECPointQE> found{ECPointQE::infinity()};
    const long long d_marker = -1;  // field marker irrelevant for rational points
    for (const BigInt& y : ys) {
        // Integer roots x of x^3 + a x + (b - y^2).
        UniPoly f("x", {Rational(b - y * y), Rational(a), Rational(0), Rational(1)});
        for (const Rational& x : rational_roots(f)) {
            if (!x.is_integer()) continue;
            for (int s : {1, -1}) {
                ECPointQE p = ECPointQE::affine(embed(x, d_marker), embed(Rational(s * y), d_marker));
                if (std::find(found.begin(), found.end(), p) != found.end()) continue;
                if (point_order(curve, p, d_marker) > 0) found.push_back(p);
            }
        }
    }
    return TorsionReport::make(curve, d_marker, found, {"lutz-nagell"}, {});
}

bool good_reduction(const WeierstrassCurve& curve, long long p) {
    if (p < 3 || !is_prime_ll(p)) return false;
    if (curve.a().den() % p == 0 || curve.b().den() % p == 0) return false;
    Rational disc = curve.discriminant();
    return disc.num() % p != 0;
}

long long reduce_and_count(const WeierstrassCurve& curve, long long p) {
    if (!good_reduction(curve, p))
        throw std::invalid_argument("reduce_and_count: bad reduction at p = " + std::to_string(p));
    Fp a = Fp::from_rational(curve.a(), p);
    Fp b = Fp::from_rational(curve.b(), p);
    long long n = 1;  // point at infinity
    for (long long x = 0; x < p; ++x) {
        Fp fx = Fp(x, p) * Fp(x, p) * Fp(x, p) + a * Fp(x, p) + b;
        if (fx.is_zero()) n += 1;
        else if (fx.is_square()) n += 2;
    }
    return n;
}

long long torsion_bound_gcd(const WeierstrassCurve& curve, const std::vector<long long>& primes) {
    if (primes.empty()) throw std::invalid_argument("torsion_bound_gcd: empty prime list");
    long long g = 0;
    for (long long p : primes) g = std::gcd(g, reduce_and_count(curve, p));
    return g;
}

std::vector<long long> split_primes_for(const WeierstrassCurve& curve, long long d, int count) {
    std::vector<long long> out;
    for (long long p = 3; static_cast<int>(out.size()) < count && p < 20000; p += 2) {
        if (!is_prime_ll(p)) continue;
        if (!good_reduction(curve, p)) continue;
        if (d % p == 0) continue;
        if (!Fp(d, p).is_square()) continue;
        out.push_back(p);
    }
    return out;
}

TorsionReport torsion_over_quadratic_field(const WeierstrassCurve& curve, long long d,
                                           const std::vector<long long>& split_primes) {
    std::vector<long long> primes = split_primes;
    if (primes.empty()) primes = split_primes_for(curve, d, 3);
    if (primes.empty())
        throw std::invalid_argument("torsion_over_quadratic_field: no usable split primes");
    for (long long p : primes) {
        if (!good_reduction(curve, p) || d % p == 0 || !Fp(d, p).is_square())
            throw std::invalid_argument("torsion_over_quadratic_field: prime " +
                                        std::to_string(p) + " is not good and split");
    }

    long long bound = torsion_bound_gcd(curve, primes);

    std::vector<long long> prime_factors;
    long long n = bound;
    for (long long q = 2; q * q <= n; ++q)
        while (n % q == 0) {
            if (prime_factors.empty() || prime_factors.back() != q) prime_factors.push_back(q);
            n /= q;
        }
    if (n > 1) prime_factors.push_back(n);
    for (long long q : prime_factors)
        if (q != 2 && q != 3)
            throw std::runtime_error("torsion_over_quadratic_field: bound too weak - add primes");

    std::vector<ECPointQE> pts{ECPointQE::infinity()};
    auto push_point = [&](const ECPointQE& p) {
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    };

    const Rational& a = curve.a();
    const Rational& b = curve.b();
    for (long long ell : prime_factors) {
        if (ell == 2) {
            // x-coordinates of 2-torsion: roots of x^3 + a x + b in Q(sqrt(d)).
            UniPoly f("x", {b, a, Rational(0), Rational(1)});
            for (const QuadExt& x : quad_field_roots(f, d))
                push_point(ECPointQE::affine(x, QuadExt::from_rational(Rational(0), d)));
        } else {
            // 3-division polynomial 3x^4 + 6a x^2 + 12b x - a^2.
            UniPoly f("x", {-(a * a), Rational(12) * b, Rational(6) * a, Rational(0), Rational(3)});
            for (const QuadExt& x : quad_field_roots(f, d)) {
                QuadExt rhs = x * x * x + embed(a, d) * x + embed(b, d);
                auto y = sqrt_in_quadext(rhs);
                if (!y) continue;  // y-coordinate leaves Q(sqrt(d)); rejected
                push_point(ECPointQE::affine(x, *y));
                push_point(ECPointQE::affine(x, -*y));
            }
        }
    }

    // Rational torsion injects into the quadratic-field torsion.
    if (curve.a().is_integer() && curve.b().is_integer()) {
        for (const auto& p : lutz_nagell_torsion(curve).points) {
            if (p.is_infinity()) continue;
            push_point(ECPointQE::affine(QuadExt(p.x().a(), Rational(0), d),
                                         QuadExt(p.y().a(), Rational(0), d)));
        }
    }

    TorsionReport r = TorsionReport::make(
        curve, d, pts, {"reduction-bound", "division-poly"},
        {"finiteness of the Mordell-Weil groups over the base and quadratic field "
         "(analytic rank 0) is assumed, not computed"});
    if (bound % r.order != 0)
        throw std::logic_error("torsion_over_quadratic_field: order does not divide the bound");
    return r;
}

}  // namespace surfcert

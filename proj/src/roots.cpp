#include "surfcert/roots.hpp"

#include "surfcert/polykernel.hpp"

#include <algorithm>

namespace surfcert {

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::invalid_argument("factorize: zero");
    std::vector<std::pair<BigInt, int>> out;
    auto push = [&](const BigInt& p) {
        if (!out.empty() && out.back().first == p) out.back().second++;
        else out.push_back({p, 1});
    };
    while (n % 2 == 0) {
        push(2);
        n /= 2;
    }
    BigInt q = 3;
    const BigInt cap = 2000000;
    while (q * q <= n) {
        if (q > cap)
            throw std::runtime_error("factorize: value exceeds desk-scale trial division cap");
        while (n % q == 0) {
            push(q);
            n /= q;
        }
        q += 2;
    }
    if (n > 1) push(n);
    return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
    auto fac = factorize(n);
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : fac) {
        size_t sz = out.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    UniPoly g = f.primitive();
    std::vector<Rational> roots;

    // Strip x^k.
    size_t low = 0;
    while (low < g.coeffs().size() && g.coeffs()[low].is_zero()) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> c(g.coeffs().begin() + low, g.coeffs().end());
        g = UniPoly(g.var(), std::move(c));
    }
    if (g.degree() < 1) return roots;

    BigInt a0 = g.coeff(0).num();   // integer model: primitive() gives integers
    BigInt an = g.leading().num();
    for (const BigInt& p : divisors(a0)) {
        for (const BigInt& q : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(s * p, q);
                if (g.eval(cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::pair<std::vector<std::pair<Rational, int>>, bool> rational_roots_with_multiplicity(
    const UniPoly& f) {
    std::vector<std::pair<Rational, int>> out;
    UniPoly g = f;
    for (const Rational& r : rational_roots(f)) {
        UniPoly lin(f.var(), {-r, Rational(1)});
        int mult = 0;
        for (;;) {
            auto [q, rem] = g.divmod(lin);
            if (!rem.is_zero()) break;
            g = q;
            ++mult;
        }
        out.push_back({r, mult});
    }
    return {out, g.degree() == 0};
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    BigInt sn = boost::multiprecision::sqrt(r.num());
    BigInt sd = boost::multiprecision::sqrt(r.den());
    if (sn * sn != r.num() || sd * sd != r.den()) return std::nullopt;
    return Rational(sn, sd);
}

std::optional<QuadExt> sqrt_in_quadext(const QuadExt& c) {
    const long long d = c.d();
    if (c.b().is_zero()) {
        // y^2 = a: either rational y, or y = v*sqrt(d) with v^2 = a/d.
        if (auto y = rational_sqrt(c.a()))
            return QuadExt(*y, Rational(0), d);
        if (auto v = rational_sqrt(c.a() / Rational(d)))
            return QuadExt(Rational(0), *v, d);
        return std::nullopt;
    }
    // (u + v sqrt(d))^2 = u^2 + d v^2 + 2uv sqrt(d).
    // With N = u^2 - d v^2 = +-sqrt(norm(c)), u^2 = (a + N)/2.
    auto nrm = rational_sqrt(c.norm());
    if (!nrm) return std::nullopt;
    for (int s : {1, -1}) {
        Rational N = Rational(s) * *nrm;
        Rational u2 = (c.a() + N) / Rational(2);
        auto u = rational_sqrt(u2);
        if (!u || u->is_zero()) continue;
        Rational v = c.b() / (Rational(2) * *u);
        QuadExt cand(*u, v, d);
        if (cand * cand == c) return cand;
    }
    return std::nullopt;
}

std::vector<QuadExt> quad_field_roots(const UniPoly& f, long long d) {
    if (f.is_zero()) throw std::invalid_argument("quad_field_roots: zero polynomial");
    if (d == 0 || d == 1 || !is_squarefree_int(d))
        throw std::invalid_argument("quad_field_roots: d must be squarefree, != 0, 1");

    std::vector<QuadExt> roots;
    for (const Rational& r : rational_roots(f))
        roots.push_back(QuadExt(r, Rational(0), d));

    // A root a + b*sqrt(d) with b != 0 contributes the monic quadratic factor
    // x^2 - 2a x + N with N = a^2 - d b^2 its norm. Over the primitive integer
    // model F, Gauss's lemma pins N to +-(divisor of the constant term) /
    // (divisor of the leading term); for each candidate norm the even/odd
    // split of f(a + y) under y^2 = a^2 - N turns into two univariate
    // polynomials in a whose common rational roots are the candidate traces.
    UniPoly F = f.primitive();
    size_t low = 0;
    while (low < F.coeffs().size() && F.coeffs()[low].is_zero()) ++low;
    if (low > 0) {
        std::vector<Rational> c(F.coeffs().begin() + low, F.coeffs().end());
        F = UniPoly(F.var(), std::move(c)).primitive();
    }
    if (F.degree() >= 2) {
        BigInt c0 = F.coeff(0).num() < 0 ? BigInt(-F.coeff(0).num()) : F.coeff(0).num();
        BigInt cn = F.leading().num();

        std::set<std::pair<BigInt, BigInt>> norm_seen;
        std::vector<Rational> norm_candidates;
        for (const BigInt& q : divisors(c0))
            for (const BigInt& e : divisors(cn))
                for (int sgn : {1, -1}) {
                    if (d < 0 && sgn < 0) continue;  // the norm form is positive definite
                    Rational N(sgn * q, e);
                    if (norm_seen.insert({N.num(), N.den()}).second)
                        norm_candidates.push_back(N);
                }

        // Even/odd split of f(a + y): f = E(a, y^2) + y*O(a, y^2).
        // With y^2 := a^2 - N both become polynomials in a alone.
        for (const Rational& N : norm_candidates) {
            // Powers of a + y as even/odd pairs (E, O) in y with y^2 = a^2 - N:
            // (E + yO)(a + y) = (aE + (a^2 - N)O) + y(E + aO).
            UniPoly acc_e("a"), acc_o("a");
            UniPoly apoly("a", {Rational(0), Rational(1)});
            UniPoly ysq = apoly * apoly - UniPoly("a", {N});
            UniPoly ev("a", {Rational(1)});
            UniPoly od("a");
            for (int k = 0; k <= f.degree(); ++k) {
                if (k > 0) {
                    UniPoly ne = apoly * ev + ysq * od;
                    UniPoly no = ev + apoly * od;
                    ev = ne;
                    od = no;
                }
                acc_e = acc_e + ev * f.coeff(k);
                acc_o = acc_o + od * f.coeff(k);
            }
            if (acc_e.is_zero() || acc_o.is_zero()) continue;
            UniPoly g = gcd(acc_e, acc_o);
            if (g.degree() < 1) continue;
            for (const Rational& a0 : rational_roots(g)) {
                Rational bsq = (a0 * a0 - N) / Rational(d);
                auto b = rational_sqrt(bsq);
                if (!b || b->is_zero()) continue;
                for (int sgn : {1, -1}) {
                    QuadExt cand(a0, Rational(sgn) * *b, d);
                    QuadExt acc = QuadExt::from_rational(Rational(0), d);
                    for (int k = f.degree(); k >= 0; --k)
                        acc = acc * cand + QuadExt::from_rational(f.coeff(k), d);
                    if (acc.is_zero() &&
                        std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }

    std::sort(roots.begin(), roots.end(), [](const QuadExt& x, const QuadExt& y) {
        if (x.a() != y.a()) return x.a() < y.a();
        return x.b() < y.b();
    });
    return roots;
}

}  // namespace surfcert

#include "surfcert/unipoly.hpp"

namespace surfcert {

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        num_gcd = boost::multiprecision::gcd(num_gcd, c.num() < 0 ? BigInt(-c.num()) : c.num());
        den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    }
    Rational scale(den_lcm, num_gcd);
    UniPoly r = *this * scale;
    if (r.leading().sign() < 0) r = -r;
    return r;
}

std::string UniPoly::str() const { return to_multipoly().str(); }

UniPoly UniPoly::from_multipoly(const PolyQ& p, const std::string& fallback_var) {
    PolyQ q = p.prune_vars();
    if (q.vars().size() > 1)
        throw std::invalid_argument("UniPoly: polynomial involves more than one variable");
    std::string var = q.vars().empty() ? fallback_var : q.vars()[0];
    UniPoly r(var);
    std::vector<Rational> c;
    for (const auto& [e, coeff] : q.terms()) {
        int k = q.vars().empty() ? 0 : e[0];
        if (k >= static_cast<int>(c.size())) c.resize(k + 1, Rational(0));
        c[k] = coeff;
    }
    return UniPoly(var, std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (f.degree() == 0) return UniPoly(f.var(), {Rational(1)});
    UniPoly g = gcd(f, f.derivative());
    if (g.degree() == 0) return f.monic();
    return f.divmod(g).first.monic();
}

Rational resultant_uni(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant_uni: zero polynomial input");
    if (f.var() != g.var())
        throw std::invalid_argument("resultant_uni: mismatched variables");
    int m = f.degree(), n = g.degree();
    if (m == 0) return f.leading().pow(n);
    if (n == 0) return g.leading().pow(m);

    // Sylvester matrix, f rows first; exact Gaussian elimination.
    int size = m + n;
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + k] = f.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + k] = g.coeff(n - k);

    Rational det(1);
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int r = col; r < size; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].inverse();
        for (int r = col + 1; r < size; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational factor = a[r][col] * inv;
            for (int k = col; k < size; ++k) a[r][k] -= factor * a[col][k];
        }
    }
    return det;
}

}  // namespace surfcert

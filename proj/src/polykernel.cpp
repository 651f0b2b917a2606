#include "surfcert/polykernel.hpp"

#include <set>

namespace surfcert {

namespace {

Rational det_rational(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] * inv;
            for (size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return det;
}

std::vector<std::string> matrix_vars(const std::vector<std::vector<PolyQ>>& m) {
    std::set<std::string> vs;
    for (const auto& row : m)
        for (const auto& e : row) {
            PolyQ p = e.prune_vars();
            vs.insert(p.vars().begin(), p.vars().end());
        }
    return {vs.begin(), vs.end()};
}

// Coefficients of f as a polynomial in v, ascending; entries in the other vars.
std::vector<PolyQ> coeffs_wrt(const PolyQ& f, const std::string& v) {
    int d = f.degree_in(v);
    std::vector<std::string> rest;
    for (const auto& w : f.vars())
        if (w != v) rest.push_back(w);
    std::vector<PolyQ> out(d + 1, PolyQ(rest));
    int idx = f.var_index(v);
    for (const auto& [e, c] : f.terms()) {
        PolyQ::Expo re;
        re.reserve(rest.size());
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != idx) re.push_back(e[i]);
        if (idx < 0) {
            out[0].add_term(re, c);
        } else {
            out[e[idx]].add_term(re, c);
        }
    }
    return out;
}

}  // namespace

std::optional<PolyQ> try_exact_divide(const PolyQ& f, const PolyQ& g) {
    if (g.is_zero()) return std::nullopt;
    auto [a, b] = PolyQ::aligned(f, g);
    PolyQ q(a.vars());
    PolyQ r = a;
    auto [ge, gc] = b.leading_term();
    while (!r.is_zero()) {
        auto [re, rc] = r.leading_term();
        PolyQ::Expo diff(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            diff[i] = re[i] - ge[i];
            if (diff[i] < 0) return std::nullopt;
        }
        PolyQ t(a.vars());
        t.add_term(diff, rc / gc);
        q += t;
        r -= t * b;
    }
    return q;
}

PolyQ primitive_part_q(const PolyQ& f) {
    if (f.is_zero()) return f;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, c.num() < 0 ? BigInt(-c.num()) : c.num());
        den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    }
    PolyQ r = f * Rational(den_lcm, num_gcd);
    if (r.leading_term().second.sign() < 0) r = -r;
    return r;
}

PolyQ gcd_mp(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a.prune_vars(), y = b.prune_vars();
    if (x.is_zero()) return y.is_zero() ? y : primitive_part_q(y);
    if (y.is_zero()) return primitive_part_q(x);

    std::set<std::string> vs(x.vars().begin(), x.vars().end());
    vs.insert(y.vars().begin(), y.vars().end());
    std::vector<std::string> all(vs.begin(), vs.end());

    if (all.empty()) return PolyQ::constant(Rational(1));
    if (all.size() == 1) {
        UniPoly g = gcd(UniPoly::from_multipoly(x, all[0]).primitive(),
                        UniPoly::from_multipoly(y, all[0]).primitive());
        return primitive_part_q(g.to_multipoly());
    }
    if (all.size() > 2)
        throw std::invalid_argument("gcd_mp: more than two variables is out of scope");

    const std::string main = all[0];

    auto content_and_pp = [&](const PolyQ& p) -> std::pair<UniPoly, PolyQ> {
        std::vector<PolyQ> cs = coeffs_wrt(p, main);
        UniPoly cont(all[1]);
        for (const auto& c : cs) {
            if (c.is_zero()) continue;
            cont = gcd(cont, UniPoly::from_multipoly(c, all[1]));
        }
        cont = cont.primitive();
        PolyQ pp = *try_exact_divide(p, cont.to_multipoly());
        return {cont, pp};
    };

    int dx = x.degree_in(main), dy = y.degree_in(main);
    if (dx == 0 || dy == 0) {
        // One input is main-free: gcd = gcd(content(other), it) in the aux var.
        const PolyQ& free = dx == 0 ? x : y;
        const PolyQ& full = dx == 0 ? y : x;
        auto [cont, pp] = content_and_pp(full);
        UniPoly g = gcd(cont, UniPoly::from_multipoly(free, all[1]).primitive());
        return primitive_part_q(g.to_multipoly());
    }

    auto [cx, px] = content_and_pp(x);
    auto [cy, py] = content_and_pp(y);
    UniPoly cont_gcd = gcd(cx, cy).primitive();

    // Primitive PRS on the primitive parts.
    PolyQ A = px, B = py;
    if (A.degree_in(main) < B.degree_in(main)) std::swap(A, B);
    while (!B.is_zero()) {
        // Pseudo-remainder of A by B with respect to main.
        PolyQ lcB = coeffs_wrt(B, main).back();
        PolyQ R = A;
        int db = B.degree_in(main);
        while (!R.is_zero() && R.degree_in(main) >= db) {
            int dr = R.degree_in(main);
            PolyQ lcR = coeffs_wrt(R, main).back();
            PolyQ shift = PolyQ::variable(main).pow(dr - db);
            R = lcB * R - lcR * shift * B;
        }
        A = B;
        if (R.is_zero()) {
            B = R;
        } else {
            // Primitive part of R.
            auto [cr, pr] = content_and_pp(R);
            B = pr;
        }
    }
    auto [ca, pa] = content_and_pp(A);
    PolyQ result = primitive_part_q(cont_gcd.to_multipoly() * pa);
    return result;
}

PolyQ content_wrt(const PolyQ& f, const std::string& v) {
    std::vector<PolyQ> cs = coeffs_wrt(f.prune_vars(), v);
    PolyQ g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        if (c.prune_vars().vars().size() > 2) return PolyQ::constant(Rational(1));
        g = g.is_zero() ? primitive_part_q(c) : gcd_mp(g, c);
        if (g.is_constant()) return PolyQ::constant(Rational(1));
    }
    return g.is_zero() ? PolyQ::constant(Rational(1)) : g;
}

PolyQ squarefree_wrt(const PolyQ& f, const std::string& v) {
    PolyQ p = f.prune_vars();
    if (p.degree_in(v) == 0) return p;
    if (p.vars().size() > 2) return p;
    PolyQ g = gcd_mp(p, p.derivative(v));
    if (g.is_constant()) return p;
    auto q = try_exact_divide(p, g);
    if (!q) throw std::logic_error("squarefree_wrt: inexact division by gcd");
    return *q;
}

PolyQ det_poly_matrix(const std::vector<std::vector<PolyQ>>& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_poly_matrix: matrix not square");
    std::vector<std::string> vars = matrix_vars(m);

    if (vars.empty()) {
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                a[i][j] = m[i][j].is_zero() ? Rational(0) : m[i][j].constant_value();
        return PolyQ::constant(det_rational(std::move(a)));
    }

    const std::string v = vars[0];
    int bound = 0;
    for (const auto& row : m) {
        int mx = 0;
        for (const auto& e : row) mx = std::max(mx, e.degree_in(v));
        bound += mx;
    }

    // Evaluate at v = 0..bound, recurse, then Lagrange-interpolate in v.
    std::vector<PolyQ> values;
    values.reserve(bound + 1);
    for (int t = 0; t <= bound; ++t) {
        std::map<std::string, Rational> sub{{v, Rational(t)}};
        std::vector<std::vector<PolyQ>> mt(n, std::vector<PolyQ>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                mt[i][j] = m[i][j].specialize<Rational>(sub, [](const Rational& c) { return c; });
        values.push_back(det_poly_matrix(mt));
    }

    // Full node product P(v) = prod (v - t); per-node quotient by synthetic division.
    UniPoly P(v, {Rational(1)});
    for (int t = 0; t <= bound; ++t)
        P = P * UniPoly(v, {Rational(-t), Rational(1)});

    PolyQ acc;
    for (int t = 0; t <= bound; ++t) {
        UniPoly qt = P.divmod(UniPoly(v, {Rational(-t), Rational(1)})).first;
        Rational denom = qt.eval(Rational(t));
        acc += values[t] * (qt.to_multipoly() * denom.inverse());
    }
    return acc.prune_vars();
}

PolyQ resultant_wrt(const PolyQ& f, const PolyQ& g, const std::string& v) {
    PolyQ a = f.prune_vars(), b = g.prune_vars();
    int m = a.degree_in(v), n = b.degree_in(v);
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("resultant_wrt: zero polynomial");
    if (m < 1 || n < 1)
        throw std::invalid_argument("resultant_wrt: both inputs must involve " + v);

    std::vector<PolyQ> fc = coeffs_wrt(a, v);   // ascending
    std::vector<PolyQ> gc = coeffs_wrt(b, v);
    const int size = m + n;
    std::vector<std::vector<PolyQ>> s(size, std::vector<PolyQ>(size));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = fc[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = gc[n - k];
    return det_poly_matrix(s);
}

namespace {

struct StageSystem {
    std::vector<PolyQ> polys;
};

std::vector<StageSystem> run_stage(const StageSystem& sys, const std::string& v) {
    const std::string stage_name = "drop " + v;
    std::vector<PolyQ> carried;
    std::vector<PolyQ> plain_pps;
    std::vector<std::pair<PolyQ, PolyQ>> forked;  // (pp, content)

    for (const auto& raw : sys.polys) {
        PolyQ p = raw.prune_vars();
        if (p.is_zero()) throw EliminationError(stage_name, "zero polynomial in system");
        if (p.degree_in(v) == 0) {
            carried.push_back(p);
            continue;
        }
        PolyQ cont = content_wrt(p, v);
        PolyQ pp = p;
        if (!cont.is_constant()) {
            auto q = try_exact_divide(p, cont);
            if (!q) throw EliminationError(stage_name, "inexact content division");
            pp = q->prune_vars();
        }
        pp = primitive_part_q(pp);
        if (pp.vars().size() <= 2) pp = squarefree_wrt(pp, v);
        if (cont.is_constant()) {
            plain_pps.push_back(pp);
        } else {
            forked.push_back({pp, primitive_part_q(cont)});
        }
    }
    if (forked.size() > 6)
        throw EliminationError(stage_name, "too many content forks for desk scale");

    std::vector<StageSystem> out;
    const size_t combos = size_t{1} << forked.size();
    for (size_t mask = 0; mask < combos; ++mask) {
        std::vector<PolyQ> pps = plain_pps;
        std::vector<PolyQ> next = carried;
        for (size_t i = 0; i < forked.size(); ++i) {
            if (mask & (size_t{1} << i)) next.push_back(forked[i].second);
            else pps.push_back(forked[i].first);
        }
        for (size_t i = 0; i < pps.size(); ++i)
            for (size_t j = i + 1; j < pps.size(); ++j) {
                PolyQ r = resultant_wrt(pps[i], pps[j], v);
                if (r.is_zero())
                    throw EliminationError(stage_name,
                                           "identically zero resultant (shared component)");
                next.push_back(primitive_part_q(r.prune_vars()));
            }
        // A lone polynomial still involving v constrains nothing after
        // projection over an algebraically closed field; it is dropped,
        // which can only enlarge the root set of the output.
        std::set<std::string> seen;
        std::vector<PolyQ> dedup;
        for (const auto& f : next) {
            std::string key = f.str();
            if (seen.insert(key).second) dedup.push_back(f);
        }
        out.push_back(StageSystem{std::move(dedup)});
    }
    return out;
}

}  // namespace

PolyQ eliminate(const std::vector<PolyQ>& system, const std::vector<std::string>& drop_vars) {
    if (system.size() < 2)
        throw std::invalid_argument("eliminate: system must contain at least two polynomials");
    if (drop_vars.empty())
        throw std::invalid_argument("eliminate: no variables to drop");

    std::vector<StageSystem> branches{StageSystem{}};
    for (const auto& f : system) branches[0].polys.push_back(f.prune_vars());

    for (const auto& v : drop_vars) {
        std::vector<StageSystem> next;
        for (const auto& b : branches) {
            if (b.polys.empty()) {
                next.push_back(b);
                continue;
            }
            auto succ = run_stage(b, v);
            next.insert(next.end(), succ.begin(), succ.end());
        }
        branches = std::move(next);
    }

    PolyQ total = PolyQ::constant(Rational(1));
    for (const auto& b : branches) {
        if (b.polys.empty())
            throw EliminationError("final", "a branch became unconstrained; projection is not proper");
        PolyQ g;
        for (const auto& f : b.polys) g = g.is_zero() ? primitive_part_q(f) : gcd_mp(g, f);
        if (g.is_zero()) throw EliminationError("final", "zero combination");
        if (!g.is_constant()) total *= g;
    }

    total = total.prune_vars();
    if (total.vars().size() <= 1) {
        UniPoly u = UniPoly::from_multipoly(total, drop_vars.back());
        if (u.degree() < 1) return primitive_part_q(total);
        return squarefree_part(u).to_multipoly();
    }
    if (total.vars().size() == 2)
        total = squarefree_wrt(total, total.vars()[0]);
    return primitive_part_q(total);
}

UniPoly eliminate_uni(const std::vector<PolyQ>& system, const std::vector<std::string>& drop_vars) {
    PolyQ r = eliminate(system, drop_vars);
    if (r.prune_vars().vars().size() > 1)
        throw EliminationError("final", "more than one variable remains");
    return UniPoly::from_multipoly(r);
}

}  // namespace surfcert

#include "surfcert/pencil.hpp"

#include "surfcert/polykernel.hpp"
#include "surfcert/roots.hpp"

namespace surfcert {

namespace {

bool proportional(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero() || g.is_zero()) return true;
    auto [a, b] = PolyQ::aligned(f, g);
    auto [ea, ca] = a.leading_term();
    auto [eb, cb] = b.leading_term();
    if (ea != eb) return false;
    return a * cb == b * ca;
}

}  // namespace

ConicPencil::ConicPencil(PolyQ f, PolyQ g, std::vector<std::string> xv)
    : F(std::move(f)), G(std::move(g)), x_vars(std::move(xv)) {
    if (x_vars.size() != 3) throw std::invalid_argument("ConicPencil: need three plane coordinates");
    for (const PolyQ* q : {&F, &G}) {
        if (q->is_zero() || !q->is_homogeneous() || q->total_degree() != 2)
            throw std::invalid_argument("ConicPencil: forms must be homogeneous of degree 2");
        PolyQ pruned = q->prune_vars();
        for (const auto& v : pruned.vars())
            if (std::find(x_vars.begin(), x_vars.end(), v) == x_vars.end())
                throw std::invalid_argument("ConicPencil: unexpected variable " + v);
    }
    if (proportional(F, G))
        throw std::invalid_argument("ConicPencil: forms are proportional (degenerate pencil)");
}

std::array<std::array<Rational, 3>, 3> conic_matrix(const PolyQ& q,
                                                    const std::vector<std::string>& x_vars) {
    if (q.is_zero() || !q.is_homogeneous() || q.total_degree() != 2)
        throw std::invalid_argument("conic_matrix: input is not a homogeneous quadric");
    std::array<std::array<Rational, 3>, 3> m{};
    PolyQ p = q.with_vars(x_vars);
    std::vector<int> idx(3);
    for (int i = 0; i < 3; ++i) idx[i] = p.var_index(x_vars[i]);
    for (const auto& [e, c] : p.terms()) {
        int vi = -1, vj = -1;
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < e[idx[i]]; ++k) {
                if (vi < 0) vi = i;
                else vj = i;
            }
        }
        if (vj < 0) throw std::invalid_argument("conic_matrix: non-quadratic term");
        if (vi == vj) m[vi][vi] = c;
        else {
            Rational h = c / Rational(2);
            m[vi][vj] = h;
            m[vj][vi] = h;
        }
    }
    return m;
}

std::array<std::array<PolyQ, 3>, 3> pencil_matrix(const ConicPencil& pencil) {
    auto mf = conic_matrix(pencil.F, pencil.x_vars);
    auto mg = conic_matrix(pencil.G, pencil.x_vars);
    PolyQ u0 = PolyQ::variable("u0"), u1 = PolyQ::variable("u1");
    std::array<std::array<PolyQ, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = u0 * mf[i][j] + u1 * mg[i][j];
    return m;
}

CriticalLocus critical_locus(const ConicPencil& pencil) {
    auto m = pencil_matrix(pencil);
    std::vector<std::vector<PolyQ>> rows(3, std::vector<PolyQ>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[i][j] = m[i][j];
    PolyQ det = det_poly_matrix(rows).prune_vars();
    if (det.is_zero())
        throw std::runtime_error("critical_locus: pencil determinant vanishes identically");

    CriticalLocus out;
    out.determinant = det;

    // Finite chart u1 = 1.
    std::map<std::string, Rational> sub{{"u1", Rational(1)}};
    PolyQ chart = det.specialize<Rational>(sub, [](const Rational& c) { return c; }).prune_vars();
    int deg_u0 = det.degree_in("u0");
    if (!chart.is_zero() && !chart.is_constant()) {
        UniPoly f = UniPoly::from_multipoly(chart, "u0");
        auto [roots, complete] = rational_roots_with_multiplicity(f);
        for (const auto& [r, mult] : roots) out.points.push_back({P1Point::finite(r), mult});
        if (!complete) {
            UniPoly residual = f;
            for (const auto& [r, mult] : roots)
                for (int k = 0; k < mult; ++k)
                    residual = residual.divmod(UniPoly(f.var(), {-r, Rational(1)})).first;
            out.irrational_factor = residual.monic();
        }
    }
    // Membership of (1:0): the u0-leading binary-form coefficient must vanish,
    // i.e. deg_u0(det) < 3 for a cubic form.
    int total = det.total_degree();
    if (deg_u0 < total) out.points.push_back({P1Point::at_infinity(), total - deg_u0});
    return out;
}

std::pair<bool, TransversalityWitness> transversality_check(const ConicPencil& pencil) {
    const auto& xv = pencil.x_vars;
    std::vector<PolyQ> gf, gg;
    for (const auto& v : xv) {
        gf.push_back(pencil.F.with_vars(xv).derivative(v));
        gg.push_back(pencil.G.with_vars(xv).derivative(v));
    }
    TransversalityWitness w;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            w.minors.push_back(gf[i] * gg[j] - gf[j] * gg[i]);

    std::vector<PolyQ> system{pencil.F, pencil.G};
    for (const auto& m : w.minors)
        if (!m.is_zero()) system.push_back(m);
    w.decision = decide_projective_zeros(system, xv);
    return {w.decision.empty, w};
}

std::pair<bool, TotalSpaceWitness> total_space_smoothness(const ConicPencil& pencil) {
    auto [transversal, tw] = transversality_check(pencil);
    TotalSpaceWitness w;
    w.transversal = transversal;
    if (!transversal) {
        w.chain = "base curves meet non-transversally; the incidence locus is singular there";
        return {false, w};
    }
    w.chain =
        "a singular point of the incidence locus would satisfy F = G = 0 with "
        "u0*grad(F) + u1*grad(G) = 0; transversality makes the gradients independent "
        "at every common zero, so no parameter (u0:u1) exists";
    return {true, w};
}

}  // namespace surfcert

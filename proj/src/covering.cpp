#include "surfcert/covering.hpp"

#include "surfcert/polykernel.hpp"
#include "surfcert/roots.hpp"

#include <random>

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

MapToP1::MapToP1(PolyQ n, PolyQ d, PolyQ curve, std::vector<std::string> wv)
    : num(std::move(n)), den(std::move(d)), curve_eq(std::move(curve)), w_vars(std::move(wv)) {
    if (w_vars.size() != 3) throw std::invalid_argument("MapToP1: need three ambient coordinates");
    if (num.is_zero() || den.is_zero())
        throw std::invalid_argument("MapToP1: zero form");
    if (!num.is_homogeneous() || !den.is_homogeneous() ||
        num.total_degree() != den.total_degree())
        throw std::invalid_argument("MapToP1: forms must be homogeneous of equal degree");
    if (proportional(num, den))
        throw std::invalid_argument("MapToP1: proportional forms define no morphism to P1");
    if (curve_eq.is_zero() || !curve_eq.is_homogeneous())
        throw std::invalid_argument("MapToP1: invalid curve equation");
}

PolyQ curve_equation(const WeierstrassCurve& c, const std::vector<std::string>& w_vars) {
    PolyQ w0 = PolyQ::variable(w_vars[0]);
    PolyQ w1 = PolyQ::variable(w_vars[1]);
    PolyQ w2 = PolyQ::variable(w_vars[2]);
    return w1 * w1 * w2 - w0.pow(3) - w0 * w2 * w2 * c.a() - w2.pow(3) * c.b();
}

std::pair<bool, BaseLocusWitness> base_locus_disjoint_check(const MapToP1& gamma) {
    BaseLocusWitness w;
    w.decision = decide_projective_zeros({gamma.num, gamma.den, gamma.curve_eq}, gamma.w_vars);
    return {w.decision.empty, w};
}

P1Point gamma_evaluate(const MapToP1& gamma, const std::vector<Rational>& wpoint) {
    auto [n, d] = gamma_evaluate_raw<Rational>(gamma, wpoint,
                                               [](const Rational& c) { return c; });
    if (d.is_zero()) return P1Point::at_infinity();
    return P1Point::finite(n / d);
}

std::pair<bool, QuadExt> gamma_evaluate_qe(const MapToP1& gamma,
                                           const std::vector<QuadExt>& wpoint) {
    long long dd = wpoint.at(0).d();
    auto [n, d] = gamma_evaluate_raw<QuadExt>(
        gamma, wpoint, [dd](const Rational& c) { return QuadExt::from_rational(c, dd); });
    if (d.is_zero()) return {true, QuadExt::from_rational(Rational(0), dd)};
    return {false, n / d};
}

namespace {

// Chart w2 = 1 of the curve and a fiber equation at a fixed parameter.
std::pair<PolyQ, PolyQ> chart_system(const MapToP1& gamma, const PolyQ& parameter_times_den) {
    std::map<std::string, Rational> sub{{gamma.w_vars[2], Rational(1)}};
    auto embed = [](const Rational& c) { return c; };
    PolyQ curve = gamma.curve_eq.specialize<Rational>(sub, embed).prune_vars();
    PolyQ fiber = (gamma.num - parameter_times_den).specialize<Rational>(sub, embed).prune_vars();
    return {curve, fiber};
}

int eliminant_degree(const PolyQ& curve, const PolyQ& fiber, const std::string& drop,
                     const std::string& keep) {
    bool c = curve.degree_in(drop) >= 1, f = fiber.degree_in(drop) >= 1;
    PolyQ elim;
    if (c && f) elim = resultant_wrt(curve, fiber, drop);
    else if (!f) elim = fiber;   // fiber already free of the dropped variable
    else elim = curve;
    elim = elim.prune_vars();
    if (elim.is_zero()) return -1;
    return elim.degree_in(keep);
}

std::vector<Rational> seeded_rationals(unsigned seed, size_t count) {
    std::mt19937_64 rng(0x5eed0000ull + seed);
    std::vector<Rational> out;
    while (out.size() < count) {
        long long num = 1 + static_cast<long long>(rng() % 23);
        long long den = 1 + static_cast<long long>(rng() % 17);
        Rational t = Rational(BigInt(num), BigInt(den));
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
}

}  // namespace

GammaDegreeResult gamma_degree(const MapToP1& gamma, unsigned seed) {
    const std::string& v0 = gamma.w_vars[0];
    const std::string& v1 = gamma.w_vars[1];
    std::vector<Rational> pool = seeded_rationals(seed, 8);

    GammaDegreeResult out;
    int agreed = -2;
    for (size_t i = 0; i + 1 < pool.size(); i += 2) {
        int degs[2];
        for (int k = 0; k < 2; ++k) {
            const Rational& t = pool[i + k];
            auto [curve, fiber] = chart_system(gamma, gamma.den * t);
            int d_keep0 = eliminant_degree(curve, fiber, v1, v0);
            int d_keep1 = eliminant_degree(curve, fiber, v0, v1);
            degs[k] = std::max(d_keep0, d_keep1);
        }
        if (degs[0] == degs[1] && degs[0] >= 1) {
            agreed = degs[0];
            out.samples = {pool[i], pool[i + 1]};
            break;
        }
    }
    if (agreed < 0)
        throw std::runtime_error("gamma_degree: samples persistently disagree");
    out.degree = agreed;
    return out;
}

std::vector<PolyQ> branch_system(const MapToP1& gamma) {
    PolyQ u0 = PolyQ::variable("u0");
    auto [curve, fiber] = chart_system(gamma, gamma.den * u0);
    const std::string& v0 = gamma.w_vars[0];
    const std::string& v1 = gamma.w_vars[1];
    PolyQ jac = curve.with_vars({v0, v1}).derivative(v0) * fiber.with_vars({v0, v1}).derivative(v1) -
                curve.with_vars({v0, v1}).derivative(v1) * fiber.with_vars({v0, v1}).derivative(v0);
    if (jac.is_zero())
        throw EliminationError("jacobian", "branch system jacobian vanishes identically");
    return {curve, fiber, jac};
}

UniPoly branch_locus(const MapToP1& gamma) {
    std::vector<PolyQ> sys = branch_system(gamma);
    UniPoly b = eliminate_uni(sys, {gamma.w_vars[1], gamma.w_vars[0]});
    if (b.is_zero() || b.degree() < 1)
        throw EliminationError("final", "branch locus eliminant is trivial");
    return UniPoly("u0", b.coeffs());
}

bool etale_over_R_check(const UniPoly& branch, const std::vector<P1Point>& R,
                        std::optional<int> covering_degree) {
    if (branch.is_zero()) throw std::invalid_argument("etale_over_R_check: zero branch polynomial");
    for (const auto& r : R) {
        if (r.infinite) {
            // Ramification budget of a genus-one covering is 2*deg; a full
            // affine branch polynomial leaves nothing above infinity.
            if (!covering_degree)
                throw std::invalid_argument(
                    "etale_over_R_check: infinity in R needs the covering degree");
            if (branch.degree() != 2 * *covering_degree) return false;
            if (squarefree_part(branch) != branch.monic()) return false;
            continue;
        }
        if (branch.eval(r.t).is_zero()) return false;
    }
    return true;
}

}  // namespace surfcert

#pragma once

#include "surfcert/quadratic_field.hpp"
#include "surfcert/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace surfcert {

// Short Weierstrass curve y^2 z = x^3 + a x z^2 + b z^3 over Q.
class WeierstrassCurve {
public:
    WeierstrassCurve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        if (discriminant().is_zero())
            throw std::invalid_argument("WeierstrassCurve: singular model (discriminant zero)");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    // -16(4a^3 + 27b^2)
    Rational discriminant() const {
        return Rational(-16) * (Rational(4) * a_.pow(3) + Rational(27) * b_ * b_);
    }

    WeierstrassCurve quadratic_twist(long long d) const {
        if (d == 0 || !is_squarefree_int(d))
            throw std::invalid_argument("quadratic_twist: d must be squarefree and nonzero");
        Rational dd(d);
        return WeierstrassCurve(a_ * dd * dd, b_ * dd * dd * dd);
    }

    friend bool operator==(const WeierstrassCurve& c1, const WeierstrassCurve& c2) {
        return c1.a_ == c2.a_ && c1.b_ == c2.b_;
    }

private:
    Rational a_, b_;
};

// Projective point on a short Weierstrass curve, normalized so z is 0 or 1,
// and z = 0 forces (0 : 1 : 0).
template <typename F>
class ECPoint {
public:
    static ECPoint infinity() {
        ECPoint p;
        p.inf_ = true;
        return p;
    }
    static ECPoint affine(F x, F y) {
        ECPoint p;
        p.inf_ = false;
        p.x_ = std::move(x);
        p.y_ = std::move(y);
        return p;
    }

    bool is_infinity() const { return inf_; }
    const F& x() const {
        if (inf_) throw std::logic_error("ECPoint: coordinate of the point at infinity");
        return x_;
    }
    const F& y() const {
        if (inf_) throw std::logic_error("ECPoint: coordinate of the point at infinity");
        return y_;
    }

    friend bool operator==(const ECPoint& p, const ECPoint& q) {
        if (p.inf_ || q.inf_) return p.inf_ == q.inf_;
        return p.x_ == q.x_ && p.y_ == q.y_;
    }
    friend bool operator!=(const ECPoint& p, const ECPoint& q) { return !(p == q); }

    std::string str() const {
        if (inf_) return "(0:1:0)";
        return "(" + x_.str() + ":" + y_.str() + ":1)";
    }

private:
    bool inf_ = true;
    F x_{}, y_{};
};

template <typename F>
bool on_curve(const WeierstrassCurve&, const ECPoint<F>& p, const F& a_emb, const F& b_emb) {
    if (p.is_infinity()) return true;
    F lhs = p.y() * p.y();
    F rhs = p.x() * p.x() * p.x() + a_emb * p.x() + b_emb;
    return lhs == rhs;
}

// Chord-tangent group law; identity (0:1:0). All coincidence cases handled.
template <typename F>
ECPoint<F> ec_add(const ECPoint<F>& p, const ECPoint<F>& q, const F& a_emb) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (p.x() == q.x()) {
        if (p.y() == -q.y()) return ECPoint<F>::infinity();
        // doubling (y != 0 here, else y == -y would have matched)
        F xsq = p.x() * p.x();
        F lambda = (xsq + xsq + xsq + a_emb) / (p.y() + p.y());
        F x3 = lambda * lambda - p.x() - q.x();
        F y3 = lambda * (p.x() - x3) - p.y();
        return ECPoint<F>::affine(x3, y3);
    }
    F lambda = (q.y() - p.y()) / (q.x() - p.x());
    F x3 = lambda * lambda - p.x() - q.x();
    F y3 = lambda * (p.x() - x3) - p.y();
    return ECPoint<F>::affine(x3, y3);
}

template <typename F>
ECPoint<F> ec_negate(const ECPoint<F>& p) {
    if (p.is_infinity()) return p;
    return ECPoint<F>::affine(p.x(), -p.y());
}

template <typename F>
ECPoint<F> ec_scalar_mul(long long n, const ECPoint<F>& p, const F& a_emb) {
    if (n < 0) return ec_scalar_mul(-n, ec_negate(p), a_emb);
    ECPoint<F> acc = ECPoint<F>::infinity();
    ECPoint<F> base = p;
    while (n > 0) {
        if (n & 1) acc = ec_add(acc, base, a_emb);
        base = ec_add(base, base, a_emb);
        n >>= 1;
    }
    return acc;
}

using ECPointQ = ECPoint<Rational>;
using ECPointQE = ECPoint<QuadExt>;

}  // namespace surfcert

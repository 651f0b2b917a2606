#pragma once

#include "surfcert/multipoly.hpp"
#include "surfcert/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace surfcert {

// Dense univariate polynomial over Q, coefficients ascending.
// Invariant: the leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() : var_("x") {}
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rational> ascending)
        : var_(std::move(var)), c_(std::move(ascending)) {
        trim();
    }

    static UniPoly from_coeffs_desc(const std::string& var, std::vector<Rational> desc) {
        std::reverse(desc.begin(), desc.end());
        return UniPoly(var, std::move(desc));
    }

    const std::string& var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[k];
    }
    Rational leading() const {
        if (c_.empty()) throw std::logic_error("UniPoly: leading coefficient of zero");
        return c_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        check(a, b);
        UniPoly r(a.var_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        check(a, b);
        UniPoly r(a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const Rational& s) {
        UniPoly r = a;
        if (s.is_zero()) return UniPoly(a.var_);
        for (auto& v : r.c_) v *= s;
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division; remainder has degree < deg(divisor).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        check(*this, d);
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly q(var_), r = *this;
        q.c_.assign(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            q.c_[shift] = f;
            for (size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= f * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    UniPoly derivative() const {
        UniPoly r(var_);
        for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational((long long)i));
        r.trim();
        return r;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    // Primitive integer model times positive content: returns coefficients scaled
    // to coprime integers with positive leading sign.
    UniPoly primitive() const;

    std::string str() const;

    PolyQ to_multipoly() const {
        PolyQ p(std::vector<std::string>{var_});
        for (size_t i = 0; i < c_.size(); ++i)
            p.add_term({static_cast<int>(i)}, c_[i]);
        return p;
    }

    // The MultiPoly must involve at most one variable.
    static UniPoly from_multipoly(const PolyQ& p, const std::string& fallback_var = "x");

private:
    static void check(const UniPoly& a, const UniPoly& b) {
        if (a.var_ != b.var_) throw std::invalid_argument("UniPoly: mismatched variables");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::string var_;
    std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

// f / gcd(f, f'), normalized monic.
UniPoly squarefree_part(const UniPoly& f);

// Determinant of the Sylvester matrix; f, g nonzero in the same variable.
Rational resultant_uni(const UniPoly& f, const UniPoly& g);

}  // namespace surfcert

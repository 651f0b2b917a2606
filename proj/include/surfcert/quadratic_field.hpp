#pragma once

#include "surfcert/rational.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace surfcert {

inline bool is_squarefree_int(long long d) {
    if (d == 0) return false;
    long long n = std::llabs(d);
    for (long long q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) return false;
    }
    return true;
}

// Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
// d is squarefree, d != 0, d != 1; elements sharing arithmetic must share d.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(-1) {}
    QuadExt(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d == 0 || d == 1 || !is_squarefree_int(d))
            throw std::invalid_argument("QuadExt: d must be squarefree, != 0, 1");
    }
    static QuadExt from_rational(const Rational& r, long long d) { return QuadExt(r, Rational(0), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }

    // a^2 - d b^2; multiplicative, vanishes exactly at zero.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.d_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.d_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.a_ * y.a_ + Rational(x.d_) * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_, x.d_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
        Rational n = y.norm();
        QuadExt c = y.conj();
        QuadExt prod = x * c;
        return QuadExt(prod.a_ / n, prod.b_ / n, x.d_);
    }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        std::string rad = d_ == -1 ? "i" : "sqrt(" + std::to_string(d_) + ")";
        if (b_.is_zero()) return a_.str();
        std::string bs = b_.is_one() ? rad : (b_ == Rational(-1) ? "-" + rad : b_.str() + "*" + rad);
        if (a_.is_zero()) return bs;
        return a_.str() + (b_.sign() > 0 ? "+" : "") + bs;
    }

private:
    static void check(const QuadExt& x, const QuadExt& y) {
        if (x.d_ != y.d_) throw std::invalid_argument("QuadExt: mismatched field discriminants");
    }

    Rational a_, b_;
    long long d_;
};

// Exact square root of c in Q(sqrt(d)), if one exists.
std::optional<QuadExt> sqrt_in_quadext(const QuadExt& c);

// Exact square root of a rational, if it is a square in Q.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace surfcert

#pragma once

#include "surfcert/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace surfcert {

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// Residue in F_p for an odd prime p carried per element.
class Fp {
public:
    Fp() : r_(0), p_(3) {}
    Fp(long long r, long long p) : p_(p) {
        if (p < 3 || !is_prime_ll(p)) throw std::invalid_argument("Fp: modulus must be an odd prime");
        r_ = ((r % p) + p) % p;
    }
    static Fp from_rational(const Rational& x, long long p) {
        BigInt dm = x.den() % p;
        if (dm == 0) throw std::invalid_argument("Fp: denominator divisible by p");
        long long den = static_cast<long long>(dm);
        long long num = static_cast<long long>(((x.num() % p) + p) % p);
        return Fp(num, p) / Fp(den, p);
    }

    long long residue() const { return r_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    Fp operator-() const { return make(r_ == 0 ? 0 : p_ - r_, p_); }

    friend Fp operator+(const Fp& x, const Fp& y) { check(x, y); return make((x.r_ + y.r_) % x.p_, x.p_); }
    friend Fp operator-(const Fp& x, const Fp& y) { check(x, y); return make((x.r_ - y.r_ + x.p_) % x.p_, x.p_); }
    friend Fp operator*(const Fp& x, const Fp& y) {
        check(x, y);
        return make(static_cast<long long>((__int128)x.r_ * y.r_ % x.p_), x.p_);
    }
    friend Fp operator/(const Fp& x, const Fp& y) {
        check(x, y);
        if (y.r_ == 0) throw std::domain_error("Fp: division by zero");
        return x * y.inverse();
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& x, const Fp& y) { return x.p_ == y.p_ && x.r_ == y.r_; }
    friend bool operator!=(const Fp& x, const Fp& y) { return !(x == y); }

    Fp inverse() const {
        if (r_ == 0) throw std::domain_error("Fp: inverse of zero");
        return pow((p_ - 2));
    }

    Fp pow(long long e) const {
        Fp base = *this, acc = make(1, p_);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Euler criterion; zero counts as a square.
    bool is_square() const {
        if (r_ == 0) return true;
        return pow((p_ - 1) / 2).r_ == 1;
    }

    std::string str() const { return std::to_string(r_); }

private:
    static Fp make(long long r, long long p) {
        Fp f;
        f.r_ = r;
        f.p_ = p;
        return f;
    }
    static void check(const Fp& x, const Fp& y) {
        if (x.p_ != y.p_) throw std::invalid_argument("Fp: mismatched moduli");
    }

    long long r_, p_;
};

inline std::vector<long long> odd_primes_up_to(long long bound) {
    std::vector<long long> ps;
    for (long long p = 3; p <= bound; p += 2)
        if (is_prime_ll(p)) ps.push_back(p);
    return ps;
}

}  // namespace surfcert

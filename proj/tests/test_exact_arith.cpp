#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcert/prime_field.hpp"
#include "surfcert/quadratic_field.hpp"
#include "surfcert/rational.hpp"

#include <random>

using namespace surfcert;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 41) - 20;
    long long den = 1 + static_cast<long long>(rng() % 19);
    return Rational(BigInt(num), BigInt(den));
}

QuadExt rand_qe(std::mt19937_64& rng, long long d) {
    return QuadExt(rand_rational(rng), rand_rational(rng), d);
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(BigInt(1), BigInt(2)) + Rational(BigInt(1), BigInt(3)) ==
          Rational(BigInt(5), BigInt(6)));
    CHECK((rand_rational(*(new std::mt19937_64(1))) * Rational(0)).is_zero());
    CHECK(Rational(BigInt(60627), BigInt(4913)) * Rational(BigInt(4913), BigInt(60627)) ==
          Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational stays reduced with positive denominator") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        long long n = static_cast<long long>(rng() % 2001) - 1000;
        long long m = static_cast<long long>(rng() % 2000) - 1000;
        if (m == 0) m = 7;
        Rational r = Rational(BigInt(n), BigInt(m));
        CHECK(r.den() > 0);
        CHECK(boost::multiprecision::gcd(r.num() < 0 ? BigInt(-r.num()) : r.num(), r.den()) <= 1);
        // re-normalizing is a no-op
        CHECK(Rational(r.num(), r.den()) == r);
    }
}

TEST_CASE("rational parse round trip") {
    for (const char* s : {"0", "-3", "5/6", "-4112/132651", "60627/4913"}) {
        Rational r = Rational::parse(s);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 150; ++i) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("quadratic field arithmetic over Q(i)") {
    QuadExt four_i(Rational(0), Rational(4), -1);
    CHECK(four_i * four_i == QuadExt(Rational(-16), Rational(0), -1));
    QuadExt one_plus_i(Rational(1), Rational(1), -1);
    CHECK(one_plus_i / one_plus_i == QuadExt(Rational(1), Rational(0), -1));
    CHECK_THROWS_AS(one_plus_i / QuadExt(Rational(0), Rational(0), -1), std::domain_error);
    CHECK_THROWS_AS(one_plus_i + QuadExt(Rational(1), Rational(0), 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 4), std::invalid_argument);  // 4 not squarefree
}

TEST_CASE("norm is positive definite for d = -1 and multiplicative") {
    std::mt19937_64 rng(11);
    CHECK(QuadExt(Rational(0), Rational(4), -1).norm() == Rational(16));
    CHECK(QuadExt(Rational(1), Rational(0), -1).norm() == Rational(1));
    for (int i = 0; i < 150; ++i) {
        QuadExt x = rand_qe(rng, -1), y = rand_qe(rng, -1);
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(x.norm() >= Rational(0));
        CHECK((x.norm().is_zero()) == x.is_zero());
    }
    // multiplicativity also away from d = -1
    for (int i = 0; i < 50; ++i) {
        QuadExt x = rand_qe(rng, 5), y = rand_qe(rng, 5);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("field axioms in Q(sqrt(d))") {
    std::mt19937_64 rng(13);
    for (long long d : {-1LL, 5LL, -3LL}) {
        for (int i = 0; i < 60; ++i) {
            QuadExt a = rand_qe(rng, d), b = rand_qe(rng, d), c = rand_qe(rng, d);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) {
                QuadExt inv = QuadExt::from_rational(Rational(1), d) / a;
                CHECK(a * inv == QuadExt::from_rational(Rational(1), d));
            }
        }
    }
}

TEST_CASE("prime field arithmetic") {
    CHECK(Fp(4, 5).is_square());
    CHECK(!Fp(2, 5).is_square());
    CHECK(Fp(3, 7) * Fp(5, 7) == Fp(1, 7));
    CHECK_THROWS_AS(Fp(1, 5) / Fp(0, 5), std::domain_error);
    CHECK_THROWS_AS(Fp(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), std::invalid_argument);
}

TEST_CASE("squares mod 5 are exactly {0, 1, 4}") {
    std::set<long long> squares;
    for (long long x = 0; x < 5; ++x) squares.insert((x * x) % 5);
    for (long long x = 0; x < 5; ++x) CHECK(Fp(x, 5).is_square() == (squares.count(x) > 0));
}

TEST_CASE("euler criterion agrees with exhaustive square search for p <= 97") {
    for (long long p : odd_primes_up_to(97)) {
        std::set<long long> squares;
        for (long long x = 0; x < p; ++x) squares.insert(static_cast<long long>((__int128)x * x % p));
        for (long long x = 0; x < p; ++x) CHECK(Fp(x, p).is_square() == (squares.count(x) > 0));
    }
}

TEST_CASE("field axioms in F_97") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 150; ++i) {
        Fp a(static_cast<long long>(rng() % 97), 97);
        Fp b(static_cast<long long>(rng() % 97), 97);
        Fp c(static_cast<long long>(rng() % 97), 97);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Fp(1, 97));
    }
}

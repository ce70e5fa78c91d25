#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "mmv/errors.hpp"
#include "mmv/modforms.hpp"
#include "mmv/numerics.hpp"

using namespace mmv;

namespace {

// (T_p f)(n) = a_{pn} + p^{w-1} a_{n/p}, weight 12.
Rational hecke_tp(const QExpansion& f, long p, long n) {
    Rational r = f.coeff(p * n);
    if (n % p == 0) r += Rational(BigInt::pow(BigInt(p), 11)) * f.coeff(n / p);
    return r;
}

} // namespace

TEST_CASE("eisenstein expansions") {
    QExpansion g4 = eisenstein(4, 3);
    CHECK(g4.coeff(0) == Rational(1, 240));
    CHECK(g4.coeff(1) == Rational(1));
    CHECK(g4.coeff(2) == Rational(9));
    CHECK(g4.coeff(3) == Rational(28));
    CHECK(eisenstein(12, 0).coeff(0) == Rational(691, 65520));
    QExpansion g6 = eisenstein(6, 1);
    CHECK(g6.coeff(0) == Rational(-1, 504));
    CHECK(g6.coeff(1) == Rational(1));
    CHECK_THROWS_AS(eisenstein(2, 5), domain_error);
}

TEST_CASE("sigma_{2k-1}(p) = 1 + p^{2k-1} for primes") {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L})
        CHECK(divisor_sigma(11, p) == BigInt(1) + BigInt::pow(BigInt(p), 11));
}

TEST_CASE("delta expansion") {
    QExpansion d = delta(5);
    CHECK(d.coeff(1) == Rational(1));
    CHECK(d.coeff(2) == Rational(-24));
    CHECK(d.coeff(3) == Rational(252));
    CHECK(d.coeff(5) == Rational(4830));
}

TEST_CASE("delta Hecke multiplicativity for coprime mn <= 100") {
    QExpansion d = delta(100);
    for (long m = 2; m * m <= 100; ++m)
        for (long n = m + 1; m * n <= 100; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(d.coeff(m) * d.coeff(n) == d.coeff(m * n));
        }
}

TEST_CASE("delta_prime printed coefficients") {
    QExpansion dp = delta_prime(4);
    CHECK(dp.leading_order() == -1);
    CHECK(dp.coeff(-1) == Rational(1));
    CHECK(dp.coeff(0) == Rational(0));
    CHECK(dp.coeff(1) == Rational(0));
    CHECK(dp.coeff(2) == Rational(47709536));
    CHECK(dp.coeff(3) == Rational(BigInt("39862705122")));
    CHECK(dp.coeff(4) == Rational(BigInt("7552626810624")));
    CHECK(dp.coeff(2).is_integer());
}

TEST_CASE("delta_prime is a weak Hecke eigenform with Delta's eigenvalues") {
    // T_p Delta' - a_p(Delta) Delta' = D^11 g for the unique weakly
    // holomorphic weight -10 form g matching the principal part; checked
    // exactly coefficient by coefficient.
    const long N = 24;
    QExpansion dp = delta_prime(3 * N);
    QExpansion d = delta(N + 1);
    for (long p : {2L, 3L}) {
        Rational ap = d.coeff(p);
        std::vector<Rational> principal;
        for (long n = 1; n <= p; ++n) {
            Rational c = hecke_tp(dp, p, -n) - ap * dp.coeff(-n);
            principal.push_back(c / Rational::pow(Rational(-n), 11));
        }
        RatQSeries g = weight_minus10_from_principal_part(principal, N);
        for (long n = 0; n <= N; ++n) {
            Rational lhs = hecke_tp(dp, p, n) - ap * dp.coeff(n);
            Rational rhs = n == 0 ? Rational(0) : Rational::pow(Rational(n), 11) * g.coeff(n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("evaluate_at_iy against a direct summation oracle") {
    PrecisionContext ctx(30);
    auto p = ctx.bits();
    const long N = truncation_for_digits(ctx.working_digits());
    BigFloat y(1, p);
    BigFloat q = exp(-(BigFloat(2, p) * BigFloat::pi(p)));

    QExpansion d = delta(N);
    BigFloat oracle(p);
    for (long n = 1; n <= N; ++n) oracle += BigFloat(d.coeff(n), p) * pow_si(q, n);
    BigFloat got = evaluate_at_iy(d, y, false, ctx).re();
    CHECK((got - oracle).log10_abs() < -45);
    // Delta(i) = e^{-2 pi} - 24 e^{-4 pi} + ...
    CHECK((got - BigFloat("0.001785369850642151904343055", p)).log10_abs() < -24);

    QExpansion g4 = eisenstein(4, N);
    BigFloat oracle2(p);
    for (long n = 1; n <= N; ++n) oracle2 += BigFloat(g4.coeff(n), p) * pow_si(q, n);
    BigFloat got2 = evaluate_at_iy(g4, y, true, ctx).re();
    CHECK((got2 - oracle2).log10_abs() < -45);
    CHECK((got2 - BigFloat("0.001899012051119622176926758", p)).log10_abs() < -24);

    // constant term only survives at large y
    BigFloat far(20, p);
    CHECK((evaluate_at_iy(g4, far, false, ctx).re() - BigFloat(Rational(1, 240), p)).log10_abs() <
          -45);
}

TEST_CASE("evaluate_at_iy refuses insufficient truncation") {
    PrecisionContext ctx(60);
    QExpansion d = delta(5); // nowhere near enough terms for 60 digits
    CHECK_THROWS_AS(evaluate_at_iy(d, BigFloat(1, ctx.bits()), false, ctx), precision_error);
}

TEST_CASE("truncation rule covers the working precision") {
    // N >= ceil(D ln10 / 2 pi) + 10 suffices at y >= 1: doubling the
    // truncation must not change the value at the claimed precision.
    PrecisionContext ctx(40);
    long N = truncation_for_digits(ctx.working_digits());
    BigFloat a = evaluate_at_iy(delta(N), BigFloat(1, ctx.bits()), false, ctx).re();
    BigFloat b = evaluate_at_iy(delta(2 * N), BigFloat(1, ctx.bits()), false, ctx).re();
    CHECK((a - b).log10_abs() < -(ctx.working_digits() + 2));
}

TEST_CASE("expansion JSON export") {
    QExpansion g4 = eisenstein(4, 2);
    CHECK(g4.to_json("G4") ==
          "{\"kind\": \"G4\", \"weight\": 4, \"leading_order\": 0, \"coeffs\": "
          "[\"1/240\", \"1\", \"9\"]}");
}

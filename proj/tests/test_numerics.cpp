#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmv/errors.hpp"
#include "mmv/numerics.hpp"

using namespace mmv;

namespace {

double rel_dev(const BigFloat& got, const BigFloat& want) {
    BigFloat scale = abs(want);
    double s = (scale < BigFloat(1, 64)) ? 0.0 : scale.log10_abs();
    return (got - want).log10_abs() - s;
}

// Independent Bernoulli oracle: direct recurrence, no cache sharing.
Rational bernoulli_oracle(long n) {
    std::vector<Rational> b = {Rational(1)};
    for (long m = 1; m <= n; ++m) {
        Rational acc(0);
        for (long k = 0; k < m; ++k)
            acc += Rational(BigInt::binomial(m + 1, k)) * b[static_cast<size_t>(k)];
        b.push_back(-acc / Rational(m + 1));
    }
    return b[static_cast<size_t>(n)];
}

} // namespace

TEST_CASE("bernoulli numbers match the recurrence oracle") {
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730)); // the prime 691 appears
    for (long n = 2; n <= 22; n += 2) CHECK(bernoulli(n) == bernoulli_oracle(n));
    CHECK_THROWS_AS(bernoulli(3), domain_error);
    CHECK_THROWS_AS(bernoulli(0), domain_error);
    CHECK_THROWS_AS(bernoulli(-2), domain_error);
}

TEST_CASE("riemann zeta special values") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    BigFloat pi = BigFloat::pi(p);
    CHECK(rel_dev(riemann_zeta(2, ctx).re(), pi * pi / BigFloat(6, p)) < -65);
    CHECK(riemann_zeta(0, ctx).re() == BigFloat(Rational(-1, 2), p));
    CHECK(riemann_zeta(-2, ctx).re().is_zero());
    CHECK(riemann_zeta(-1, ctx).re() == BigFloat(Rational(-1, 12), p));
    CHECK_THROWS_AS(riemann_zeta(1, ctx), pole_error);
}

TEST_CASE("zeta(2n) equals the Bernoulli closed form for n <= 10") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    BigFloat two_pi = BigFloat(2, p) * BigFloat::pi(p);
    for (long n = 1; n <= 10; ++n) {
        Rational b2n = bernoulli(2 * n);
        BigFloat want = BigFloat(b2n.abs(), p) * pow_si(two_pi, 2 * n) /
                        (BigFloat(2, p) * factorial_big(2 * n, p));
        CHECK(rel_dev(riemann_zeta(2 * n, ctx).re(), want) < -65);
    }
}

TEST_CASE("zeta precision doubling") {
    PrecisionContext ctx(40);
    BigFloat a = riemann_zeta(7, ctx).re();
    BigFloat b = riemann_zeta(7, ctx.doubled()).re();
    CHECK((a - b).log10_abs() < -58); // agrees to the original's full working digits
}

TEST_CASE("upper incomplete gamma") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    BigFloat x(Rational(7, 3), p);
    // Gamma(1, x) = e^{-x}
    CHECK(rel_dev(upper_incomplete_gamma(1, x, ctx).re(), exp(-x)) < -65);
    // Gamma(3, 1) = 5/e
    CHECK(rel_dev(upper_incomplete_gamma(3, BigFloat(1, p), ctx).re(),
                  BigFloat(5, p) * exp(BigFloat(-1, p))) < -65);
    // Gamma(2, x) -> 1 as x -> 0+
    CHECK(rel_dev(upper_incomplete_gamma(2, BigFloat("1e-30", p), ctx).re(), BigFloat(1, p)) <
          -25);
    CHECK_THROWS_AS(upper_incomplete_gamma(0, x, ctx), domain_error);
}

TEST_CASE("incomplete gamma recurrence Gamma(s+1,x) = s Gamma(s,x) + x^s e^-x") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    unsigned long long seed = 99991;
    for (int trial = 0; trial < 12; ++trial) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        long s = 1 + static_cast<long>((seed >> 33) % 9);
        BigFloat x(Rational(static_cast<long>((seed >> 13) % 900) + 1, 100), p);
        BigFloat lhs = upper_incomplete_gamma(s + 1, x, ctx).re();
        BigFloat rhs = BigFloat(s, p) * upper_incomplete_gamma(s, x, ctx).re() +
                       pow_si(x, s) * exp(-x);
        CHECK(rel_dev(lhs, rhs) < -60);
    }
}

TEST_CASE("exponential integral E1") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    // E1(x) + ln x + gamma -> 0 as x -> 0; at x = 1 the classical value.
    BigFloat e1 = exponential_integral_e1(BigFloat(1, p), p);
    CHECK(rel_dev(e1, BigFloat("0.21938393439552027367716377546012164903104729340694", p)) < -45);
    // d/dx check via the defining recurrence E1' = -e^{-x}/x (finite difference)
    BigFloat x(2, p);
    BigFloat h(Rational(1, 1000000000), p);
    BigFloat deriv = (exponential_integral_e1(x + h, p) - exponential_integral_e1(x - h, p)) /
                     (BigFloat(2, p) * h);
    CHECK((deriv + exp(-x) / x).log10_abs() < -15);
}

TEST_CASE("rational reconstruction") {
    PrecisionContext ctx(60);
    auto p = ctx.bits();
    BigFloat v(Rational(-691, 2730), p);
    auto r = rational_reconstruct(v, 60);
    REQUIRE(r.has_value());
    CHECK(*r == Rational(-691, 2730));
    CHECK(!rational_reconstruct(BigFloat::pi(p), 60).has_value());
}

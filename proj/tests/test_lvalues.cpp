#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmv/errors.hpp"
#include "mmv/lvalues.hpp"
#include "mmv/numerics.hpp"

using namespace mmv;

namespace {

double rel_dev(const BigFloat& got, const BigFloat& want) {
    BigFloat scale = abs(want);
    double s = (scale < BigFloat(1, 64)) ? 0.0 : scale.log10_abs();
    return (got - want).log10_abs() - s;
}

} // namespace

TEST_CASE("Eisenstein Lambda via zeta factorization") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    CHECK(rel_dev(lambda_eisenstein(4, 2, ctx).value.re(), BigFloat(Rational(-1, 288), p)) < -65);
    BigFloat want = -riemann_zeta(3, ctx).re() / pow_si(BigFloat(2, p) * BigFloat::pi(p), 3);
    CHECK(rel_dev(lambda_eisenstein(4, 3, ctx).value.re(), want) < -65);
    CHECK(lambda_eisenstein(10, 5, ctx).value.re().is_zero()); // interior odd: exact zero
    CHECK(lambda_eisenstein(10, 7, ctx).value.re().is_zero());
    CHECK_THROWS_AS(lambda_eisenstein(4, 1, ctx), pole_error);
    CHECK_THROWS_AS(lambda_eisenstein(4, 4, ctx), pole_error);
}

TEST_CASE("Eisenstein even-value closed form for all weights <= 12") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    for (int w = 4; w <= 12; w += 2)
        for (long i = 1; 2 * i <= w - 2; ++i) {
            Rational cf = bernoulli(2 * i) / Rational(2 * i) * bernoulli(w - 2 * i) /
                          Rational(w - 2 * i) / Rational(2);
            if (i % 2 != 0) cf = -cf;
            CHECK(rel_dev(lambda_eisenstein(w, 2 * i, ctx).value.re(), BigFloat(cf, p)) < -60);
        }
}

TEST_CASE("Eisenstein symmetry Lambda(G;2k-1) = (-1)^k Lambda(G;1)") {
    PrecisionContext ctx(40);
    for (int w : {4, 6, 8, 10, 12}) {
        BigFloat rhs = lambda_eisenstein(w, w - 1, ctx).value.re();
        if ((w / 2) % 2 != 0) rhs = -rhs;
        CHECK(rel_dev(lambda_eisenstein_at_one(w, ctx).re(), rhs) < -50);
    }
}

TEST_CASE("Delta critical values and functional equation") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    FormId D = FormId::delta();
    std::vector<BigFloat> lam;
    for (long s = 1; s <= 11; ++s) lam.push_back(lambda_cuspform(D, s, ctx).value.re());
    for (long s = 1; s <= 11; ++s)
        CHECK(rel_dev(lam[static_cast<size_t>(s - 1)], lam[static_cast<size_t>(11 - s)]) < -65);
    // (Lambda(3) : Lambda(5)) = (14 : 9)
    CHECK(rel_dev(BigFloat(9, p) * lam[2], BigFloat(14, p) * lam[4]) < -65);
    // imaginary parts vanish
    for (long s = 1; s <= 11; ++s) CHECK(lambda_cuspform(D, s, ctx).value.im().is_zero());
}

TEST_CASE("Delta Lambda(12) via the exponential-integral path") {
    PrecisionContext ctx(40);
    FormId D = FormId::delta();
    BigFloat a = lambda_cuspform(D, 12, ctx).value.re();
    BigFloat b = lambda_cuspform(D, 12, ctx.doubled()).value.re();
    CHECK((a - b).log10_abs() < -55); // precision doubling persistence
    CHECK(a.sign() > 0);
    CHECK_THROWS_AS(lambda_cuspform(D, 0, ctx), domain_error);
    CHECK_THROWS_AS(lambda_cuspform(FormId::eisenstein(4), 2, ctx), domain_error);
}

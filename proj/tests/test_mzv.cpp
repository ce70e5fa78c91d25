#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmv/errors.hpp"
#include "mmv/fword.hpp"
#include "mmv/mzv.hpp"
#include "mmv/numerics.hpp"
#include "mmv/oracles.hpp"

using namespace mmv;

namespace {

double rel_dev(const BigFloat& got, const BigFloat& want) {
    BigFloat scale = abs(want);
    double s = (scale < BigFloat(1, 64)) ? 0.0 : scale.log10_abs();
    return (got - want).log10_abs() - s;
}

} // namespace

TEST_CASE("depth-one values against the zeta module") {
    PrecisionContext ctx(50);
    for (long s : {2L, 3L, 4L, 7L, 12L})
        CHECK(rel_dev(multiple_zeta({s}, ctx), riemann_zeta(s, ctx).re()) < -65);
}

TEST_CASE("Euler: zeta(2k) = |b_2k| (2 pi)^{2k} / (2 (2k)!) for k <= 6") {
    PrecisionContext ctx(40);
    auto p = ctx.bits();
    BigFloat two_pi = BigFloat(2, p) * BigFloat::pi(p);
    for (long k = 1; k <= 6; ++k) {
        BigFloat want = BigFloat(bernoulli(2 * k).abs(), p) * pow_si(two_pi, 2 * k) /
                        (BigFloat(2, p) * factorial_big(2 * k, p));
        CHECK(rel_dev(multiple_zeta(MZVIndex{{2 * k}}, ctx), want) < -55);
    }
}

TEST_CASE("direct-sum oracle confirms the Holder convolution at zeta(3,5)") {
    PrecisionContext ctx(30);
    BigFloat h = multiple_zeta({3, 5}, ctx);
    CHECK((h - BigFloat("0.0377076729848475440113", ctx.bits())).log10_abs() < -21);
    DirectSumResult o = mzv_direct_sum(MZVIndex{{3, 5}});
    CHECK(o.certified_digits >= 12);
    CHECK((h - o.value).log10_abs() < -o.certified_digits);
}

TEST_CASE("Holder agrees with the oracle across sampled weight <= 12, depth <= 4 indices") {
    PrecisionContext ctx(30);
    // Mix of depths, an interior 1, and the slow last-entry-2 tails.
    const std::vector<std::vector<long>> sample = {
        {2, 2},       {4, 3},   {2, 2, 3},    {3, 2, 2, 2}, {1, 2, 4},
        {1, 1, 2, 3}, {6, 2},   {2, 3, 4},    {8, 2},       {1, 3, 5},
        {2, 10},      {5, 4, 3}};
    for (const auto& idx : sample) {
        MZVIndex mi{idx};
        DirectSumResult o = mzv_direct_sum(mi);
        double claim = std::min(o.certified_digits, 12.0);
        CHECK(claim >= 10); // oracle reaches double-digit certainty everywhere sampled
        BigFloat h = multiple_zeta(mi, ctx);
        double dev = (abs(o.value - h)).log10_abs() -
                     std::max(0.0, h.log10_abs());
        CHECK(dev < -claim);
    }
}

TEST_CASE("stuffle: z(a) z(b) = z(a,b) + z(b,a) + z(a+b)") {
    PrecisionContext ctx(40);
    for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {3, 5}, {2, 5}}) {
        BigFloat lhs = multiple_zeta(MZVIndex{{a}}, ctx) * multiple_zeta(MZVIndex{{b}}, ctx);
        BigFloat rhs = multiple_zeta(MZVIndex{{a, b}}, ctx) +
                       multiple_zeta(MZVIndex{{b, a}}, ctx) +
                       multiple_zeta(MZVIndex{{a + b}}, ctx);
        CHECK(rel_dev(lhs, rhs) < -55);
    }
}

TEST_CASE("GKZ weight-12 relation") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    BigFloat lhs = BigFloat(28, p) * multiple_zeta({3, 9}, ctx) +
                   BigFloat(150, p) * multiple_zeta({5, 7}, ctx) +
                   BigFloat(168, p) * multiple_zeta({7, 5}, ctx);
    BigFloat rhs = BigFloat(Rational(5197, 691), p) * riemann_zeta(12, ctx).re();
    CHECK(rel_dev(lhs, rhs) < -65);
}

TEST_CASE("divergent and malformed indices are rejected") {
    PrecisionContext ctx(20);
    CHECK_THROWS_AS(multiple_zeta({3, 1}, ctx), domain_error);
    CHECK_THROWS_AS(multiple_zeta({1}, ctx), domain_error);
    CHECK_THROWS_AS(multiple_zeta(MZVIndex{{}}, ctx), domain_error);
    CHECK_NOTHROW(multiple_zeta({1, 2}, ctx)); // interior 1 is fine (ascending convention)
}

TEST_CASE("zeta representatives") {
    PrecisionContext ctx(40);
    auto p = ctx.bits();
    CHECK(rel_dev(zeta_representative({5, 3}, ctx).value,
                  BigFloat(Rational(-1, 5), p) * multiple_zeta({3, 5}, ctx)) < -50);
    // zeta(3,3) = (zeta(3)^2 - zeta(6)) / 2 by stuffle
    BigFloat z3 = riemann_zeta(3, ctx).re();
    CHECK(rel_dev(zeta_representative({3, 3}, ctx).value,
                  (z3 * z3 - riemann_zeta(6, ctx).re()) / BigFloat(2, p)) < -50);
    // zeta_{5,7} + 3 zeta_{3,9} lies in the double-zeta subspace
    BigFloat lhs = zeta_representative({5, 7}, ctx).value +
                   BigFloat(3, p) * zeta_representative({3, 9}, ctx).value;
    BigFloat rhs = BigFloat(Rational(1, 9), p) * multiple_zeta({3, 9}, ctx) +
                   BigFloat(3, p) * z3 * riemann_zeta(9, ctx).re() +
                   BigFloat(Rational(5, 3), p) * riemann_zeta(5, ctx).re() *
                       riemann_zeta(7, ctx).re() -
                   BigFloat(Rational(31L * 139L, 2L * 691L), p) * riemann_zeta(12, ctx).re();
    CHECK(rel_dev(lhs, rhs) < -50);
    CHECK_THROWS_AS(zeta_representative({3, 5}, ctx), domain_error); // not a housed choice
}

TEST_CASE("coradical dimension series") {
    auto d = coradical_dimensions(12);
    std::vector<unsigned long long> want = {1, 0, 1, 1, 1, 2, 2, 3, 4};
    for (size_t i = 0; i < want.size(); ++i) CHECK(d[i] == want[i]);
    CHECK(d[12] == 12);
    auto big = coradical_dimensions(64);
    for (size_t n = 3; n < big.size(); ++n) CHECK(big[n] == big[n - 2] + big[n - 3]);
    CHECK_THROWS_AS(coradical_dimensions(65), domain_error);
}

TEST_CASE("f-alphabet shuffle product") {
    FWord f3{{3}, 0}, f5{{5}, 0}, f35{{3, 5}, 0};
    FWordSum s = shuffle_product(f3, f5);
    CHECK(s.size() == 2);
    CHECK(s[FWord{{3, 5}, 0}] == BigInt(1));
    CHECK(s[FWord{{5, 3}, 0}] == BigInt(1));

    FWordSum s2 = shuffle_product(f3, f35);
    CHECK(s2[FWord{{3, 3, 5}, 0}] == BigInt(2));
    CHECK(s2[FWord{{3, 5, 3}, 0}] == BigInt(1));

    FWord unit{{}, 0};
    FWordSum s3 = shuffle_product(unit, f35);
    CHECK(s3.size() == 1);
    CHECK(s3[f35] == BigInt(1));

    // |u sh v| counted with multiplicity is C(|u|+|v|, |u|)
    FWord u{{3, 5, 3}, 1}, v{{7, 9}, 2};
    BigInt total(0);
    for (const auto& [w, c] : shuffle_product(u, v)) {
        CHECK(w.f2_power == 3);
        CHECK(w.weight() == u.weight() + v.weight());
        total += c;
    }
    CHECK(total == BigInt::binomial(5, 3));
}

TEST_CASE("fword validation and coradical degree") {
    FWord bad{{4}, 0};
    CHECK_THROWS_AS(bad.validate(), domain_error);
    FWord w{{3, 9}, 2};
    CHECK(w.weight() == 16);
    CHECK(w.coradical_degree() == 2);
}

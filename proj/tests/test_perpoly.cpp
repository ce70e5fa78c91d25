#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmv/errors.hpp"
#include "mmv/lvalues.hpp"
#include "mmv/numerics.hpp"
#include "mmv/periods.hpp"
#include "mmv/perpoly.hpp"
#include "mmv/polynomials.hpp"

using namespace mmv;

namespace {

const FormId D = FormId::delta();
const FormId G4 = FormId::eisenstein(4);
const FormId G6 = FormId::eisenstein(6);
const FormId G10 = FormId::eisenstein(10);

} // namespace

TEST_CASE("period polynomial of Delta and the Manin split") {
    PrecisionContext ctx(50);
    auto p = ctx.bits();
    UniPoly<BigComplex> P = period_polynomial(D, ctx);
    CHECK(P.degree() == 10);
    ManinSplit ms = manin_split(P, D, 40);
    CHECK(abs(ms.omega_plus - BigFloat("0.114379022438848", p)) < BigFloat("1e-15", p));
    CHECK(abs(ms.omega_minus - BigFloat("0.009269276162370", p)) < BigFloat("1e-15", p));
    CHECK(ms.ratio_spread_log10 < -55);
    // functional equations
    CHECK(reflection_residual(P).log10_abs() < -60);
    CHECK(three_term_residual(P).log10_abs() < -60);
    // omega+ reproduces Lambda(Delta;3) through the reference polynomial
    CHECK((ms.omega_plus / BigFloat(45, p) - lambda_value(D, 3, ctx).re()).log10_abs() < -55);
}

TEST_CASE("manin_split identity case and inconsistency detection") {
    PrecisionContext ctx(30);
    auto p = ctx.bits();
    UniPoly<Rational> ref = delta_plus_reference();
    UniPoly<BigComplex> P;
    for (long k = 0; k <= 10; ++k) P.c.push_back(BigComplex(BigFloat(ref.coeff(k), p)));
    ManinSplit ms = manin_split(P, D, 25);
    CHECK(abs(ms.omega_plus - BigFloat(1, p)) < BigFloat("1e-20", p));
    CHECK(abs(ms.omega_minus) < BigFloat("1e-20", p));

    P.c[2] = BigComplex(BigFloat(Rational(10001, 10000), p)); // break the ratio
    CHECK_THROWS_AS(manin_split(P, D, 25), inconsistency_error);
}

TEST_CASE("Eisenstein period polynomial uses the symmetry value at k = 1") {
    PrecisionContext ctx(30);
    UniPoly<BigComplex> P = period_polynomial(G4, ctx);
    CHECK(P.degree() == 2);
    // coefficient of y^0 is i^{w-2} Lambda(G4;1) = -Lambda(G4;1)
    BigComplex want = -lambda_eisenstein_at_one(4, ctx);
    CHECK((P.coeff(0) - want).abs().log10_abs() < -40);
    CHECK_THROWS_AS(period_polynomial(FormId::delta_prime(), ctx), domain_error);
}

TEST_CASE("generating function: shuffle identity and bidegree") {
    PrecisionContext ctx(30);
    BiPoly<BigComplex> P46 = generating_function(G4, G6, ctx);
    BiPoly<BigComplex> P64 = generating_function(G6, G4, ctx);
    CHECK(P46.d1 == 2);
    CHECK(P46.d2 == 4);
    UniPoly<BigComplex> pf = period_polynomial(G4, ctx);
    UniPoly<BigComplex> pg = period_polynomial(G6, ctx);
    for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 4; ++j) {
            BigComplex lhs = P46.at(i, j) + P64.at(j, i);
            BigComplex rhs = pf.coeff(i) * pg.coeff(j);
            CHECK((lhs - rhs).abs().log10_abs() < -40);
        }
    BiPoly<BigComplex> P410 = generating_function(G4, G10, ctx);
    CHECK(P410.d1 == 2);
    CHECK(P410.d2 == 8);
}

TEST_CASE("generating function diagonal coefficient against the printed table entry") {
    PrecisionContext ctx(30);
    auto p = ctx.bits();
    BiPoly<BigComplex> P = generating_function(G4, G4, ctx);
    // (k,l) = (2,2): i^{8-4-2} C(2,1)^2 Lambda(G4,G4;2,2) = -4/(2^11 3^4)
    BigComplex want(BigFloat(Rational(-4, 165888), p));
    CHECK((P.at(1, 1) - want).abs().log10_abs() < -35);
}

TEST_CASE("delta stack on the printed solver examples") {
    Rational zero(0);
    SUBCASE("y1^2 y2^8 - 1") {
        BiPoly<Rational> P(2, 8, zero);
        P.at(2, 8) = Rational(1);
        P.at(0, 0) = Rational(-1);
        DeltaStack<Rational> st = delta_stack(P);
        REQUIRE(st.entries.size() == 3);
        CHECK(st.entries[0].c[10] == Rational(1));
        CHECK(st.entries[0].c[0] == Rational(-1));
        for (long m = 1; m < 10; ++m) CHECK(st.entries[0].c[static_cast<size_t>(m)] == zero);
        for (const auto& c : st.entries[1].c) CHECK(c == zero);
        for (const auto& c : st.entries[2].c) CHECK(c == zero);
    }
    SUBCASE("(y1 - y2)^2 (y2^6 - 1)") {
        BiPoly<Rational> P(2, 8, zero);
        // (y1^2 - 2 y1 y2 + y2^2)(y2^6 - 1)
        P.at(2, 6) = Rational(1);
        P.at(1, 7) = Rational(-2);
        P.at(0, 8) = Rational(1);
        P.at(2, 0) = Rational(-1);
        P.at(1, 1) = Rational(2);
        P.at(0, 2) = Rational(-1);
        DeltaStack<Rational> st = delta_stack(P);
        for (const auto& c : st.entries[0].c) CHECK(c == zero); // vanishes on the diagonal
        for (const auto& c : st.entries[1].c) CHECK(c == zero);
        CHECK(st.entries[2].c[6] == Rational(1));
        CHECK(st.entries[2].c[0] == Rational(-1));
        for (long m = 1; m < 6; ++m) CHECK(st.entries[2].c[static_cast<size_t>(m)] == zero);
    }
}

TEST_CASE("solve_from_stack reproduces the coboundary polynomials") {
    Rational zero(0);
    SUBCASE("B0 of bidegree (2,8)") {
        DeltaStack<Rational> target;
        target.d1 = 2;
        target.d2 = 8;
        target.entries.resize(3);
        target.entries[0].c.assign(11, zero);
        target.entries[0].c[10] = Rational(1);
        target.entries[0].c[0] = Rational(-1);
        target.entries[1].c.assign(9, zero);
        target.entries[2].c.assign(7, zero);
        BiPoly<Rational> B = solve_from_stack(target, 2, 8);
        CHECK(B.at(2, 8) == Rational(1));
        CHECK(B.at(0, 0) == Rational(-1));
        long nonzero = 0;
        for (const auto& c : B.c)
            if (!c.is_zero()) ++nonzero;
        CHECK(nonzero == 2);
    }
    SUBCASE("B2 of bidegree (2,8)") {
        DeltaStack<Rational> target;
        target.d1 = 2;
        target.d2 = 8;
        target.entries.resize(3);
        target.entries[0].c.assign(11, zero);
        target.entries[1].c.assign(9, zero);
        target.entries[2].c.assign(7, zero);
        target.entries[2].c[6] = Rational(1);
        target.entries[2].c[0] = Rational(-1);
        BiPoly<Rational> B = solve_from_stack(target, 2, 8);
        // (y1 - y2)^2 (y2^6 - 1) up to the delta-stack normalization
        CHECK(B.at(2, 6) == Rational(1));
        CHECK(B.at(1, 7) == Rational(-2));
        CHECK(B.at(0, 8) == Rational(1));
        CHECK(B.at(2, 0) == Rational(-1));
        CHECK(B.at(1, 1) == Rational(2));
        CHECK(B.at(0, 2) == Rational(-1));
    }
}

TEST_CASE("stack round trip is the identity on random rational bipolynomials") {
    unsigned long long seed = 0xC0FFEE123456789ULL;
    auto rnd = [&seed]() {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        return seed;
    };
    for (int trial = 0; trial < 20; ++trial) {
        long d1 = 1 + static_cast<long>(rnd() % 5);
        long d2 = 1 + static_cast<long>(rnd() % 7);
        BiPoly<Rational> P(d1, d2, Rational(0));
        for (auto& c : P.c)
            c = Rational(static_cast<long>(rnd() % 101) - 50, static_cast<long>(rnd() % 9) + 1);
        BiPoly<Rational> back = solve_from_stack(delta_stack(P), d1, d2);
        for (size_t i = 0; i < P.c.size(); ++i) CHECK(P.c[i] == back.c[i]);
    }
}

TEST_CASE("stack dimension count") {
    for (auto [d1, d2] : std::vector<std::pair<long, long>>{{2, 8}, {4, 6}, {3, 3}}) {
        BiPoly<Rational> P(d1, d2, Rational(0));
        DeltaStack<Rational> st = delta_stack(P);
        long total = 0;
        for (const auto& e : st.entries) total += static_cast<long>(e.c.size());
        CHECK(total == (d1 + 1) * (d2 + 1));
    }
}

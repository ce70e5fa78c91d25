#include "mmv/perpoly.hpp"

#include <cmath>

#include "mmv/errors.hpp"
#include "mmv/lvalues.hpp"

namespace mmv {

UniPoly<BigComplex> period_polynomial(const FormId& f, const PrecisionContext& ctx) {
    if (f.kind == FormKind::DeltaPrime)
        throw domain_error("period_polynomial: second-kind forms out of scope");
    if (f.kind == FormKind::Eisenstein && (f.weight < 4 || f.weight > 22))
        throw domain_error("period_polynomial: Eisenstein weight outside 4..22");
    const int w = f.weight;
    const mpfr_prec_t prec = ctx.bits();
    UniPoly<BigComplex> P;
    P.c.reserve(static_cast<size_t>(w - 1));
    for (long k = 1; k <= w - 1; ++k) {
        BigComplex lam = (f.kind == FormKind::Eisenstein && k == 1)
                             ? lambda_eisenstein_at_one(w, ctx)
                             : lambda_value(f, k, ctx);
        BigFloat binom(BigInt::binomial(static_cast<unsigned long>(w - 2),
                                        static_cast<unsigned long>(k - 1)),
                       prec);
        P.c.push_back((BigComplex(binom) * lam).mul_i_power(w - k - 1));
    }
    return P;
}

UniPoly<Rational> delta_plus_reference() {
    UniPoly<Rational> p;
    p.c.assign(11, Rational(0));
    p.c[0] = Rational(-36, 691);
    p.c[2] = Rational(1);
    p.c[4] = Rational(-3);
    p.c[6] = Rational(3);
    p.c[8] = Rational(-1);
    p.c[10] = Rational(36, 691);
    return p;
}

UniPoly<Rational> delta_minus_reference() {
    UniPoly<Rational> p;
    p.c.assign(10, Rational(0));
    p.c[1] = Rational(4);
    p.c[3] = Rational(-25);
    p.c[5] = Rational(42);
    p.c[7] = Rational(-25);
    p.c[9] = Rational(4);
    return p;
}

ManinSplit manin_split(const UniPoly<BigComplex>& P, const FormId& f, int tol_digits) {
    if (!(f == FormId::delta()))
        throw domain_error("manin_split: reference polynomials only housed for Delta");
    if (P.degree() != 10) throw domain_error("manin_split: degree must be 10");
    const mpfr_prec_t prec = P.c[0].precision();
    UniPoly<Rational> rp = delta_plus_reference();
    UniPoly<Rational> rm = delta_minus_reference();

    // even(P) is real and odd(P) purely imaginary: i^{11-k} is real for odd k.
    // A vanishing family (all even or all odd coefficients zero) gives 0.
    double scale = -1e18;
    for (const auto& c : P.c) scale = std::max(scale, c.abs().log10_abs());
    BigFloat wp(prec), wm(prec);
    double spread = -1e18;
    bool have_p = false, have_m = false;
    for (long k = 0; k <= 10; ++k) {
        const BigComplex& c = P.c[static_cast<size_t>(k)];
        const bool even = (k % 2 == 0);
        const Rational& ref = even ? rp.coeff(k) : rm.coeff(k);
        if (ref.is_zero()) continue;
        BigFloat part = even ? c.re() : c.im();
        BigFloat leak = even ? c.im() : c.re();
        spread = std::max(spread, leak.log10_abs() - scale);
        if (part.log10_abs() < scale - 2 * tol_digits) continue; // vanishing family
        BigFloat ratio = part / BigFloat(ref, prec);
        if (even) {
            if (have_p) spread = std::max(spread, (ratio - wp).log10_abs() - ratio.log10_abs());
            wp = ratio;
            have_p = true;
        } else {
            if (have_m) spread = std::max(spread, (ratio - wm).log10_abs() - ratio.log10_abs());
            wm = ratio;
            have_m = true;
        }
    }
    if (!have_p && !have_m) throw inconsistency_error("manin_split: degenerate input");
    if (spread > -tol_digits)
        throw inconsistency_error("manin_split: coefficient ratios not constant (spread 1e" +
                                  std::to_string(spread) + ")");
    return {wp, wm, spread};
}

BiPoly<BigComplex> generating_function(const std::vector<std::vector<MMValue>>& table,
                                       const FormId& f, const FormId& g) {
    const long d1 = f.weight - 2, d2 = g.weight - 2;
    if (static_cast<long>(table.size()) != d1 + 1 ||
        static_cast<long>(table[0].size()) != d2 + 1)
        throw domain_error("generating_function: table shape mismatch");
    const mpfr_prec_t prec = table[0][0].lambda.precision();
    BiPoly<BigComplex> P(d1, d2, BigComplex(prec));
    for (long k = 1; k <= d1 + 1; ++k)
        for (long l = 1; l <= d2 + 1; ++l) {
            BigFloat b1(BigInt::binomial(static_cast<unsigned long>(d1),
                                         static_cast<unsigned long>(k - 1)),
                        prec);
            BigFloat b2(BigInt::binomial(static_cast<unsigned long>(d2),
                                         static_cast<unsigned long>(l - 1)),
                        prec);
            const BigComplex& lam = table[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)].lambda;
            P.at(k - 1, l - 1) =
                (BigComplex(b1 * b2) * lam).mul_i_power(f.weight + g.weight - k - l - 2);
        }
    return P;
}

BiPoly<BigComplex> generating_function(const FormId& f, const FormId& g,
                                       const PrecisionContext& ctx) {
    return generating_function(mmv_table(f, g, ctx), f, g);
}

BigFloat reflection_residual(const UniPoly<BigComplex>& P) {
    const long d = P.degree();
    BigFloat worst(P.c[0].precision());
    for (long m = 0; m <= d; ++m) {
        int sgn = ((d - m) % 2 == 0) ? 1 : -1;
        BigComplex r = P.coeff(m) + (sgn < 0 ? -P.coeff(d - m) : P.coeff(d - m));
        if (r.abs() > worst) worst = r.abs();
    }
    return worst;
}

BigFloat three_term_residual(const UniPoly<BigComplex>& P) {
    const long d = P.degree();
    const mpfr_prec_t prec = P.c[0].precision();
    std::vector<BigComplex> acc(static_cast<size_t>(d + 1), BigComplex(prec));
    for (long m = 0; m <= d; ++m) acc[static_cast<size_t>(m)] += P.coeff(m);
    // (1-y)^{d-k} expansion of P(1/(1-y)) term k, and y^{d-k}(y-1)^k of P((y-1)/y).
    for (long k = 0; k <= d; ++k) {
        const BigComplex& ck = P.coeff(k);
        if (ck.is_zero()) continue;
        for (long j = 0; j <= d - k; ++j) {
            BigInt b = BigInt::binomial(static_cast<unsigned long>(d - k),
                                        static_cast<unsigned long>(j));
            int sgn = (j % 2 == 0) ? 1 : -1;
            BigComplex t = BigComplex(BigFloat(sgn < 0 ? -b : b, prec)) * ck;
            acc[static_cast<size_t>(j)] += t;
        }
        for (long j = 0; j <= k; ++j) {
            // y^{d-k} (y-1)^k: coefficient of y^{d-k+j} is C(k,j)(-1)^{k-j}
            BigInt b = BigInt::binomial(static_cast<unsigned long>(k),
                                        static_cast<unsigned long>(j));
            int sgn = ((k - j) % 2 == 0) ? 1 : -1;
            BigComplex t = BigComplex(BigFloat(sgn < 0 ? -b : b, prec)) * ck;
            acc[static_cast<size_t>(d - k + j)] += t;
        }
    }
    BigFloat worst(prec);
    for (const auto& a : acc)
        if (a.abs() > worst) worst = a.abs();
    return worst;
}

} // namespace mmv

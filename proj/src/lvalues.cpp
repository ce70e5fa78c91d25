#include "mmv/lvalues.hpp"

#include "mmv/errors.hpp"
#include "mmv/numerics.hpp"

namespace mmv {

CompletedLValue lambda_eisenstein(int w, long s, const PrecisionContext& ctx) {
    if (w < 4 || w % 2 != 0) throw domain_error("lambda_eisenstein: bad weight");
    if (s == 1 || s == w)
        throw pole_error("lambda_eisenstein: zeta factor pole at s = " + std::to_string(s));
    const mpfr_prec_t prec = ctx.bits();
    // (2 pi)^{-s} (s-1)! zeta(s) zeta(s - w + 1)
    BigComplex z1 = (s >= 2) ? riemann_zeta(s, ctx)
                             : BigComplex(BigFloat(riemann_zeta_nonpositive(s), prec));
    long s2 = s - w + 1;
    if (s2 == 1) throw pole_error("lambda_eisenstein: second zeta factor pole");
    BigComplex z2 = (s2 >= 2) ? riemann_zeta(s2, ctx)
                              : BigComplex(BigFloat(riemann_zeta_nonpositive(s2), prec));
    BigFloat two_pi = BigFloat(2, prec) * BigFloat::pi(prec);
    BigComplex v = BigComplex(pow_si(two_pi, -s) * factorial_big(s - 1, prec)) * z1 * z2;
    return {FormId::eisenstein(w), s, v, LValueMethod::zeta_factorization};
}

BigComplex lambda_eisenstein_at_one(int w, const PrecisionContext& ctx) {
    BigComplex v = lambda_eisenstein(w, w - 1, ctx).value;
    return (w / 2) % 2 == 0 ? v : -v;
}

CompletedLValue lambda_cuspform(const FormId& f, long s, const PrecisionContext& ctx) {
    if (!(f == FormId::delta())) throw domain_error("lambda_cuspform: only Delta is in scope");
    if (s < 1) throw domain_error("lambda_cuspform: need s >= 1");
    const int w = 12;
    if (s > w) throw domain_error("lambda_cuspform: s beyond the weight is unsupported");
    const mpfr_prec_t prec = ctx.bits();
    const long N = truncation_for_digits(ctx.working_digits(), 12);
    QExpansion d = delta(N);
    const BigFloat two_pi = BigFloat(2, prec) * BigFloat::pi(prec);

    // Lambda(s) = sum a_n (2 pi n)^{-s} Gamma(s, 2 pi n)
    //           + (-1)^{w/2} sum a_n (2 pi n)^{s-w} Gamma(w-s, 2 pi n),
    // the second sum degenerating to E_1 terms at s = w.
    BigFloat total(prec);
    for (long n = 1; n <= N; ++n) {
        BigFloat an(d.coeff(n), prec);
        if (an.is_zero()) continue;
        BigFloat x = two_pi * BigFloat(n, prec);
        BigFloat t1 = pow_si(x, -s) * upper_incomplete_gamma_real(s, x, prec);
        BigFloat t2 = (s == w) ? exponential_integral_e1(x, prec)
                               : pow_si(x, s - w) * upper_incomplete_gamma_real(w - s, x, prec);
        total += an * (t1 + t2); // (-1)^{w/2} = +1 for w = 12
    }
    return {f, s, BigComplex(total), LValueMethod::incomplete_gamma};
}

BigComplex lambda_value(const FormId& f, long s, const PrecisionContext& ctx) {
    if (f.kind == FormKind::Eisenstein) {
        if (s == 1) return lambda_eisenstein_at_one(f.weight, ctx);
        return lambda_eisenstein(f.weight, s, ctx).value;
    }
    return lambda_cuspform(f, s, ctx).value;
}

} // namespace mmv

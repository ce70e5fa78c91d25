#ifndef MMV_PERPOLY_HPP
#define MMV_PERPOLY_HPP

#include "mmv/engine.hpp"
#include "mmv/polynomials.hpp"

namespace mmv {

// P_f(y) = sum_{k=1}^{w-1} i^{w-k-1} C(w-2, k-1) Lambda(f; k) y^{k-1}.
UniPoly<BigComplex> period_polynomial(const FormId& f, const PrecisionContext& ctx);

// Manin's even/odd reference polynomials for Delta, exact.
UniPoly<Rational> delta_plus_reference();  // (36/691)(y^10 - 1) + y^2 - 3y^4 + 3y^6 - y^8
UniPoly<Rational> delta_minus_reference(); // 4y - 25y^3 + 42y^5 - 25y^7 + 4y^9

struct ManinSplit {
    BigFloat omega_plus;
    BigFloat omega_minus;
    double ratio_spread_log10; // worst log10 disagreement between coefficient ratios
};

// Extract omega_pm from even(P) = omega_+ P_{Delta,+}, odd(P) = i omega_- P_{Delta,-};
// throws inconsistency_error if the coefficient ratios disagree beyond tolerance.
ManinSplit manin_split(const UniPoly<BigComplex>& P, const FormId& f, int tol_digits);

// Generating function P_{f,g}(y1, y2) with coefficients
// i^{w_f+w_g-k-l-2} C(w_f-2,k-1) C(w_g-2,l-1) Lambda(f,g;k,l).
BiPoly<BigComplex> generating_function(const std::vector<std::vector<MMValue>>& table,
                                       const FormId& f, const FormId& g);
BiPoly<BigComplex> generating_function(const FormId& f, const FormId& g,
                                       const PrecisionContext& ctx);

// max |coefficient| of P(y) + y^{w-2} P(-1/y); zero for cusp-form periods.
BigFloat reflection_residual(const UniPoly<BigComplex>& P);

// max |coefficient| of P(y) + (1-y)^{w-2} P(1/(1-y)) + y^{w-2} P((y-1)/y).
BigFloat three_term_residual(const UniPoly<BigComplex>& P);

} // namespace mmv

#endif

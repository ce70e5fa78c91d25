#ifndef MMV_MODFORMS_HPP
#define MMV_MODFORMS_HPP

#include "mmv/bigcomplex.hpp"
#include "mmv/precision.hpp"
#include "mmv/qexpansion.hpp"

namespace mmv {

// G_w = -b_w/2w + sum_{n>=1} sigma_{w-1}(n) q^n, for even w >= 4.
QExpansion eisenstein(int w, long N);

// Delta = q prod (1-q^n)^24, coefficients up to q^N (N >= 1).
QExpansion delta(long N);

// The weight-12 weakly holomorphic form q^{-1} + O(q^2), built as
// Delta * (j^2 + alpha j + beta) with (alpha, beta) killing a_0 and a_1.
QExpansion delta_prime(long N);

QExpansion form_expansion(const FormId& f, long N);

// j = E_4^3 / Delta as an exact Laurent series from q^{-1} to q^N.
RatQSeries j_invariant_series(long N);

// Weight-(-10) weakly holomorphic form with prescribed principal part
// sum_{n=1}^{m} b_n q^{-n} (b as coeffs of q^{-1}..q^{-m}); exists iff
// sum b_n a_n(Delta) = 0. Series returned up to q^N.
RatQSeries weight_minus10_from_principal_part(const std::vector<Rational>& b, long N);

// Truncation sufficient for D decimal digits of a q-expansion evaluated at
// y >= 1 (q = e^{-2 pi y}), with margin.
long truncation_for_digits(int digits, int extra = 10);

// sum a_n e^{-2 pi n y}; drops a_0 when drop_constant is set. Throws
// precision_error when the truncation cannot support the context's digits.
BigComplex evaluate_at_iy(const QExpansion& f, const BigFloat& y, bool drop_constant,
                          const PrecisionContext& ctx);

} // namespace mmv

#endif

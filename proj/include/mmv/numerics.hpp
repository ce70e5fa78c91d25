#ifndef MMV_NUMERICS_HPP
#define MMV_NUMERICS_HPP

#include <optional>

#include "mmv/bigcomplex.hpp"
#include "mmv/precision.hpp"
#include "mmv/rational.hpp"

namespace mmv {

// Bernoulli number b_n (b_2 = 1/6 convention). n must be even and >= 2.
Rational bernoulli(long n);

// Bernoulli numbers including b_0 = 1 and b_1 = -1/2; used internally by
// Euler-Maclaurin and the zeta special values.
Rational bernoulli_any(long n);

// zeta(s) at integer s != 1. Nonpositive s via Bernoulli special values,
// s >= 2 via Euler-Maclaurin accelerated summation.
BigComplex riemann_zeta(long s, const PrecisionContext& ctx);

// zeta at nonpositive integers is rational: zeta(0) = -1/2,
// zeta(1-2n) = -b_{2n}/2n, zeta(-2n) = 0.
Rational riemann_zeta_nonpositive(long s);

// Gamma(s, x) = int_x^inf e^{-t} t^{s-1} dt for integer s >= 1, x > 0,
// via the finite closed form (s-1)! e^{-x} sum_{j<s} x^j/j!.
BigComplex upper_incomplete_gamma(long s, const BigFloat& x, const PrecisionContext& ctx);
BigFloat upper_incomplete_gamma_real(long s, const BigFloat& x, mpfr_prec_t prec);

// Exponential integral E_1(x) = int_x^inf e^{-t}/t dt, x > 0. Power series
// with boosted working precision to absorb the e^x cancellation.
BigFloat exponential_integral_e1(const BigFloat& x, mpfr_prec_t prec);

BigFloat factorial_big(long n, mpfr_prec_t prec);

// Continued-fraction reconstruction: the small rational p/q with
// |x - p/q| < 10^{-(digits-10)} and q < 10^{digits/3}, if one exists.
std::optional<Rational> rational_reconstruct(const BigFloat& x, int digits);

} // namespace mmv

#endif

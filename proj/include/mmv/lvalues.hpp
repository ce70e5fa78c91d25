#ifndef MMV_LVALUES_HPP
#define MMV_LVALUES_HPP

#include "mmv/bigcomplex.hpp"
#include "mmv/modforms.hpp"
#include "mmv/precision.hpp"

namespace mmv {

enum class LValueMethod { zeta_factorization, incomplete_gamma };

// Completed L-value Lambda(f; s) = (2 pi)^{-s} Gamma(s) L(f, s).
struct CompletedLValue {
    FormId form;
    long s;
    BigComplex value;
    LValueMethod method;
};

// Eisenstein case via L(G_w, s) = zeta(s) zeta(s - w + 1).
// s in {1, w} hits a pole of a zeta factor and is rejected.
CompletedLValue lambda_eisenstein(int w, long s, const PrecisionContext& ctx);

// Lambda(G_w; 1) = (-1)^{w/2} Lambda(G_w; w-1), the value the boundary
// coefficient of the period polynomial uses.
BigComplex lambda_eisenstein_at_one(int w, const PrecisionContext& ctx);

// Cusp form case (Delta), any integer s >= 1 including the non-critical
// edge s = w, via incomplete-gamma sums.
CompletedLValue lambda_cuspform(const FormId& f, long s, const PrecisionContext& ctx);

BigComplex lambda_value(const FormId& f, long s, const PrecisionContext& ctx);

} // namespace mmv

#endif

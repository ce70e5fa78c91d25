#ifndef MMV_QTAU_HPP
#define MMV_QTAU_HPP

#include <vector>

#include "mmv/bigcomplex.hpp"

namespace mmv {

// Element of the function ring sum_{m,p} c_{m,p} q^m tau^p (q = e^{2 pi i tau})
// in which regularized iterated integrals are computed. q-degree truncated at
// qmax; tau-degree grows as integrals are taken.
class QTauElement {
  public:
    QTauElement(long qmax, mpfr_prec_t prec) : qmax_(qmax), prec_(prec), c_(qmax + 1) {}

    static QTauElement one(long qmax, mpfr_prec_t prec);

    long qmax() const { return qmax_; }
    mpfr_prec_t precision() const { return prec_; }
    long tau_degree(long m) const { return static_cast<long>(c_[m].size()) - 1; }

    const BigComplex& coeff(long m, long p) const;
    void add(long m, long p, const BigComplex& v);

    // Multiply by the one-form piece f(tau) tau^t where f has q-coefficients
    // fc[0..N] (fc[k] multiplies q^{k + f_leading}).
    QTauElement mul_form(const std::vector<BigComplex>& fc, long f_leading, long t) const;

    // G(tau) = R int_tau^{i inf} g dtau', the primitive vanishing at the
    // tangential basepoint (polynomial part gets the zero-constant primitive).
    QTauElement reg_primitive() const;

    // Value at tau = i y (q = e^{-2 pi y}); y = 1 is the path split point.
    BigComplex evaluate_at_iy(const BigFloat& y) const;

  private:
    long qmax_;
    mpfr_prec_t prec_;
    // c_[m][p] = coefficient of q^m tau^p; rows ragged.
    std::vector<std::vector<BigComplex>> c_;
};

} // namespace mmv

#endif

#ifndef MMV_BIGCOMPLEX_HPP
#define MMV_BIGCOMPLEX_HPP

#include <iosfwd>

#include "mmv/bigfloat.hpp"

namespace mmv {

// Arbitrary-precision complex scalar.
class BigComplex {
  public:
    BigComplex() = default;
    explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(BigFloat re) : re_(std::move(re)), im_(re_.precision()) {}
    BigComplex(long v, mpfr_prec_t prec) : re_(v, prec), im_(prec) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigFloat& a, const BigComplex& b) {
        return {a * b.re_, a * b.im_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }
    BigComplex& operator+=(const BigComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o) {
        *this = *this * o;
        return *this;
    }

    // In-place *this += a*b, avoiding temporaries in hot loops.
    void add_mul(const BigComplex& a, const BigComplex& b);

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    BigComplex conj() const { return {re_, -im_}; }
    BigFloat abs() const;
    BigFloat norm2() const { return re_ * re_ + im_ * im_; }

    // Multiplication by i^k, exact.
    BigComplex mul_i_power(long k) const;

    static BigComplex i_power(long k, mpfr_prec_t prec);

    std::string str(int digits) const;

  private:
    BigFloat re_, im_;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

} // namespace mmv

#endif

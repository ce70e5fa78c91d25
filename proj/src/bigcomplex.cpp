#include "mmv/bigcomplex.hpp"

#include <ostream>

#include "mmv/errors.hpp"

namespace mmv {

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.norm2();
    if (d.is_zero()) throw domain_error("BigComplex: division by zero");
    BigComplex num = a * b.conj();
    return {num.re_ / d, num.im_ / d};
}

void BigComplex::add_mul(const BigComplex& a, const BigComplex& b) {
    re_ = fma(a.re_, b.re_, re_);
    re_ = fma(-a.im_, b.im_, re_);
    im_ = fma(a.re_, b.im_, im_);
    im_ = fma(a.im_, b.re_, im_);
}

BigFloat BigComplex::abs() const {
    BigFloat r(precision());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
    return r;
}

BigComplex BigComplex::mul_i_power(long k) const {
    long m = ((k % 4) + 4) % 4;
    switch (m) {
        case 0: return *this;
        case 1: return {-im_, re_};
        case 2: return {-re_, -im_};
        default: return {im_, -re_};
    }
}

BigComplex BigComplex::i_power(long k, mpfr_prec_t prec) {
    return BigComplex(1, prec).mul_i_power(k);
}

std::string BigComplex::str(int digits) const {
    if (im_.is_zero()) return re_.str(digits);
    std::string s = re_.str(digits);
    if (im_.sign() >= 0)
        s += " + " + im_.str(digits) + "i";
    else
        s += " - " + (-im_).str(digits) + "i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
    return os << z.str(static_cast<int>(z.precision() / 3.33));
}

} // namespace mmv

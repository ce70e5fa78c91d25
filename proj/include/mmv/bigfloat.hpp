#ifndef MMV_BIGFLOAT_HPP
#define MMV_BIGFLOAT_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "mmv/rational.hpp"

namespace mmv {

// Arbitrary-precision real. Every value carries its own working precision
// (bits); binary operations compute at the larger of the two precisions.
class BigFloat {
  public:
    static constexpr mpfr_prec_t kMinPrec = 64;

    BigFloat() { mpfr_init2(x_, kMinPrec); mpfr_set_zero(x_, 1); }
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(x_, clamp(prec)); mpfr_set_zero(x_, 1); }
    BigFloat(long v, mpfr_prec_t prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    BigFloat(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_q(x_, q.raw(), MPFR_RNDN);
    }
    BigFloat(const BigInt& z, mpfr_prec_t prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_z(x_, z.raw(), MPFR_RNDN);
    }
    BigFloat(const std::string& s, mpfr_prec_t prec);

    BigFloat(const BigFloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, kMinPrec);
        mpfr_swap(x_, o.x_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.x_, b.x_) == 0;
    }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.x_, b.x_) < 0;
    }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.x_, b.x_) <= 0;
    }
    friend bool operator>(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.x_, b.x_) > 0;
    }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.x_, b.x_) >= 0;
    }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }

    // Decimal string with the given number of significant digits.
    std::string str(int digits) const;

    // log10 of |value|; very negative for 0.
    double log10_abs() const;

    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat euler_gamma(mpfr_prec_t prec);

  private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }
    mpfr_t x_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat pow_si(const BigFloat& a, long e);
BigFloat fma(const BigFloat& a, const BigFloat& b, const BigFloat& c); // a*b + c
BigFloat round_to_integer(const BigFloat& a);
BigInt round_to_bigint(const BigFloat& a);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

// Decimal digits -> working mpfr precision in bits (with headroom).
inline mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 24);
}

} // namespace mmv

#endif

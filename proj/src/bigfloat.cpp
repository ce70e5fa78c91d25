#include "mmv/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include "mmv/errors.hpp"

namespace mmv {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace

BigFloat::BigFloat(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(x_, clamp(prec));
    if (mpfr_set_str(x_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(x_);
        throw domain_error("BigFloat: cannot parse '" + s + "'");
    }
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw domain_error("BigFloat: division by zero");
    BigFloat r(join(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    if (precision() < o.precision()) mpfr_prec_round(x_, o.precision(), MPFR_RNDN);
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    if (precision() < o.precision()) mpfr_prec_round(x_, o.precision(), MPFR_RNDN);
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    if (precision() < o.precision()) mpfr_prec_round(x_, o.precision(), MPFR_RNDN);
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.is_zero()) throw domain_error("BigFloat: division by zero");
    if (precision() < o.precision()) mpfr_prec_round(x_, o.precision(), MPFR_RNDN);
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

std::string BigFloat::str(int digits) const {
    if (digits < 2) digits = 2;
    if (mpfr_zero_p(x_)) return "0";
    if (!mpfr_number_p(x_)) return mpfr_nan_p(x_) ? "nan" : (mpfr_sgn(x_) > 0 ? "inf" : "-inf");
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    // Strip trailing zeros, keep at least one digit.
    size_t last = d.find_last_not_of('0');
    d = d.substr(0, std::max<size_t>(last + 1, 1));
    std::string out;
    long exp = static_cast<long>(e); // value = 0.d1d2... * 10^exp
    if (exp >= 1 && exp <= digits + 4) {
        if (static_cast<size_t>(exp) >= d.size())
            out = d + std::string(static_cast<size_t>(exp) - d.size(), '0');
        else
            out = d.substr(0, static_cast<size_t>(exp)) + "." + d.substr(static_cast<size_t>(exp));
    } else if (exp <= 0 && exp > -6) {
        out = "0." + std::string(static_cast<size_t>(-exp), '0') + d;
    } else {
        out = d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += "e" + std::to_string(exp - 1);
    }
    return neg ? "-" + out : out;
}

double BigFloat::log10_abs() const {
    if (mpfr_zero_p(x_)) return -1e18;
    long exp2 = mpfr_get_exp(x_);
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, x_, MPFR_RNDN);
    mpfr_set_exp(t, 0); // t in [0.5, 1)
    double frac = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return (static_cast<double>(exp2) * std::log(2.0) + std::log(frac)) / std::log(10.0);
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::euler_gamma(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_euler(r.x_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat fma(const BigFloat& a, const BigFloat& b, const BigFloat& c) {
    BigFloat r(std::max(std::max(a.precision(), b.precision()), c.precision()));
    mpfr_fma(r.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
    return r;
}

BigFloat round_to_integer(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigInt round_to_bigint(const BigFloat& a) {
    BigInt z;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(a.raw()));
    mpfr_rint(t, a.raw(), MPFR_RNDN);
    mpfr_get_z(z.raw(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
    return os << x.str(static_cast<int>(x.precision() / 3.33));
}

} // namespace mmv

#ifndef MMV_RATIONAL_HPP
#define MMV_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mmv {

// Exact unbounded integer (value-semantic mpz wrapper).
class BigInt {
  public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    explicit BigInt(const std::string& s) { mpz_init_set_str(z_, s.c_str(), 10); }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a) {
        BigInt r;
        mpz_neg(r.z_, a.z_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }
    BigInt abs() const {
        BigInt r;
        mpz_abs(r.z_, z_);
        return r;
    }
    // Truncated bit length of |value|; 0 for value 0.
    size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }
    long to_long() const { return mpz_get_si(z_); }
    double to_double() const { return mpz_get_d(z_); }
    std::string str() const;

    static BigInt pow(const BigInt& b, unsigned long e) {
        BigInt r;
        mpz_pow_ui(r.z_, b.z_, e);
        return r;
    }
    static BigInt factorial(unsigned long n) {
        BigInt r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    static BigInt binomial(unsigned long n, unsigned long k) {
        BigInt r;
        mpz_bin_uiui(r.z_, n, k);
        return r;
    }
    // Floor of a/b.
    static BigInt fdiv(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_fdiv_q(r.z_, a.z_, b.z_);
        return r;
    }

  private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& z);

// Exact rational number, always kept in canonical form.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigInt& num) {
        mpq_init(q_);
        mpq_set_z(q_, num.raw());
    }
    // Parses "a/b" or "a".
    explicit Rational(const std::string& s);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    mpq_srcptr raw() const { return q_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) {
        Rational r;
        mpq_neg(r.q_, a.q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    BigInt numerator() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    BigInt denominator() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    double to_double() const { return mpq_get_d(q_); }
    std::string str() const;

    static Rational pow(const Rational& b, long e);

  private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace mmv

#endif

#include "mmv/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "mmv/errors.hpp"

namespace mmv {

std::string BigInt::str() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& z) { return os << z.str(); }

Rational::Rational(long num, long den) {
    if (den == 0) throw domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational::Rational(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0) {
        mpq_clear(q_);
        throw domain_error("Rational: cannot parse '" + s + "'");
    }
    mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational Rational::pow(const Rational& b, long e) {
    if (e == 0) return Rational(1);
    if (b.is_zero() && e < 0) throw domain_error("Rational: 0 to negative power");
    Rational r;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(b.q_), ae);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(b.q_), ae);
    if (e < 0) mpq_inv(r.q_, r.q_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace mmv

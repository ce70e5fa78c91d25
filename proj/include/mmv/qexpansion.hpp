#ifndef MMV_QEXPANSION_HPP
#define MMV_QEXPANSION_HPP

#include <string>
#include <vector>

#include "mmv/rational.hpp"

namespace mmv {

enum class FormKind { Eisenstein, Delta, DeltaPrime };

// Identifies one of the level-1 forms in scope.
struct FormId {
    FormKind kind;
    int weight;

    static FormId eisenstein(int w) { return {FormKind::Eisenstein, w}; }
    static FormId delta() { return {FormKind::Delta, 12}; }
    static FormId delta_prime() { return {FormKind::DeltaPrime, 12}; }

    bool operator==(const FormId& o) const { return kind == o.kind && weight == o.weight; }
    bool is_cuspidal() const { return kind == FormKind::Delta; }
    std::string name() const;
};

FormId parse_form_id(const std::string& s);

// Truncated Fourier expansion with exact rational coefficients
// a_{leading_order}, ..., a_N.
class QExpansion {
  public:
    QExpansion(int weight, long leading_order, std::vector<Rational> coeffs)
        : weight_(weight), leading_(leading_order), coeffs_(std::move(coeffs)) {}

    int weight() const { return weight_; }
    long leading_order() const { return leading_; }
    long truncation() const { return leading_ + static_cast<long>(coeffs_.size()) - 1; }

    // a_n; zero outside the stored range below truncation.
    const Rational& coeff(long n) const;

    std::string to_json(const std::string& kind) const;

  private:
    int weight_;
    long leading_;
    std::vector<Rational> coeffs_;
};

// Laurent series in q with exact rational coefficients, truncated at q^N.
// Internal building block for eta powers, j, Delta' and Hecke checks.
class RatQSeries {
  public:
    RatQSeries(long leading, long truncation)
        : leading_(leading), trunc_(truncation),
          c_(static_cast<size_t>(truncation - leading + 1), Rational(0)) {}

    long leading() const { return leading_; }
    long truncation() const { return trunc_; }
    Rational& at(long n);
    const Rational& coeff(long n) const;

    RatQSeries mul(const RatQSeries& o, long trunc) const;
    RatQSeries pow(long e, long trunc) const;
    // Requires the leading coefficient of the divisor to be nonzero.
    RatQSeries div(const RatQSeries& o, long trunc) const;
    RatQSeries add(const RatQSeries& o) const;
    RatQSeries scale(const Rational& s) const;
    RatQSeries shift(long k) const; // multiply by q^k

  private:
    long leading_;
    long trunc_;
    std::vector<Rational> c_;
};

// sigma_k(n) = sum of k-th powers of divisors.
BigInt divisor_sigma(long k, long n);

} // namespace mmv

#endif

#ifndef MMV_PRECISION_HPP
#define MMV_PRECISION_HPP

#include "mmv/bigfloat.hpp"
#include "mmv/errors.hpp"

namespace mmv {

// Requested output precision plus guard digits for internal computation.
// Immutable; safe to share across threads.
class PrecisionContext {
  public:
    explicit PrecisionContext(int decimal_digits, int guard_digits = 20)
        : decimal_digits_(decimal_digits), guard_digits_(guard_digits) {
        if (decimal_digits_ < 1) throw domain_error("PrecisionContext: digits must be positive");
        if (guard_digits_ < 20) throw domain_error("PrecisionContext: guard_digits must be >= 20");
    }

    int decimal_digits() const { return decimal_digits_; }
    int guard_digits() const { return guard_digits_; }
    int working_digits() const { return decimal_digits_ + guard_digits_; }
    mpfr_prec_t bits() const { return bits_for_digits(working_digits()); }

    PrecisionContext doubled() const {
        return PrecisionContext(2 * decimal_digits_, guard_digits_);
    }
    PrecisionContext with_extra_digits(int extra) const {
        return PrecisionContext(decimal_digits_ + extra, guard_digits_);
    }

    BigFloat make(long v) const { return BigFloat(v, bits()); }
    BigFloat make(const Rational& q) const { return BigFloat(q, bits()); }
    BigFloat pi() const { return BigFloat::pi(bits()); }

  private:
    int decimal_digits_;
    int guard_digits_;
};

} // namespace mmv

#endif

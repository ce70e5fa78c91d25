#ifndef MMV_ENGINE_HPP
#define MMV_ENGINE_HPP

#include <map>
#include <vector>

#include "mmv/modforms.hpp"
#include "mmv/precision.hpp"
#include "mmv/qtau.hpp"

namespace mmv {

// One letter of an iterand word: the one-form f(tau) tau^{n-1} dtau.
struct Letter {
    FormId form;
    long n;
};

// Word omega_1 ... omega_r with omega_1 attached at the 0-end of the path.
struct IterandWord {
    std::vector<Letter> letters;
    long length() const { return static_cast<long>(letters.size()); }
    long index_sum() const;
    void validate() const; // 0 < n_i < w_i, r <= 3
};

struct MMValue {
    IterandWord word;
    BigComplex raw_integral;  // path integral over (0, i inf)
    BigComplex lambda;        // normalized value, real for the in-scope words
    BigComplex normalization; // frozen unit applied: i^{-(n_1+...+n_r)}
};

// S-pullback of a letter under tau -> -1/tau:
// S*(f tau^{n-1} dtau) = (-1)^{n-1} f tau^{w-n-1} dtau.
struct PulledLetter {
    int sign;
    Letter letter;
};
PulledLetter s_pullback(const Letter& l);

// Shared evaluation state: q-expansions of the forms as complex coefficient
// vectors at fixed precision and truncation.
class EngineContext {
  public:
    explicit EngineContext(const PrecisionContext& ctx, long qterms_override = 0);

    const PrecisionContext& precision() const { return ctx_; }
    mpfr_prec_t bits() const { return ctx_.bits(); }
    long qterms() const { return qterms_; }

    // Coefficient vector starting at the form's leading q-power.
    const std::vector<BigComplex>& coefficients(const FormId& f);
    long leading_order(const FormId& f);

  private:
    PrecisionContext ctx_;
    long qterms_;
    std::map<std::pair<int, int>, std::pair<long, std::vector<BigComplex>>> cache_;
};

// Regularized iterated integral over [i, i inf) with omega_1 integrated
// nearest i: int_{i <= tau_1 <= ... <= tau_r} omega_1(tau_1)...omega_r(tau_r).
BigComplex tail_integral(const IterandWord& word, EngineContext& ec);

// Same over a y-interval [1, y1] (finite segment, no regularization needed).
BigComplex segment_integral(const IterandWord& word, const BigFloat& y1, EngineContext& ec);

// Regularized iterated integral over [i y, i inf).
BigComplex tail_integral_from(const IterandWord& word, const BigFloat& y, EngineContext& ec);

// Full multiple modular value via Chen composition at tau = i with the
// 0-end handled by the S-pullback of the tail machinery.
MMValue lambda_mmv(const IterandWord& word, EngineContext& ec);
MMValue lambda_mmv(const IterandWord& word, const PrecisionContext& ctx);

// All Lambda(f, g; n1, n2), rows n1 = 1..w_f-1, columns n2 = 1..w_g-1.
std::vector<std::vector<MMValue>> mmv_table(const FormId& f, const FormId& g,
                                            const PrecisionContext& ctx);
std::vector<std::vector<MMValue>> mmv_table(const FormId& f, const FormId& g, EngineContext& ec);

IterandWord make_word(std::initializer_list<std::pair<FormId, long>> ls);

} // namespace mmv

#endif

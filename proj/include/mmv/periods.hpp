#ifndef MMV_PERIODS_HPP
#define MMV_PERIODS_HPP

#include <string>
#include <vector>

#include "mmv/engine.hpp"
#include "mmv/perpoly.hpp"
#include "mmv/relfind.hpp"

namespace mmv {

// The standard weight <= 12 period inventory: 1, odd zetas and their products
// over matching pi powers, the double-zeta atoms zeta(3,5), zeta_{3,7},
// zeta_{3,9}, zeta_{5,7}, and optionally the modular atoms omega_{Delta,+-},
// Lambda(Delta;12)/pi, c(Delta;12).
PeriodBasis standard_inventory(const PrecisionContext& ctx, bool include_modular);

// c(Delta; 12) := 70 Lambda(G4, G10; 3, 5); well-defined modulo Q only.
BigFloat c_delta_12(const PrecisionContext& ctx);

// Frozen quasi-period constants of Delta' (printed to 15 digits).
BigFloat eta_delta_plus(mpfr_prec_t prec);
BigFloat eta_delta_minus(mpfr_prec_t prec);

struct IdentityResult {
    std::string id;
    bool conjectural; // printed with "?=": numerically verified, unproved
    bool ok;
    double agreement_digits;
    std::string statement;
    std::string label() const {
        return ok ? (conjectural ? "CONJECTURAL-CONFIRMED" : "CONFIRMED") : "FAILED";
    }
};

const std::vector<std::string>& identity_registry();
IdentityResult verify_named_identity(const std::string& id, const PrecisionContext& ctx);

// One stack coefficient expressed over a period basis by integer-relation
// detection: value = sum_i terms_i.second * basis[terms_i.first].
struct CoefficientRelation {
    int k;
    long power;
    bool found;
    std::vector<std::pair<std::string, Rational>> terms;
    double residual_log10;
};

std::vector<CoefficientRelation> decompose_delta_stack(const FormId& f, const FormId& g,
                                                       const PrecisionContext& ctx,
                                                       const PeriodBasis& basis,
                                                       const BigInt& max_height);

struct CancellationReport {
    bool combination_mzv_only;     // 9 d0 P_{G4,G10} + 14 d0 P_{G6,G8} needs no modular atom
    bool individual_needs_modular; // d0 P_{G4,G10} alone fails over MZV-only atoms
    std::vector<CoefficientRelation> combination;
    std::string summary;
};

CancellationReport cancellation_check(const PrecisionContext& ctx);

} // namespace mmv

#endif

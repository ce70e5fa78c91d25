#ifndef MMV_RELFIND_HPP
#define MMV_RELFIND_HPP

#include <optional>
#include <string>
#include <vector>

#include "mmv/bigcomplex.hpp"
#include "mmv/precision.hpp"
#include "mmv/rational.hpp"

namespace mmv {

// Named high-precision constants against which integer relations are sought.
struct PeriodBasis {
    struct Entry {
        std::string name;
        BigComplex value;
    };
    std::vector<Entry> entries;
    int digits = 0; // precision carried by every entry

    void push(const std::string& name, const BigFloat& v) { entries.push_back({name, BigComplex(v)}); }
    void push(const std::string& name, const BigComplex& v) { entries.push_back({name, v}); }
    size_t size() const { return entries.size(); }
};

struct Relation {
    std::vector<BigInt> coefficients; // sum coeff_i * value_i ~ 0, not all zero
    BigFloat residual;
    double confidence_margin; // norm of the next-best reduced vector / norm of this one
};

enum class RelationEngine { LLL, PSLQ };

// Integer relation with |residual| < 10^{-digits/2} and coefficient height
// below min(max_height, 10^{digits/4}); nullopt when the reduced lattice
// certifies that no relation of the requested height exists at this
// precision. Throws precision_error when digits < 10 + digits(height)*size.
std::optional<Relation> find_relation(const PeriodBasis& basis, const BigInt& max_height,
                                      const PrecisionContext& ctx,
                                      RelationEngine engine = RelationEngine::LLL);

struct IdentityReport {
    bool ok;
    double agreement_digits; // -log10 of the relative disagreement
};

// |lhs - rhs| <= 10^{-tol_digits} * max(1, |lhs|).
IdentityReport verify_identity(const BigComplex& lhs, const BigComplex& rhs, int tol_digits);

// Exact LLL reduction (integer arithmetic throughout) of the rows of basis.
// Exposed for tests.
void lll_reduce(std::vector<std::vector<BigInt>>& rows);

} // namespace mmv

#endif

#ifndef MMV_MZV_HPP
#define MMV_MZV_HPP

#include <string>
#include <vector>

#include "mmv/bigfloat.hpp"
#include "mmv/precision.hpp"

namespace mmv {

// Multiple zeta index in the ascending convention
// zeta(n_1,...,n_r) = sum_{k_1<...<k_r} k_1^{-n_1}...k_r^{-n_r}, n_r >= 2.
struct MZVIndex {
    std::vector<long> n;

    long depth() const { return static_cast<long>(n.size()); }
    long weight() const;
    void validate() const;
    std::string str() const;
};

// High-precision value via the iterated-integral word and Holder convolution
// at 1/2 (every factor is a polylogarithm series at argument 1/2).
BigFloat multiple_zeta(const MZVIndex& idx, const PrecisionContext& ctx);

// zeta(n_1)...: depth-1 convenience overload.
BigFloat multiple_zeta(std::initializer_list<long> idx, const PrecisionContext& ctx);

// Iterated integral over [0, 1/2] of a binary word (false = dz/z, true =
// dz/(1-z)), first letter at the 0-end. Exposed for tests.
BigFloat polylog_word_at_half(const std::vector<bool>& word, const PrecisionContext& ctx);

// Named representative zeta_{2a_1+1,...,2a_r+1} with leading f-alphabet term
// f_{2a_1+1}...f_{2a_r+1}; only the explicitly printed choices are housed.
struct ZetaRepresentative {
    std::vector<long> index;
    std::string formula; // human-readable expansion actually evaluated
    BigFloat value;
};

ZetaRepresentative zeta_representative(const std::vector<long>& index,
                                       const PrecisionContext& ctx);

// Dimensions of the weight-graded pieces of Q<f_3,f_5,...> (x) Q[f_2];
// satisfies d_n = d_{n-2} + d_{n-3}.
std::vector<unsigned long long> coradical_dimensions(int max_weight);

} // namespace mmv

#endif

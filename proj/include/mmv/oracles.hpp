#ifndef MMV_ORACLES_HPP
#define MMV_ORACLES_HPP

#include "mmv/mzv.hpp"

namespace mmv {

// Independent low-precision MZV evaluator: plain truncated nested summation
// (cumulative-sum dynamic programming) on a doubling grid of cutoffs, with
// Richardson extrapolation of the outer tail and an empirical error bound.
// Deliberately shares no code with the Holder-convolution path it checks.
struct DirectSumResult {
    BigFloat value;
    double certified_digits; // -log10 of the empirical error estimate
};

DirectSumResult mzv_direct_sum(const MZVIndex& idx, long base_cutoff = 1200, int levels = 9);

} // namespace mmv

#endif

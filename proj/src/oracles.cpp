#include "mmv/oracles.hpp"

#include <cmath>

#include "mmv/errors.hpp"

namespace mmv {

DirectSumResult mzv_direct_sum(const MZVIndex& idx, long base_cutoff, int levels) {
    idx.validate();
    const long r = idx.depth();
    const mpfr_prec_t prec = bits_for_digits(34);
    const BigFloat one(1, prec);

    // Partial sums T_i(k) = sum_{j<=k} j^{-n_i} T_{i-1}(j-1), updated in
    // descending i so each step sees T_{i-1}(k-1).
    std::vector<BigFloat> T(static_cast<size_t>(r + 1), BigFloat(prec));
    T[0] = one;
    std::vector<BigFloat> grid;
    long cutoff = base_cutoff;
    const long last_cutoff = base_cutoff << (levels - 1);
    for (long k = 1; k <= last_cutoff; ++k) {
        BigFloat invk = one / BigFloat(k, prec);
        for (long i = r; i >= 1; --i) {
            if (T[static_cast<size_t>(i - 1)].is_zero()) continue;
            T[static_cast<size_t>(i)] +=
                pow_si(invk, idx.n[static_cast<size_t>(i - 1)]) * T[static_cast<size_t>(i - 1)];
        }
        if (k == cutoff) {
            grid.push_back(T[static_cast<size_t>(r)]);
            cutoff <<= 1;
        }
    }

    // Richardson extrapolation on the 1/M powers of the tail (nodes halve).
    std::vector<BigFloat> R = grid;
    BigFloat prev_last = R.back();
    for (int l = 1; l < levels; ++l) {
        BigFloat p2l = pow_si(BigFloat(2, prec), l);
        for (int j = levels - 1; j >= l; --j)
            R[static_cast<size_t>(j)] =
                (p2l * R[static_cast<size_t>(j)] - R[static_cast<size_t>(j - 1)]) /
                (p2l - one);
        if (l == levels - 2) prev_last = R.back();
    }
    BigFloat value = R.back();
    BigFloat err = abs(value - prev_last) + abs(value - R[static_cast<size_t>(levels - 2)]);
    double certified = -(err.log10_abs() - std::max(0.0, value.log10_abs())) - 0.5;
    if (certified > 30) certified = 30; // never claim more than the working precision supports
    return {value, certified};
}

} // namespace mmv

#include "mmv/qtau.hpp"

#include "mmv/errors.hpp"

namespace mmv {

QTauElement QTauElement::one(long qmax, mpfr_prec_t prec) {
    QTauElement e(qmax, prec);
    e.add(0, 0, BigComplex(1, prec));
    return e;
}

const BigComplex& QTauElement::coeff(long m, long p) const {
    static const BigComplex zero;
    if (m < 0 || m > qmax_) return zero;
    const auto& row = c_[static_cast<size_t>(m)];
    if (p < 0 || p >= static_cast<long>(row.size())) return zero;
    return row[static_cast<size_t>(p)];
}

void QTauElement::add(long m, long p, const BigComplex& v) {
    if (m < 0 || m > qmax_) return; // beyond truncation
    auto& row = c_[static_cast<size_t>(m)];
    if (p >= static_cast<long>(row.size()))
        row.resize(static_cast<size_t>(p + 1), BigComplex(prec_));
    row[static_cast<size_t>(p)] += v;
}

QTauElement QTauElement::mul_form(const std::vector<BigComplex>& fc, long f_leading,
                                  long t) const {
    QTauElement r(qmax_, prec_);
    for (long m2 = 0; m2 <= qmax_; ++m2) {
        const auto& row = c_[static_cast<size_t>(m2)];
        if (row.empty()) continue;
        for (long k = 0; k < static_cast<long>(fc.size()); ++k) {
            long m = m2 + k + f_leading;
            if (m > qmax_) break;
            if (m < 0) continue;
            const BigComplex& a = fc[static_cast<size_t>(k)];
            if (a.is_zero()) continue;
            auto& out = r.c_[static_cast<size_t>(m)];
            if (static_cast<long>(out.size()) < static_cast<long>(row.size()) + t)
                out.resize(row.size() + static_cast<size_t>(t), BigComplex(prec_));
            for (size_t p = 0; p < row.size(); ++p) {
                if (row[p].is_zero()) continue;
                out[p + static_cast<size_t>(t)].add_mul(a, row[p]);
            }
        }
    }
    return r;
}

QTauElement QTauElement::reg_primitive() const {
    QTauElement r(qmax_, prec_);
    const BigFloat two_pi = BigFloat(2, prec_) * BigFloat::pi(prec_);

    // m = 0: tau^p -> -tau^{p+1}/(p+1).
    {
        const auto& row = c_[0];
        for (size_t p = 0; p < row.size(); ++p) {
            if (row[p].is_zero()) continue;
            r.add(0, static_cast<long>(p) + 1,
                  BigComplex(BigFloat(-1, prec_) / BigFloat(static_cast<long>(p) + 1, prec_)) *
                      row[p]);
        }
    }
    // m >= 1: q^m tau^p -> -q^m sum_{j<=p} (p!/j!) (-1)^{p-j} tau^j / (2 pi i m)^{p-j+1}.
    for (long m = 1; m <= qmax_; ++m) {
        const auto& row = c_[static_cast<size_t>(m)];
        if (row.empty()) continue;
        // 1/(2 pi i m) = -i/(2 pi m)
        BigComplex inv(BigFloat(prec_), BigFloat(-1, prec_) / (two_pi * BigFloat(m, prec_)));
        for (long p = 0; p < static_cast<long>(row.size()); ++p) {
            const BigComplex& cp = row[static_cast<size_t>(p)];
            if (cp.is_zero()) continue;
            // factor at j = p is inv; stepping j -> j-1 multiplies by -j*inv.
            BigComplex factor = inv;
            for (long j = p; j >= 0; --j) {
                r.add(m, j, -(cp * factor));
                if (j > 0) factor = factor * BigComplex(BigFloat(-j, prec_)) * inv;
            }
        }
    }
    return r;
}

BigComplex QTauElement::evaluate_at_iy(const BigFloat& y) const {
    const BigFloat q0 = exp(-(BigFloat(2, prec_) * BigFloat::pi(prec_) * y));
    BigComplex total(prec_);
    BigFloat qm(1, prec_);
    for (long m = 0; m <= qmax_; ++m) {
        const auto& row = c_[static_cast<size_t>(m)];
        if (!row.empty()) {
            // tau^p = (i y)^p
            BigComplex taup(1, prec_);
            BigComplex iy(BigFloat(prec_), y);
            BigComplex rowsum(prec_);
            for (size_t p = 0; p < row.size(); ++p) {
                if (!row[p].is_zero()) rowsum.add_mul(row[p], taup);
                taup = taup * iy;
            }
            total.add_mul(rowsum, BigComplex(qm));
        }
        qm *= q0;
    }
    return total;
}

} // namespace mmv

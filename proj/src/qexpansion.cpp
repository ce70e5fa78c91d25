#include "mmv/qexpansion.hpp"

#include <sstream>

#include "mmv/errors.hpp"

namespace mmv {

std::string FormId::name() const {
    switch (kind) {
        case FormKind::Eisenstein: return "G" + std::to_string(weight);
        case FormKind::Delta: return "Delta";
        case FormKind::DeltaPrime: return "DeltaPrime";
    }
    return "?";
}

FormId parse_form_id(const std::string& s) {
    if (s == "Delta" || s == "delta" || s == "D") return FormId::delta();
    if (s == "DeltaPrime" || s == "Dprime" || s == "D'") return FormId::delta_prime();
    if (!s.empty() && (s[0] == 'G' || s[0] == 'g')) {
        int w = std::stoi(s.substr(1));
        if (w < 4 || w % 2 != 0) throw domain_error("form: bad Eisenstein weight in '" + s + "'");
        return FormId::eisenstein(w);
    }
    throw domain_error("form: cannot parse '" + s + "'");
}

const Rational& QExpansion::coeff(long n) const {
    static const Rational zero(0);
    if (n > truncation())
        throw precision_error("QExpansion: coefficient beyond truncation requested");
    if (n < leading_) return zero;
    return coeffs_[static_cast<size_t>(n - leading_)];
}

std::string QExpansion::to_json(const std::string& kind) const {
    std::ostringstream os;
    os << "{\"kind\": \"" << kind << "\", \"weight\": " << weight_
       << ", \"leading_order\": " << leading_ << ", \"coeffs\": [";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << '"' << coeffs_[i].str() << '"';
    }
    os << "]}";
    return os.str();
}

Rational& RatQSeries::at(long n) {
    if (n < leading_ || n > trunc_) throw domain_error("RatQSeries: index out of range");
    return c_[static_cast<size_t>(n - leading_)];
}

const Rational& RatQSeries::coeff(long n) const {
    static const Rational zero(0);
    if (n < leading_ || n > trunc_) return zero;
    return c_[static_cast<size_t>(n - leading_)];
}

RatQSeries RatQSeries::mul(const RatQSeries& o, long trunc) const {
    RatQSeries r(leading_ + o.leading_, trunc);
    for (long i = leading_; i <= trunc_; ++i) {
        if (coeff(i).is_zero()) continue;
        long jmax = std::min(o.trunc_, trunc - i);
        for (long j = o.leading_; j <= jmax; ++j) {
            if (o.coeff(j).is_zero()) continue;
            r.at(i + j) += coeff(i) * o.coeff(j);
        }
    }
    return r;
}

RatQSeries RatQSeries::pow(long e, long trunc) const {
    RatQSeries r(0, trunc);
    r.at(0) = Rational(1);
    RatQSeries base = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) r = r.mul(base, trunc);
        k >>= 1;
        if (k) base = base.mul(base, trunc);
    }
    return r;
}

RatQSeries RatQSeries::div(const RatQSeries& o, long trunc) const {
    if (o.coeff(o.leading_).is_zero())
        throw domain_error("RatQSeries: divisor has zero leading coefficient");
    long lead = leading_ - o.leading_;
    RatQSeries r(lead, trunc);
    const Rational inv_lead = Rational(1) / o.coeff(o.leading_);
    for (long n = lead; n <= trunc; ++n) {
        // c_n solves: this_{n + o.leading} = sum_{k<=n} r_k * o_{n-k+o.leading}
        Rational acc = coeff(n + o.leading_);
        for (long k = lead; k < n; ++k) {
            const Rational& rk = r.coeff(k);
            if (rk.is_zero()) continue;
            acc -= rk * o.coeff(n - k + o.leading_);
        }
        r.at(n) = acc * inv_lead;
    }
    return r;
}

RatQSeries RatQSeries::add(const RatQSeries& o) const {
    long lead = std::min(leading_, o.leading_);
    long tr = std::min(trunc_, o.trunc_);
    RatQSeries r(lead, tr);
    for (long n = lead; n <= tr; ++n) r.at(n) = coeff(n) + o.coeff(n);
    return r;
}

RatQSeries RatQSeries::scale(const Rational& s) const {
    RatQSeries r(leading_, trunc_);
    for (long n = leading_; n <= trunc_; ++n) r.at(n) = coeff(n) * s;
    return r;
}

RatQSeries RatQSeries::shift(long k) const {
    RatQSeries r(leading_ + k, trunc_ + k);
    for (long n = leading_; n <= trunc_; ++n) r.at(n + k) = coeff(n);
    return r;
}

BigInt divisor_sigma(long k, long n) {
    BigInt s(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += BigInt::pow(BigInt(d), static_cast<unsigned long>(k));
        long e = n / d;
        if (e != d) s += BigInt::pow(BigInt(e), static_cast<unsigned long>(k));
    }
    return s;
}

} // namespace mmv

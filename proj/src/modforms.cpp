#include "mmv/modforms.hpp"

#include <cassert>
#include <cmath>

#include "mmv/errors.hpp"
#include "mmv/numerics.hpp"

namespace mmv {

namespace {

// prod_{n>=1} (1-q^n) up to q^N via the pentagonal number theorem.
RatQSeries euler_product(long N) {
    RatQSeries e(0, N);
    for (long k = 0;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > N && g2 > N) break;
        Rational s((k % 2 == 0) ? 1 : -1);
        if (g1 <= N) e.at(g1) += s;
        if (g2 <= N && k > 0) e.at(g2) += s;
    }
    return e;
}

RatQSeries normalized_eisenstein_series(int w, long N) {
    // E_w = 1 - (2w/b_w) sum sigma_{w-1}(n) q^n, integer-normalized.
    RatQSeries e(0, N);
    e.at(0) = Rational(1);
    Rational factor = Rational(-2 * w) / bernoulli(w);
    for (long n = 1; n <= N; ++n) e.at(n) = factor * Rational(divisor_sigma(w - 1, n));
    return e;
}

RatQSeries delta_series(long N) {
    RatQSeries eta = euler_product(N);
    return eta.pow(24, N).shift(1);
}

} // namespace

QExpansion eisenstein(int w, long N) {
    if (w == 2) throw domain_error("eisenstein: weight 2 is not a level-1 modular form");
    if (w < 4 || w % 2 != 0) throw domain_error("eisenstein: weight must be even and >= 4");
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(N + 1));
    c.push_back(-bernoulli(w) / Rational(2 * w));
    for (long n = 1; n <= N; ++n) c.emplace_back(divisor_sigma(w - 1, n));
    return QExpansion(w, 0, std::move(c));
}

QExpansion delta(long N) {
    if (N < 1) throw domain_error("delta: need N >= 1");
    RatQSeries d = delta_series(N);
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(N));
    for (long n = 1; n <= N; ++n) c.push_back(d.coeff(n));
    return QExpansion(12, 1, std::move(c));
}

RatQSeries j_invariant_series(long N) {
    RatQSeries e4 = normalized_eisenstein_series(4, N + 1);
    return e4.pow(3, N + 1).div(delta_series(N + 1), N);
}

QExpansion delta_prime(long N) {
    if (N < 2) throw domain_error("delta_prime: need N >= 2");
    // Delta * (j^2 + alpha j + beta) = E4^6/Delta + alpha E4^3 + beta Delta.
    RatQSeries e4cubed = normalized_eisenstein_series(4, N + 1).pow(3, N + 1);
    RatQSeries a = e4cubed.mul(e4cubed, N + 1).div(delta_series(N + 1), N);
    const RatQSeries& b = e4cubed;
    RatQSeries d = delta_series(N);
    if (a.coeff(-1) != Rational(1) || b.coeff(0) != Rational(1) || d.coeff(1) != Rational(1))
        throw inconsistency_error("delta_prime: solve for (alpha, beta) is singular");
    Rational alpha = -a.coeff(0);
    Rational beta = -(a.coeff(1) + alpha * b.coeff(1));
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(N + 2));
    for (long n = -1; n <= N; ++n) c.push_back(a.coeff(n) + alpha * b.coeff(n) + beta * d.coeff(n));
    return QExpansion(12, -1, std::move(c));
}

QExpansion form_expansion(const FormId& f, long N) {
    switch (f.kind) {
        case FormKind::Eisenstein: return eisenstein(f.weight, N);
        case FormKind::Delta: return delta(N);
        case FormKind::DeltaPrime: return delta_prime(N);
    }
    throw domain_error("form_expansion: unknown form");
}

RatQSeries weight_minus10_from_principal_part(const std::vector<Rational>& b, long N) {
    const long m = static_cast<long>(b.size());
    if (m < 2) throw domain_error("weight_minus10: principal part must reach q^-2");
    // Base form E14 / Delta^2 = q^-2 + ..., then j-multiples give poles up to m.
    RatQSeries e14 = normalized_eisenstein_series(4, N + 2 * m)
                         .pow(2, N + 2 * m)
                         .mul(normalized_eisenstein_series(6, N + 2 * m), N + 2 * m);
    RatQSeries base = e14.div(delta_series(N + 2 * m).pow(2, N + 2 * m), N + m);
    RatQSeries j = j_invariant_series(N + m);

    std::vector<RatQSeries> ladder; // ladder[k] has leading q^{-(k+2)}, coeff 1
    ladder.push_back(base);
    for (long k = 1; k <= m - 2; ++k) ladder.push_back(ladder.back().mul(j, N + m));
    // Reduce each ladder element so its principal part is exactly q^{-(k+2)}.
    for (size_t k = 0; k < ladder.size(); ++k) {
        for (size_t l = k; l-- > 0;) {
            Rational c = ladder[k].coeff(-static_cast<long>(l) - 2);
            if (!c.is_zero()) ladder[k] = ladder[k].add(ladder[l].scale(-c));
        }
    }

    RatQSeries g(-m, N);
    for (long n = 2; n <= m; ++n) {
        if (b[static_cast<size_t>(n - 1)].is_zero()) continue;
        g = g.add(ladder[static_cast<size_t>(n - 2)].scale(b[static_cast<size_t>(n - 1)]));
    }
    if (g.coeff(-1) != b[0])
        throw inconsistency_error(
            "weight_minus10: principal part is obstructed (pairing with Delta nonzero)");
    return g;
}

long truncation_for_digits(int digits, int extra) {
    return static_cast<long>(std::ceil(digits * std::log(10.0) / (2.0 * M_PI))) + extra;
}

BigComplex evaluate_at_iy(const QExpansion& f, const BigFloat& y, bool drop_constant,
                          const PrecisionContext& ctx) {
    if (y < BigFloat(1, 64)) throw domain_error("evaluate_at_iy: y must be >= 1");
    const mpfr_prec_t prec = ctx.bits();
    const long N = f.truncation();
    const BigFloat two_pi_y = BigFloat(2, prec) * BigFloat::pi(prec) * y;
    const BigFloat qy = exp(-two_pi_y); // e^{-2 pi y}

    BigFloat sum(prec);
    BigFloat qn = pow_si(qy, f.leading_order());
    for (long n = f.leading_order(); n <= N; ++n) {
        if (!(n == 0 && drop_constant) && !f.coeff(n).is_zero())
            sum = fma(BigFloat(f.coeff(n), prec), qn, sum);
        qn *= qy;
    }

    // Tail estimate from the last coefficient ratio; refuse if it cannot
    // support the requested digits.
    if (N >= 2 && !f.coeff(N).is_zero()) {
        double logq = -two_pi_y.to_double() * 0.43429448190325176; // log10 e^{-2 pi y}
        double la_n = std::log10(std::abs(f.coeff(N).to_double()) + 1e-300);
        double la_prev = std::log10(std::abs(f.coeff(N - 1).to_double()) + 1e-300);
        double ratio = la_n - la_prev + logq;        // log10 of termwise decay
        double tail = la_n + logq * (N + 1) + 0.7;   // first dropped term, margin
        if (ratio < -0.3) tail -= std::log10(1.0 - std::pow(10.0, ratio));
        double scale = std::max(0.0, sum.log10_abs());
        if (tail > scale - ctx.working_digits())
            throw precision_error("evaluate_at_iy: truncation insufficient for requested digits");
    }
    return BigComplex(sum);
}

} // namespace mmv

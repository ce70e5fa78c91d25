#include "mmv/numerics.hpp"

#include <mutex>
#include <vector>

#include "mmv/errors.hpp"

namespace mmv {

namespace {

// Cache of b_0..b_max, grown on demand via the defining recurrence
//   sum_{k=0}^{n} C(n+1,k) b_k = 0.
std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache = {Rational(1), Rational(-1, 2)};
    return cache;
}
std::mutex bernoulli_mutex;

} // namespace

Rational bernoulli_any(long n) {
    if (n < 0) throw domain_error("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& cache = bernoulli_cache();
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        if (m % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        Rational acc(0);
        for (long k = 0; k < m; ++k) {
            if (cache[k].is_zero()) continue;
            acc += Rational(BigInt::binomial(m + 1, k)) * cache[k];
        }
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

Rational bernoulli(long n) {
    if (n < 2 || n % 2 != 0) throw domain_error("bernoulli: index must be even and >= 2");
    return bernoulli_any(n);
}

Rational riemann_zeta_nonpositive(long s) {
    if (s > 0) throw domain_error("riemann_zeta_nonpositive: s must be <= 0");
    if (s == 0) return Rational(-1, 2);
    long n = -s;
    if (n % 2 == 0) return Rational(0); // trivial zeros
    return -bernoulli_any(n + 1) / Rational(n + 1);
}

BigComplex riemann_zeta(long s, const PrecisionContext& ctx) {
    if (s == 1) throw pole_error("riemann_zeta: pole at s = 1");
    const mpfr_prec_t prec = ctx.bits();
    if (s <= 0) return BigComplex(BigFloat(riemann_zeta_nonpositive(s), prec));

    // Euler-Maclaurin: zeta(s) = sum_{k<N} k^-s + N^{1-s}/(s-1) + N^-s/2
    //   + sum_j b_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1},
    // remainder bounded by the first omitted term for real s > 1.
    const int D = ctx.working_digits();
    const long N = static_cast<long>(0.7 * D) + 8;
    const BigFloat one(1, prec);
    BigFloat direct(prec);
    for (long k = 1; k < N; ++k) direct += one / pow_si(BigFloat(k, prec), s);

    BigFloat bigN(N, prec);
    BigFloat tail = pow_si(bigN, 1 - s) / BigFloat(s - 1, prec);
    tail += pow_si(bigN, -s) / BigFloat(2, prec);

    // term_j = b_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1} with
    // (s)_{2j-1} = s(s+1)...(s+2j-2).
    BigFloat rising(s, prec);
    BigFloat npow = pow_si(bigN, -s - 1);
    const BigFloat inv_n2 = pow_si(bigN, -2);
    const BigFloat eps = pow_si(BigFloat(10, prec), -(D + 5));
    Rational fact(2); // (2j)!
    for (long j = 1; j < 4 * D; ++j) {
        if (j > 1) {
            rising *= BigFloat((s + 2 * j - 3) * (s + 2 * j - 2), prec);
            npow *= inv_n2;
            fact *= Rational((2 * j - 1) * (2 * j));
        }
        BigFloat term = BigFloat(bernoulli_any(2 * j) / fact, prec) * rising * npow;
        tail += term;
        if (abs(term) < eps * (direct + tail)) break;
    }
    return BigComplex(direct + tail);
}

BigFloat upper_incomplete_gamma_real(long s, const BigFloat& x, mpfr_prec_t prec) {
    if (s < 1) throw domain_error("upper_incomplete_gamma: s must be >= 1");
    if (!(x.sign() > 0)) throw domain_error("upper_incomplete_gamma: x must be > 0");
    // Gamma(s,x) = (s-1)! e^-x sum_{j=0}^{s-1} x^j / j!
    BigFloat sum(1, prec);
    BigFloat term(1, prec);
    for (long j = 1; j <= s - 1; ++j) {
        term *= x;
        term /= BigFloat(j, prec);
        sum += term;
    }
    return factorial_big(s - 1, prec) * exp(-x) * sum;
}

BigComplex upper_incomplete_gamma(long s, const BigFloat& x, const PrecisionContext& ctx) {
    return BigComplex(upper_incomplete_gamma_real(s, x, ctx.bits()));
}

BigFloat exponential_integral_e1(const BigFloat& x, mpfr_prec_t prec) {
    if (!(x.sign() > 0)) throw domain_error("exponential_integral_e1: x must be > 0");
    // E_1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!). The alternating sum
    // peaks near e^x, so work at prec + x*log2(e) extra bits.
    double xd = x.to_double();
    mpfr_prec_t wp = prec + static_cast<mpfr_prec_t>(xd * 1.4427) + 64;
    BigFloat xw(wp);
    mpfr_set(xw.raw(), x.raw(), MPFR_RNDN);
    BigFloat sum(wp);
    BigFloat term(1, wp);
    BigFloat eps = pow_si(BigFloat(2, wp), -static_cast<long>(wp));
    for (long k = 1; k < 8 * static_cast<long>(wp); ++k) {
        term *= -xw;
        term /= BigFloat(k, wp);
        sum += term / BigFloat(k, wp);
        if (k > xd && abs(term) < eps) break;
    }
    BigFloat r = -BigFloat::euler_gamma(wp) - log(xw) - sum;
    BigFloat out(prec);
    mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
    return out;
}

BigFloat factorial_big(long n, mpfr_prec_t prec) {
    if (n < 0) throw domain_error("factorial: negative argument");
    return BigFloat(BigInt::factorial(static_cast<unsigned long>(n)), prec);
}

std::optional<Rational> rational_reconstruct(const BigFloat& x, int digits) {
    const mpfr_prec_t prec = x.precision();
    const BigFloat tol = pow_si(BigFloat(10, prec), -(digits - 10));
    const BigFloat qbound = pow_si(BigFloat(10, prec), digits / 3);

    // Nearest-integer continued fraction with convergent recurrence.
    BigFloat r = x;
    BigInt p0(1), q0(0);
    BigInt p1 = round_to_bigint(r);
    BigInt q1(1);
    for (int it = 0; it < 400; ++it) {
        Rational cand(p1, q1.is_zero() ? BigInt(1) : q1);
        if (abs(x - BigFloat(cand, prec)) < tol) return cand;
        if (BigFloat(q1.abs(), prec) > qbound) return std::nullopt;
        BigFloat frac = r - round_to_integer(r);
        if (abs(frac) < tol) return std::nullopt;
        r = BigFloat(1, prec) / frac;
        BigInt a = round_to_bigint(r);
        BigInt p2 = a * p1 + p0;
        BigInt q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

} // namespace mmv

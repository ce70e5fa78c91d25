#include "mmv/relfind.hpp"

#include <algorithm>
#include <cmath>

#include "mmv/errors.hpp"

namespace mmv {

namespace {

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_tdiv_qr(q.raw(), r.raw(), a.raw(), b.raw());
    if (!r.is_zero()) throw inconsistency_error("lll: non-exact division");
    return q;
}

// Nearest integer to a/b, b > 0.
BigInt round_div(const BigInt& a, const BigInt& b) {
    BigInt two_a = a + a;
    BigInt num = two_a + b;
    BigInt den = b + b;
    return BigInt::fdiv(num, den);
}

// Integral LLL (delta = 3/4) maintaining Gram determinants d and the
// integer Gram-Schmidt coefficients lambda.
struct LLLState {
    std::vector<std::vector<BigInt>>& b;
    std::vector<std::vector<BigInt>> lam;
    std::vector<BigInt> d;
    long n;
    long kmax = 0;

    explicit LLLState(std::vector<std::vector<BigInt>>& rows)
        : b(rows), n(static_cast<long>(rows.size())) {
        lam.assign(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n), BigInt(0)));
        d.assign(static_cast<size_t>(n + 1), BigInt(1));
        d[1] = dot(b[0], b[0]);
    }

    void incremental_gram(long k) {
        for (long j = 0; j <= k; ++j) {
            BigInt u = dot(b[static_cast<size_t>(k)], b[static_cast<size_t>(j)]);
            for (long i = 0; i < j; ++i)
                u = exact_div(d[static_cast<size_t>(i + 1)] * u -
                                  lam[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                                      lam[static_cast<size_t>(j)][static_cast<size_t>(i)],
                              d[static_cast<size_t>(i)]);
            if (j < k)
                lam[static_cast<size_t>(k)][static_cast<size_t>(j)] = u;
            else {
                if (u.is_zero()) throw inconsistency_error("lll: dependent rows");
                d[static_cast<size_t>(k + 1)] = u;
            }
        }
    }

    void red(long k, long l) {
        const BigInt& dl = d[static_cast<size_t>(l + 1)];
        BigInt two_lam = lam[static_cast<size_t>(k)][static_cast<size_t>(l)] +
                         lam[static_cast<size_t>(k)][static_cast<size_t>(l)];
        if (two_lam.abs() > dl) {
            BigInt q = round_div(lam[static_cast<size_t>(k)][static_cast<size_t>(l)], dl);
            for (size_t c = 0; c < b[static_cast<size_t>(k)].size(); ++c)
                b[static_cast<size_t>(k)][c] -= q * b[static_cast<size_t>(l)][c];
            lam[static_cast<size_t>(k)][static_cast<size_t>(l)] -= q * dl;
            for (long i = 0; i < l; ++i)
                lam[static_cast<size_t>(k)][static_cast<size_t>(i)] -=
                    q * lam[static_cast<size_t>(l)][static_cast<size_t>(i)];
        }
    }

    void swap_rows(long k) {
        std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(k - 1)]);
        for (long j = 0; j <= k - 2; ++j)
            std::swap(lam[static_cast<size_t>(k)][static_cast<size_t>(j)],
                      lam[static_cast<size_t>(k - 1)][static_cast<size_t>(j)]);
        BigInt lambda = lam[static_cast<size_t>(k)][static_cast<size_t>(k - 1)];
        BigInt B = exact_div(d[static_cast<size_t>(k - 1)] * d[static_cast<size_t>(k + 1)] +
                                 lambda * lambda,
                             d[static_cast<size_t>(k)]);
        for (long i = k + 1; i <= kmax; ++i) {
            BigInt t = lam[static_cast<size_t>(i)][static_cast<size_t>(k)];
            lam[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                exact_div(d[static_cast<size_t>(k + 1)] *
                                  lam[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] -
                              lambda * t,
                          d[static_cast<size_t>(k)]);
            lam[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] =
                exact_div(B * t + lambda * lam[static_cast<size_t>(i)][static_cast<size_t>(k)],
                          d[static_cast<size_t>(k + 1)]);
        }
        d[static_cast<size_t>(k)] = B;
    }

    void run() {
        long k = 1;
        while (k < n) {
            if (k > kmax) {
                kmax = k;
                incremental_gram(k);
            }
            red(k, k - 1);
            BigInt lhs = BigInt(4) * d[static_cast<size_t>(k + 1)] * d[static_cast<size_t>(k - 1)];
            BigInt lam2 = lam[static_cast<size_t>(k)][static_cast<size_t>(k - 1)] *
                          lam[static_cast<size_t>(k)][static_cast<size_t>(k - 1)];
            BigInt rhs = BigInt(3) * d[static_cast<size_t>(k)] * d[static_cast<size_t>(k)] -
                         BigInt(4) * lam2;
            if (lhs < rhs) {
                swap_rows(k);
                k = std::max(1L, k - 1);
            } else {
                for (long l = k - 2; l >= 0; --l) red(k, l);
                ++k;
            }
        }
    }
};

double log10_bigint(const BigInt& z) {
    if (z.is_zero()) return -1e18;
    long bits = static_cast<long>(z.bit_length());
    return bits * 0.3010299956639812;
}

double row_norm_log10(const std::vector<BigInt>& row) {
    BigInt s = dot(row, row);
    return 0.5 * log10_bigint(s);
}

std::optional<Relation> find_relation_lll(const PeriodBasis& basis, const BigInt& max_height,
                                          const PrecisionContext& ctx);
std::optional<Relation> find_relation_pslq(const PeriodBasis& basis, const BigInt& max_height,
                                           const PrecisionContext& ctx);

std::optional<Relation> find_relation_lll(const PeriodBasis& basis, const BigInt& max_height,
                                          const PrecisionContext&) {
    const long n = static_cast<long>(basis.size());
    const int digits = basis.digits;
    const mpfr_prec_t prec = bits_for_digits(digits);

    // Lattice rows [e_i | C x_i], C = 10^{digits - 8}.
    const long scale_digits = digits - 8;
    BigFloat C = pow_si(BigFloat(10, prec), scale_digits);
    std::vector<std::vector<BigInt>> rows;
    for (long i = 0; i < n; ++i) {
        std::vector<BigInt> r(static_cast<size_t>(n + 1), BigInt(0));
        r[static_cast<size_t>(i)] = BigInt(1);
        r[static_cast<size_t>(n)] = round_to_bigint(C * basis.entries[static_cast<size_t>(i)].value.re());
        rows.push_back(std::move(r));
    }
    LLLState st(rows);
    st.run();

    // Exact residuals of each candidate row at full precision.
    const BigFloat resid_threshold = pow_si(BigFloat(10, prec), -(digits / 2));
    const BigFloat height_threshold = pow_si(BigFloat(10, prec), digits / 4);
    BigInt hmax = round_to_bigint(height_threshold);
    if (max_height < hmax) hmax = max_height;

    int best = -1;
    BigFloat best_resid(prec);
    std::vector<double> norms(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        norms[static_cast<size_t>(i)] = row_norm_log10(row);
        BigInt height(0);
        for (long j = 0; j < n; ++j) {
            BigInt a = row[static_cast<size_t>(j)].abs();
            if (a > height) height = a;
        }
        if (height.is_zero()) continue;
        // Residual at boosted precision: the entries are exact as stored, so
        // this keeps genuine ulp-level residuals from rounding to zero.
        BigFloat resid(prec + 128);
        for (long j = 0; j < n; ++j) {
            if (row[static_cast<size_t>(j)].is_zero()) continue;
            resid += BigFloat(row[static_cast<size_t>(j)], prec + 128) *
                     basis.entries[static_cast<size_t>(j)].value.re();
        }
        resid = abs(resid);
        if (resid < resid_threshold && !(hmax < height)) {
            if (best < 0 || resid < best_resid) {
                best = static_cast<int>(i);
                best_resid = resid;
            }
        }
    }

    if (best >= 0) {
        double second = 1e18;
        for (long i = 0; i < n; ++i)
            if (i != best) second = std::min(second, norms[static_cast<size_t>(i)]);
        Relation rel;
        rel.coefficients.assign(rows[static_cast<size_t>(best)].begin(),
                                rows[static_cast<size_t>(best)].end() - 1);
        rel.residual = best_resid;
        rel.confidence_margin =
            second > 1e17 ? 1e18 : std::pow(10.0, second - norms[static_cast<size_t>(best)]);
        return rel;
    }

    // Certification: LLL's first vector obeys |b_1| <= 2^{(n-1)/2} lambda_1.
    // A height-H relation with residual below the scale would give a lattice
    // vector of norm <= H sqrt(n) + n/2ish; if even lambda_1's lower bound
    // beats that, no such relation exists.
    double lam1_lower = row_norm_log10(rows[0]) - 0.15051499783199057 * (n - 1);
    double relation_norm_cap = log10_bigint(max_height) + 0.5 * std::log10(static_cast<double>(n)) + 1.0;
    if (lam1_lower > relation_norm_cap) return std::nullopt;
    throw precision_error("find_relation: cannot certify absence at this precision/height");
}

BigFloat nint(const BigFloat& x) { return round_to_integer(x); }

std::optional<Relation> find_relation_pslq(const PeriodBasis& basis, const BigInt& max_height,
                                           const PrecisionContext&) {
    const long n = static_cast<long>(basis.size());
    if (n < 2) throw domain_error("find_relation: need at least two entries");
    const int digits = basis.digits;
    const mpfr_prec_t prec = bits_for_digits(digits);
    const BigFloat zero(prec), one(1, prec);
    const BigFloat eps = pow_si(BigFloat(10, prec), -(digits - 12));
    const BigFloat gamma = sqrt(BigFloat(4, prec) / BigFloat(3, prec)) + BigFloat(Rational(1, 100), prec);

    std::vector<BigFloat> x;
    for (const auto& e : basis.entries) x.push_back(e.value.re());

    std::vector<BigFloat> s(static_cast<size_t>(n), zero);
    {
        BigFloat acc(prec);
        for (long k = n - 1; k >= 0; --k) {
            acc += x[static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
            s[static_cast<size_t>(k)] = sqrt(acc);
        }
    }
    BigFloat t = one / s[0];
    std::vector<BigFloat> y;
    for (long k = 0; k < n; ++k) y.push_back(t * x[static_cast<size_t>(k)]);
    for (long k = 0; k < n; ++k) s[static_cast<size_t>(k)] *= t;

    std::vector<std::vector<BigFloat>> H(static_cast<size_t>(n),
                                         std::vector<BigFloat>(static_cast<size_t>(n - 1), zero));
    for (long j = 0; j < n - 1; ++j) {
        H[static_cast<size_t>(j)][static_cast<size_t>(j)] =
            s[static_cast<size_t>(j + 1)] / s[static_cast<size_t>(j)];
        for (long i = j + 1; i < n; ++i)
            H[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                -(y[static_cast<size_t>(i)] * y[static_cast<size_t>(j)]) /
                (s[static_cast<size_t>(j)] * s[static_cast<size_t>(j + 1)]);
    }

    std::vector<std::vector<BigInt>> B(static_cast<size_t>(n),
                                       std::vector<BigInt>(static_cast<size_t>(n), BigInt(0)));
    for (long i = 0; i < n; ++i) B[static_cast<size_t>(i)][static_cast<size_t>(i)] = BigInt(1);

    auto reduce_row = [&](long i, long jfrom) {
        for (long j = std::min(jfrom, i - 1); j >= 0; --j) {
            const BigFloat& hjj = H[static_cast<size_t>(j)][static_cast<size_t>(j)];
            if (hjj.is_zero()) continue;
            BigFloat q = nint(H[static_cast<size_t>(i)][static_cast<size_t>(j)] / hjj);
            if (q.is_zero()) continue;
            BigInt qi = round_to_bigint(q);
            y[static_cast<size_t>(j)] += q * y[static_cast<size_t>(i)];
            for (long k = 0; k <= j; ++k)
                H[static_cast<size_t>(i)][static_cast<size_t>(k)] -=
                    q * H[static_cast<size_t>(j)][static_cast<size_t>(k)];
            for (long k = 0; k < n; ++k)
                B[static_cast<size_t>(k)][static_cast<size_t>(j)] +=
                    qi * B[static_cast<size_t>(k)][static_cast<size_t>(i)];
        }
    };
    for (long i = 1; i < n; ++i) reduce_row(i, i - 1);

    const long max_iters = 600 * n * digits;
    for (long iter = 0; iter < max_iters; ++iter) {
        // pick m maximizing gamma^i |H_ii|
        long m = 0;
        BigFloat bestv(prec);
        BigFloat g(1, prec);
        for (long i = 0; i < n - 1; ++i) {
            g *= gamma;
            BigFloat v = g * abs(H[static_cast<size_t>(i)][static_cast<size_t>(i)]);
            if (v > bestv) {
                bestv = v;
                m = i;
            }
        }
        std::swap(y[static_cast<size_t>(m)], y[static_cast<size_t>(m + 1)]);
        std::swap(H[static_cast<size_t>(m)], H[static_cast<size_t>(m + 1)]);
        for (long k = 0; k < n; ++k)
            std::swap(B[static_cast<size_t>(k)][static_cast<size_t>(m)],
                      B[static_cast<size_t>(k)][static_cast<size_t>(m + 1)]);
        if (m < n - 2) {
            BigFloat t0 = sqrt(H[static_cast<size_t>(m)][static_cast<size_t>(m)] *
                                   H[static_cast<size_t>(m)][static_cast<size_t>(m)] +
                               H[static_cast<size_t>(m)][static_cast<size_t>(m + 1)] *
                                   H[static_cast<size_t>(m)][static_cast<size_t>(m + 1)]);
            BigFloat t1 = H[static_cast<size_t>(m)][static_cast<size_t>(m)] / t0;
            BigFloat t2 = H[static_cast<size_t>(m)][static_cast<size_t>(m + 1)] / t0;
            for (long i = m; i < n; ++i) {
                BigFloat t3 = H[static_cast<size_t>(i)][static_cast<size_t>(m)];
                BigFloat t4 = H[static_cast<size_t>(i)][static_cast<size_t>(m + 1)];
                H[static_cast<size_t>(i)][static_cast<size_t>(m)] = t1 * t3 + t2 * t4;
                H[static_cast<size_t>(i)][static_cast<size_t>(m + 1)] = t1 * t4 - t2 * t3;
            }
        }
        for (long i = m + 1; i < n; ++i) reduce_row(i, std::min(i - 1, m + 1));

        for (long j = 0; j < n; ++j) {
            if (abs(y[static_cast<size_t>(j)]) < eps) {
                Relation rel;
                BigInt height(0);
                for (long k = 0; k < n; ++k) {
                    rel.coefficients.push_back(B[static_cast<size_t>(k)][static_cast<size_t>(j)]);
                    BigInt a = rel.coefficients.back().abs();
                    if (a > height) height = a;
                }
                if (max_height < height) return std::nullopt;
                BigFloat resid(prec);
                for (long k = 0; k < n; ++k)
                    resid += BigFloat(rel.coefficients[static_cast<size_t>(k)], prec) *
                             basis.entries[static_cast<size_t>(k)].value.re();
                rel.residual = abs(resid);
                rel.confidence_margin = 1e6; // PSLQ detection is all-or-nothing
                return rel;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Relation> find_relation(const PeriodBasis& basis, const BigInt& max_height,
                                      const PrecisionContext& ctx, RelationEngine engine) {
    if (basis.size() < 2) throw domain_error("find_relation: need at least two entries");
    const double height_digits = std::max(1.0, log10_bigint(max_height));
    const double required = 10.0 + height_digits * static_cast<double>(basis.size());
    if (basis.digits < required)
        throw precision_error("find_relation: basis precision " + std::to_string(basis.digits) +
                              " digits is below the required " +
                              std::to_string(static_cast<int>(required)));
    return engine == RelationEngine::LLL ? find_relation_lll(basis, max_height, ctx)
                                         : find_relation_pslq(basis, max_height, ctx);
}

IdentityReport verify_identity(const BigComplex& lhs, const BigComplex& rhs, int tol_digits) {
    BigFloat diff = (lhs - rhs).abs();
    BigFloat scale = lhs.abs();
    if (scale < BigFloat(1, 64)) scale = BigFloat(1, scale.precision());
    double agreement = -(diff.log10_abs() - scale.log10_abs());
    if (agreement > 1e17) agreement = 1e17; // exact match
    return {diff <= pow_si(BigFloat(10, diff.precision()), -tol_digits) * scale, agreement};
}

void lll_reduce(std::vector<std::vector<BigInt>>& rows) {
    LLLState st(rows);
    st.run();
}

} // namespace mmv

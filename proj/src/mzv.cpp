#include "mmv/mzv.hpp"

#include <sstream>

#include "mmv/errors.hpp"
#include "mmv/numerics.hpp"

namespace mmv {

long MZVIndex::weight() const {
    long w = 0;
    for (long v : n) w += v;
    return w;
}

void MZVIndex::validate() const {
    if (n.empty()) throw domain_error("MZVIndex: empty index");
    for (size_t i = 0; i + 1 < n.size(); ++i)
        if (n[i] < 1) throw domain_error("MZVIndex: entries must be >= 1");
    if (n.back() < 2) throw domain_error("MZVIndex: last entry must be >= 2 (divergent otherwise)");
}

std::string MZVIndex::str() const {
    std::ostringstream os;
    os << "zeta(";
    for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
    os << ")";
    return os.str();
}

namespace {

// Word of the ascending-convention MZV, first letter at the 0-end:
// one block [x1, x0^{n_i - 1}] per index entry. (The engine's internal
// descending convention is the reversal; this map already composes the two.)
std::vector<bool> mzv_word(const MZVIndex& idx) {
    std::vector<bool> w;
    for (long ni : idx.n) {
        w.push_back(true);
        for (long j = 1; j < ni; ++j) w.push_back(false);
    }
    return w;
}

} // namespace

BigFloat polylog_word_at_half(const std::vector<bool>& word, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.bits();
    if (word.empty()) return BigFloat(1, prec);
    if (!word.front())
        throw domain_error("polylog_word_at_half: word begins with dz/z (divergent at 0)");
    const long K = static_cast<long>(ctx.working_digits() * 3.33) + 16;

    // Coefficients of the iterated primitive as a power series; all
    // coefficients stay in [0, 1], so the evaluation at 1/2 is stable.
    std::vector<BigFloat> h(static_cast<size_t>(K + 1), BigFloat(prec));
    h[0] = BigFloat(1, prec);
    for (bool letter : word) {
        if (letter) {
            // x1: h -> integral of h/(1-u): h'[k] = (sum_{j<k} h[j]) / k
            BigFloat run(prec);
            std::vector<BigFloat> next(static_cast<size_t>(K + 1), BigFloat(prec));
            for (long k = 1; k <= K; ++k) {
                run += h[static_cast<size_t>(k - 1)];
                next[static_cast<size_t>(k)] = run / BigFloat(k, prec);
            }
            h = std::move(next);
        } else {
            // x0: h -> integral of h/u: h'[k] = h[k]/k (h[0] is 0 here)
            for (long k = K; k >= 1; --k)
                h[static_cast<size_t>(k)] = h[static_cast<size_t>(k)] / BigFloat(k, prec);
            h[0] = BigFloat(prec);
        }
    }
    BigFloat half = BigFloat(1, prec) / BigFloat(2, prec);
    BigFloat acc(prec);
    for (long k = K; k >= 0; --k) acc = fma(acc, half, h[static_cast<size_t>(k)]);
    return acc;
}

BigFloat multiple_zeta(const MZVIndex& idx, const PrecisionContext& ctx) {
    idx.validate();
    const std::vector<bool> w = mzv_word(idx);
    const size_t len = w.size();
    BigFloat total(ctx.bits());
    // Holder convolution: split the unit interval at 1/2; the right piece
    // maps to [0,1/2] by t -> 1-t, reversing the word and swapping letters.
    for (size_t k = 0; k <= len; ++k) {
        std::vector<bool> left(w.begin(), w.begin() + static_cast<long>(k));
        std::vector<bool> right;
        right.reserve(len - k);
        for (size_t j = len; j > k; --j) right.push_back(!w[j - 1]);
        total += polylog_word_at_half(left, ctx) * polylog_word_at_half(right, ctx);
    }
    return total;
}

BigFloat multiple_zeta(std::initializer_list<long> idx, const PrecisionContext& ctx) {
    return multiple_zeta(MZVIndex{std::vector<long>(idx)}, ctx);
}

namespace {

BigFloat zeta_of(long s, const PrecisionContext& ctx) { return riemann_zeta(s, ctx).re(); }

} // namespace

ZetaRepresentative zeta_representative(const std::vector<long>& index,
                                       const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.bits();
    auto R = [&](long num, long den) { return BigFloat(Rational(num, den), prec); };
    if (index == std::vector<long>{3, 3})
        return {index, "zeta(3,3)", multiple_zeta({3, 3}, ctx)};
    if (index == std::vector<long>{5, 3})
        return {index, "-(1/5) zeta(3,5)", R(-1, 5) * multiple_zeta({3, 5}, ctx)};
    if (index == std::vector<long>{3, 7}) {
        BigFloat z5 = zeta_of(5, ctx);
        BigFloat v = zeta_of(3, ctx) * zeta_of(7, ctx) +
                     R(1, 14) * (multiple_zeta({3, 7}, ctx) + BigFloat(3, prec) * z5 * z5);
        return {index, "zeta(3)zeta(7) + (1/14)(zeta(3,7) + 3 zeta(5)^2)", v};
    }
    if (index == std::vector<long>{3, 9}) {
        BigFloat z3 = zeta_of(3, ctx);
        BigFloat v = BigFloat(144, prec) * multiple_zeta({5, 3, 2, 2}, ctx);
        v -= R(24165, 14) * multiple_zeta({5, 7}, ctx);
        v -= BigFloat(1566, prec) * multiple_zeta({7, 5}, ctx);
        v -= BigFloat(147, prec) * z3 * zeta_of(9, ctx);
        v += BigFloat(48, prec) * pow_si(z3, 4);
        v += BigFloat(9504, prec) * multiple_zeta({3, 7}, ctx) * zeta_of(2, ctx);
        v += BigFloat(8928, prec) * multiple_zeta({7, 3}, ctx) * zeta_of(2, ctx);
        v -= BigFloat(1296, prec) * multiple_zeta({3, 5}, ctx) * zeta_of(4, ctx);
        v -= BigFloat(288, prec) * multiple_zeta({5, 3}, ctx) * zeta_of(4, ctx);
        v -= BigFloat(600, prec) * z3 * z3 * zeta_of(6, ctx);
        v += BigFloat(Rational(BigInt("385749687"), BigInt(77392)), prec) * zeta_of(12, ctx);
        v = v / BigFloat(19 * 691, prec);
        return {index, "weight-12 depth-4 combination (f-alphabet leading term f3 f9)", v};
    }
    if (index == std::vector<long>{5, 7}) {
        // zeta_{5,7} + 3 zeta_{3,9} lies in the double-zeta subspace.
        BigFloat rhs = R(1, 9) * multiple_zeta({3, 9}, ctx) +
                       BigFloat(3, prec) * zeta_of(3, ctx) * zeta_of(9, ctx) +
                       R(5, 3) * zeta_of(5, ctx) * zeta_of(7, ctx) -
                       BigFloat(Rational(31L * 139L, 2L * 691L), prec) * zeta_of(12, ctx);
        BigFloat v = rhs - BigFloat(3, prec) * zeta_representative({3, 9}, ctx).value;
        return {index, "(double-zeta combination) - 3 zeta_{3,9}", v};
    }
    throw domain_error("zeta_representative: no housed representative for this index");
}

std::vector<unsigned long long> coradical_dimensions(int max_weight) {
    if (max_weight < 0 || max_weight > 64)
        throw domain_error("coradical_dimensions: max_weight must be in [0, 64]");
    std::vector<unsigned long long> d(static_cast<size_t>(max_weight) + 1, 0);
    if (max_weight >= 0) d[0] = 1;
    if (max_weight >= 2) d[2] = 1;
    for (int n = 3; n <= max_weight; ++n)
        d[static_cast<size_t>(n)] =
            d[static_cast<size_t>(n - 2)] + d[static_cast<size_t>(n - 3)];
    return d;
}

} // namespace mmv

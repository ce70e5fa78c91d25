#include "mmv/polynomials.hpp"

#include <map>
#include <mutex>

#include "mmv/errors.hpp"

namespace mmv {

template <class K>
DeltaStack<K> delta_stack(const BiPoly<K>& P) {
    const K model = P.c.empty() ? K() : P.c[0];
    DeltaStack<K> st;
    st.d1 = P.d1;
    st.d2 = P.d2;
    const long kmax = std::min(P.d1, P.d2);

    // Work array indexed by (Y1-exp, Y2-exp); X exponents are implied by the
    // current bidegree (D1, D2), which drops by one in each slot per del.
    BiPoly<K> cur = P;
    long D1 = P.d1, D2 = P.d2;
    for (long k = 0;; ++k) {
        // Contract: X1 = X2 = 1, Y1 = Y2 = y, normalized so that the level-k
        // bracket-power summand u^k h maps to h exactly:
        // Omega^k(u^k h) = (-1)^k k! (e+2)...(e+k+1) h with e = d1+d2-2k.
        Rational norm(1);
        const long e_deg = D1 + D2;
        for (long j = 1; j <= k; ++j) norm *= Rational(-j * (e_deg + j + 1));
        const Rational inv_norm = Rational(1) / norm;
        UniPoly<K> e;
        e.c.assign(static_cast<size_t>(D1 + D2 + 1), scalar_zero_like(model));
        for (long i = 0; i <= D1; ++i)
            for (long j = 0; j <= D2; ++j)
                if (!scalar_is_zero(cur.at(i, j)))
                    e.c[static_cast<size_t>(i + j)] =
                        e.c[static_cast<size_t>(i + j)] + scalar_mul_rat(cur.at(i, j), inv_norm);
        st.entries.push_back(std::move(e));
        if (k == kmax) break;

        // del = d/dX1 d/dY2 - d/dY1 d/dX2 on X1^{D1-i} Y1^i X2^{D2-j} Y2^j.
        BiPoly<K> next(D1 - 1, D2 - 1, model);
        for (long i = 0; i <= D1 - 1; ++i)
            for (long j = 0; j <= D2 - 1; ++j) {
                K v = scalar_zero_like(model);
                if (j + 1 <= D2 && !scalar_is_zero(cur.at(i, j + 1)))
                    v = v + scalar_mul_long(cur.at(i, j + 1), (D1 - i) * (j + 1));
                if (i + 1 <= D1 && !scalar_is_zero(cur.at(i + 1, j)))
                    v = v - scalar_mul_long(cur.at(i + 1, j), (i + 1) * (D2 - j));
                next.at(i, j) = v;
            }
        cur = std::move(next);
        --D1;
        --D2;
    }
    return st;
}

namespace {

// Exact inverse of the (d1+1)(d2+1)-square integer matrix of delta_stack on
// the monomial basis, cached per bidegree.
struct StackMatrix {
    long n;
    std::vector<Rational> inv; // row-major n x n
};

const StackMatrix& stack_matrix(long d1, long d2) {
    static std::map<std::pair<long, long>, StackMatrix> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({d1, d2});
    if (it != cache.end()) return it->second;

    const long n = (d1 + 1) * (d2 + 1);
    // Columns: delta_stack of each unit monomial, flattened.
    std::vector<Rational> m(static_cast<size_t>(n * n), Rational(0));
    for (long i = 0; i <= d1; ++i)
        for (long j = 0; j <= d2; ++j) {
            BiPoly<Rational> unit(d1, d2, Rational(0));
            unit.at(i, j) = Rational(1);
            DeltaStack<Rational> st = delta_stack(unit);
            long row = 0;
            long col = i * (d2 + 1) + j;
            for (const auto& e : st.entries)
                for (const auto& coeff : e.c) m[static_cast<size_t>(row++ * n + col)] = coeff;
            if (row != n) throw inconsistency_error("delta_stack: dimension count broken");
        }

    // Gauss-Jordan inverse over Q.
    std::vector<Rational> inv(static_cast<size_t>(n * n), Rational(0));
    for (long i = 0; i < n; ++i) inv[static_cast<size_t>(i * n + i)] = Rational(1);
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long r = col; r < n; ++r)
            if (!m[static_cast<size_t>(r * n + col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw inconsistency_error("solve_from_stack: singular system");
        if (piv != col)
            for (long j = 0; j < n; ++j) {
                std::swap(m[static_cast<size_t>(piv * n + j)], m[static_cast<size_t>(col * n + j)]);
                std::swap(inv[static_cast<size_t>(piv * n + j)],
                          inv[static_cast<size_t>(col * n + j)]);
            }
        Rational p = m[static_cast<size_t>(col * n + col)];
        for (long j = 0; j < n; ++j) {
            m[static_cast<size_t>(col * n + j)] = m[static_cast<size_t>(col * n + j)] / p;
            inv[static_cast<size_t>(col * n + j)] = inv[static_cast<size_t>(col * n + j)] / p;
        }
        for (long r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational f = m[static_cast<size_t>(r * n + col)];
            if (f.is_zero()) continue;
            for (long j = 0; j < n; ++j) {
                m[static_cast<size_t>(r * n + j)] -= f * m[static_cast<size_t>(col * n + j)];
                inv[static_cast<size_t>(r * n + j)] -= f * inv[static_cast<size_t>(col * n + j)];
            }
        }
    }
    return cache.emplace(std::make_pair(d1, d2), StackMatrix{n, std::move(inv)}).first->second;
}

} // namespace

template <class K>
BiPoly<K> solve_from_stack(const DeltaStack<K>& target, long d1, long d2) {
    const long kmax = std::min(d1, d2);
    if (static_cast<long>(target.entries.size()) != kmax + 1)
        throw domain_error("solve_from_stack: wrong number of stack entries");
    K model = scalar_zero_like(target.entries[0].c.empty() ? K() : target.entries[0].c[0]);

    // Flatten target, padding each entry to its full degree d1+d2-2k.
    const long n = (d1 + 1) * (d2 + 1);
    std::vector<K> rhs;
    rhs.reserve(static_cast<size_t>(n));
    for (long k = 0; k <= kmax; ++k) {
        const long deg = d1 + d2 - 2 * k;
        const auto& e = target.entries[static_cast<size_t>(k)].c;
        if (static_cast<long>(e.size()) > deg + 1)
            throw domain_error("solve_from_stack: entry degree exceeds d1+d2-2k");
        for (long m = 0; m <= deg; ++m)
            rhs.push_back(m < static_cast<long>(e.size()) ? e[static_cast<size_t>(m)] : model);
    }

    const StackMatrix& sm = stack_matrix(d1, d2);
    BiPoly<K> out(d1, d2, model);
    for (long r = 0; r < n; ++r) {
        K acc = model;
        for (long cidx = 0; cidx < n; ++cidx) {
            const Rational& w = sm.inv[static_cast<size_t>(r * n + cidx)];
            if (w.is_zero() || scalar_is_zero(rhs[static_cast<size_t>(cidx)])) continue;
            acc = acc + scalar_mul_rat(rhs[static_cast<size_t>(cidx)], w);
        }
        out.c[static_cast<size_t>(r)] = acc;
    }
    return out;
}

template DeltaStack<Rational> delta_stack(const BiPoly<Rational>&);
template DeltaStack<BigComplex> delta_stack(const BiPoly<BigComplex>&);
template BiPoly<Rational> solve_from_stack(const DeltaStack<Rational>&, long, long);
template BiPoly<BigComplex> solve_from_stack(const DeltaStack<BigComplex>&, long, long);

} // namespace mmv

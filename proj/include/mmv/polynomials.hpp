#ifndef MMV_POLYNOMIALS_HPP
#define MMV_POLYNOMIALS_HPP

#include <vector>

#include "mmv/bigcomplex.hpp"
#include "mmv/rational.hpp"

namespace mmv {

// Scalar adaptors so the delta-stack linear algebra runs over either exact
// rationals or arbitrary-precision complexes.
inline Rational scalar_zero_like(const Rational&) { return Rational(0); }
inline BigComplex scalar_zero_like(const BigComplex& m) { return BigComplex(m.precision()); }
inline Rational scalar_mul_long(const Rational& x, long m) { return x * Rational(m); }
inline BigComplex scalar_mul_long(const BigComplex& x, long m) {
    return BigComplex(BigFloat(m, x.precision())) * x;
}
inline Rational scalar_mul_rat(const Rational& x, const Rational& r) { return x * r; }
inline BigComplex scalar_mul_rat(const BigComplex& x, const Rational& r) {
    return BigComplex(BigFloat(r, x.precision())) * x;
}
inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const BigComplex& x) { return x.is_zero(); }

// Single-variable polynomial, dense coefficients c[0..d].
template <class K>
struct UniPoly {
    std::vector<K> c;
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const K& coeff(long k) const { return c[static_cast<size_t>(k)]; }
};

// Two-variable polynomial of bidegree (d1, d2).
template <class K>
struct BiPoly {
    long d1 = 0, d2 = 0;
    std::vector<K> c; // (d1+1) x (d2+1), row-major in the y1 exponent

    BiPoly() = default;
    BiPoly(long dd1, long dd2, const K& model)
        : d1(dd1), d2(dd2),
          c(static_cast<size_t>((dd1 + 1) * (dd2 + 1)), scalar_zero_like(model)) {}
    K& at(long i, long j) { return c[static_cast<size_t>(i * (d2 + 1) + j)]; }
    const K& at(long i, long j) const { return c[static_cast<size_t>(i * (d2 + 1) + j)]; }
};

// delta^k contractions of the homogenized polynomial, k = 0..min(d1,d2);
// entry k has degree d1 + d2 - 2k. The map BiPoly -> DeltaStack is a linear
// bijection (Clebsch-Gordan dimension count).
template <class K>
struct DeltaStack {
    long d1 = 0, d2 = 0;
    std::vector<UniPoly<K>> entries;
};

template <class K>
DeltaStack<K> delta_stack(const BiPoly<K>& P);

template <class K>
BiPoly<K> solve_from_stack(const DeltaStack<K>& target, long d1, long d2);

extern template DeltaStack<Rational> delta_stack(const BiPoly<Rational>&);
extern template DeltaStack<BigComplex> delta_stack(const BiPoly<BigComplex>&);
extern template BiPoly<Rational> solve_from_stack(const DeltaStack<Rational>&, long, long);
extern template BiPoly<BigComplex> solve_from_stack(const DeltaStack<BigComplex>&, long, long);

} // namespace mmv

#endif

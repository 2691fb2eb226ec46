#pragma once

#include "maxmat/paravector.hpp"

namespace maxmat {

/// Element of the tensor product of the two paravector algebras: a 4x4
/// coefficient array a_ij against the basis cE_i (x) cEbar_j. Every 4x4
/// complex matrix decomposes uniquely over this basis.
template <typename S>
struct Biparavector {
    std::array<std::array<Complex<S>, 4>, 4> a{};

    static Biparavector identity() {
        Biparavector b;
        b.a[0][0] = Complex<S>::one();
        return b;
    }

    /// The linear transformation X -> sum a_ij e_i X e_j computed inside the
    /// paravector algebra. Matches to_matrix through the evaluation map at e0.
    Paravector<S> apply(const Paravector<S>& x) const {
        if (x.algebra() != Algebra::p)
            throw std::invalid_argument("biparavector apply: argument must live in P");
        Paravector<S> acc(Vec4<Complex<S>>{}, Algebra::p);
        for (std::size_t i = 0; i < 4; ++i) {
            const Paravector<S> ei = Paravector<S>::basis(i);
            const Paravector<S> eix = pv_mul(ei, x);
            for (std::size_t j = 0; j < 4; ++j) {
                if (a[i][j].is_zero()) continue;
                acc = acc + a[i][j] * pv_mul(eix, Paravector<S>::basis(j));
            }
        }
        return acc;
    }

    friend bool operator==(const Biparavector& x, const Biparavector& y) {
        return x.a == y.a;
    }
};

using BiparavectorQ = Biparavector<Rational>;
using BiparavectorD = Biparavector<double>;

/// Realize sum a_ij cE_i cEbar_j as a matrix.
template <typename S>
Mat4<Complex<S>> to_matrix(const Biparavector<S>& bp) {
    using C = Complex<S>;
    Mat4<C> m;
    for (std::size_t i = 0; i < 4; ++i) {
        const Mat4<C> left = basis_matrix<C>(i, Algebra::p);
        for (std::size_t j = 0; j < 4; ++j) {
            if (bp.a[i][j].is_zero()) continue;
            m = m + bp.a[i][j] * (left * basis_matrix<C>(j, Algebra::pbar));
        }
    }
    return m;
}

/// Coefficients a_ij = (1/4) trace(M cE_i cEbar_j). The 16 products
/// cE_i cEbar_j are orthonormal under (1/4) trace, so this inverts
/// to_matrix exactly in exact mode.
template <typename S>
Biparavector<S> decompose(const Mat4<Complex<S>>& m) {
    using C = Complex<S>;
    const C quarter = C::from_rational(Rational(1, 4));
    Biparavector<S> bp;
    for (std::size_t i = 0; i < 4; ++i) {
        const Mat4<C> left = basis_matrix<C>(i, Algebra::p);
        for (std::size_t j = 0; j < 4; ++j)
            bp.a[i][j] = quarter * (m * left * basis_matrix<C>(j, Algebra::pbar)).trace();
    }
    return bp;
}

/// Stress-energy tensor as a biparavector: coefficients
/// a_jk = (1/2) A_j conj(A_k) with A = E + iB, zero time row and column.
/// Its matrix equals stress_energy exactly.
template <typename S>
Biparavector<S> stress_biparavector(const Faraday<Complex<S>>& f) {
    using C = Complex<S>;
    const Vec3<C> a = f.complexify().amplitude();
    const C half = C::from_rational(Rational(1, 2));
    Biparavector<S> bp;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            bp.a[j + 1][k + 1] = half * a[j] * a[k].conj();
    return bp;
}

/// Lorentz transformation as a biparavector: u_i conj(u_j) where u is the
/// paravector with represent_left(u) = e^{cF/2}, i.e. u0 = cosh(lambda/2)
/// and u_k = sinh(lambda/2)/lambda A_k (limit A_k/2 at lambda = 0). Its
/// matrix equals exp_matrix(f) up to rounding.
inline Biparavector<double> lorentz_biparavector(const Faraday<CD>& f) {
    const Vec3<CD> a = f.complexify().amplitude();
    const ComplexFaraday<CD> cf = f.complexify();
    std::complex<double> u0;
    std::complex<double> slope;  // coefficient multiplying A
    if (abs(cf.square_scalar()) < detail::kNullSquareThreshold) {
        u0 = 1.0;
        slope = 0.5;
    } else {
        const std::complex<double> lambda = to_std(eigenvalue(cf));
        u0 = std::cosh(lambda / 2.0);
        slope = std::sinh(lambda / 2.0) / lambda;
    }
    Vec4<CD> u(from_std(u0), from_std(slope) * a);
    Biparavector<double> bp;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) bp.a[i][j] = u[i] * u[j].conj();
    return bp;
}

}  // namespace maxmat

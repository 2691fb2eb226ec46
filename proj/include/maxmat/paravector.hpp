#pragma once

#include <stdexcept>

#include "maxmat/faraday.hpp"

namespace maxmat {

/// The two biquaternion orientations: P has e1 e2 = +i e3, Pbar has
/// e1 e2 = -i e3. They are distinct algebras and never mix silently.
enum class Algebra { p, pbar };

/// Convention for the Hodge dual on paravectors: the matrix dual gives
/// multiplication by +i; Baylis's p e3 e2 e1 gives -i.
enum class HodgeConvention { matrix_dual, baylis };

/// Basis matrix cE_i (algebra P) or its entrywise conjugate/transpose
/// cEbar_i (algebra Pbar); index 0 is the identity. Left multiplication by
/// e_i is represented by cE_i, right multiplication by cEbar_i.
template <ring R>
Mat4<R> basis_matrix(std::size_t i, Algebra alg) {
    if (i > 3) throw std::out_of_range("basis_matrix: index must be in 0..3");
    if (i == 0) return Mat4<R>::identity();
    Vec3<R> a;
    a[i - 1] = R::one();
    const R sign = alg == Algebra::p ? -R::imag_unit() : R::imag_unit();
    return block_matrix(a, sign * a);
}

/// Biquaternion (paravector) a0 e0 + a1 e1 + a2 e2 + a3 e3 with complex
/// coefficients, tagged with the algebra it lives in.
template <typename S>
class Paravector {
public:
    Paravector() = default;
    explicit Paravector(Vec4<Complex<S>> coeffs, Algebra alg = Algebra::p)
        : a_(std::move(coeffs)), alg_(alg) {}

    static Paravector basis(std::size_t i, Algebra alg = Algebra::p) {
        if (i > 3) throw std::out_of_range("Paravector::basis: index must be in 0..3");
        Vec4<Complex<S>> c;
        c[i] = Complex<S>::one();
        return Paravector(c, alg);
    }

    const Vec4<Complex<S>>& coeffs() const { return a_; }
    const Complex<S>& coeff(std::size_t i) const { return a_[i]; }
    Algebra algebra() const { return alg_; }

    friend Paravector operator+(const Paravector& x, const Paravector& y) {
        detail_check(x, y, "+");
        return Paravector(x.a_ + y.a_, x.alg_);
    }
    friend Paravector operator-(const Paravector& x, const Paravector& y) {
        detail_check(x, y, "-");
        return Paravector(x.a_ - y.a_, x.alg_);
    }
    friend Paravector operator-(const Paravector& x) { return Paravector(-x.a_, x.alg_); }
    friend Paravector operator*(const Complex<S>& s, const Paravector& x) {
        return Paravector(s * x.a_, x.alg_);
    }
    friend bool operator==(const Paravector& x, const Paravector& y) {
        return x.alg_ == y.alg_ && x.a_ == y.a_;
    }

private:
    static void detail_check(const Paravector& x, const Paravector& y, const char* op) {
        if (x.alg_ != y.alg_)
            throw std::invalid_argument(std::string("paravector ") + op +
                                        ": operands live in different algebras");
    }

    Vec4<Complex<S>> a_;
    Algebra alg_ = Algebra::p;
};

using ParavectorQ = Paravector<Rational>;
using ParavectorD = Paravector<double>;

/// Product via the structure constants e_i e_j = delta_ij e0 + s i eps_ijk e_k
/// with s = +1 in P and -1 in Pbar. The matrix representation is the
/// independent check, never the implementation.
template <typename S>
Paravector<S> pv_mul(const Paravector<S>& x, const Paravector<S>& y) {
    if (x.algebra() != y.algebra())
        throw std::invalid_argument("pv_mul: operands live in different algebras");
    using C = Complex<S>;
    const Vec4<C>& a = x.coeffs();
    const Vec4<C>& b = y.coeffs();
    const Vec3<C> av = a.spatial();
    const Vec3<C> bv = b.spatial();
    const C i_or = x.algebra() == Algebra::p ? C::imag_unit() : -C::imag_unit();
    const C scalar = a[0] * b[0] + bilinear3(av, bv);
    const Vec3<C> wedge = cross(av, bv);
    Vec3<C> vec;
    for (std::size_t k = 0; k < 3; ++k)
        vec[k] = a[0] * bv[k] + b[0] * av[k] + i_or * wedge[k];
    return Paravector<S>(Vec4<C>(scalar, vec), x.algebra());
}

/// Matrix of left multiplication: sum of a_i cE_i (or a_i cEbar_i in Pbar).
template <typename S>
Mat4<Complex<S>> represent_left(const Paravector<S>& x) {
    using C = Complex<S>;
    Mat4<C> m;
    for (std::size_t i = 0; i < 4; ++i)
        m = m + x.coeff(i) * basis_matrix<C>(i, x.algebra());
    return m;
}

/// Matrix of right multiplication: the transpose of represent_left. It
/// reverses products: R_{XY} = R_Y R_X.
template <typename S>
Mat4<Complex<S>> represent_right(const Paravector<S>& x) {
    return represent_left(x).transpose();
}

/// Coordinate isomorphism X = a_i e_i -> (a0, a1, a2, a3)^t.
template <typename S>
Vec4<Complex<S>> phi_iso(const Paravector<S>& x) {
    return x.coeffs();
}

/// Evaluation isomorphism X -> Xv for a nonnull v. Coincides with phi_iso
/// at v = e0.
template <typename S>
Vec4<Complex<S>> theta_iso(const Paravector<S>& x, const Vec4<Complex<S>>& v) {
    if (mink4(v, v).is_zero())
        throw std::domain_error("theta_iso: v is null, the evaluation map is not an isomorphism");
    return represent_left(x) * v;
}

/// Clifford conjugation (spatial reversal): (a0, a) -> (a0, -a). On matrices
/// this is the Minkowski adjoint. Antihomomorphism.
template <typename S>
Paravector<S> clifford_conjugate(const Paravector<S>& x) {
    using C = Complex<S>;
    return Paravector<S>(
        Vec4<C>(x.coeff(0), -x.coeff(1), -x.coeff(2), -x.coeff(3)), x.algebra());
}

/// Reversion: coefficientwise complex conjugate (the basis matrices are
/// Hermitian, so this is the Hermitian adjoint on matrices). Antihomomorphism.
template <typename S>
Paravector<S> reversion(const Paravector<S>& x) {
    return Paravector<S>(x.coeffs().conj(), x.algebra());
}

/// Complex conjugation: conjugates coefficients and lands in the opposite
/// algebra. Preserves product order but is not complex-linear.
template <typename S>
Paravector<S> complex_conjugate(const Paravector<S>& x) {
    const Algebra other = x.algebra() == Algebra::p ? Algebra::pbar : Algebra::p;
    return Paravector<S>(x.coeffs().conj(), other);
}

/// Grade automorphism: reversion composed with Clifford conjugation. The
/// only product-order-preserving involution of the suite.
template <typename S>
Paravector<S> grade_involution(const Paravector<S>& x) {
    return reversion(clifford_conjugate(x));
}

/// Hodge dual: multiplication by i (matrix convention) or -i (Baylis).
template <typename S>
Paravector<S> hodge_dual(const Paravector<S>& x,
                         HodgeConvention conv = HodgeConvention::matrix_dual) {
    using C = Complex<S>;
    const C i = conv == HodgeConvention::matrix_dual ? C::imag_unit() : -C::imag_unit();
    return i * x;
}

enum class Involution { clifford_bar, dagger, complex_conj, grade_plus, hodge };

template <typename S>
Paravector<S> involution(Involution kind, const Paravector<S>& x,
                         HodgeConvention conv = HodgeConvention::matrix_dual) {
    switch (kind) {
        case Involution::clifford_bar: return clifford_conjugate(x);
        case Involution::dagger: return reversion(x);
        case Involution::complex_conj: return complex_conjugate(x);
        case Involution::grade_plus: return grade_involution(x);
        case Involution::hodge: return hodge_dual(x, conv);
    }
    throw std::invalid_argument("involution: unknown kind");
}

}  // namespace maxmat

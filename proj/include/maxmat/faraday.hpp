#pragma once

#include <stdexcept>

#include "maxmat/linalg.hpp"

namespace maxmat {

/// Which of the two complexified realizations a ComplexFaraday carries:
/// `direct` is F - iF* (cross block from -iA); `conjugate` is its
/// entrywise complex conjugate.
enum class Orientation { direct, conjugate };

/// The 3x3 matrix (xB) with (xB)v = v x B, rows
/// [[0,B3,-B2],[-B3,0,B1],[B2,-B1,0]].
template <ring R>
Mat3<R> cross_matrix(const Vec3<R>& b) {
    Mat3<R> m;
    m(0, 1) = b[2];
    m(0, 2) = -b[1];
    m(1, 0) = -b[2];
    m(1, 2) = b[0];
    m(2, 0) = b[1];
    m(2, 1) = -b[0];
    return m;
}

/// The block matrix [[0, a^t],[a, (xc)]] that every field matrix in this
/// library is an instance of.
template <ring R>
Mat4<R> block_matrix(const Vec3<R>& a, const Vec3<R>& c) {
    Mat4<R> m;
    const Mat3<R> k = cross_matrix(c);
    for (std::size_t i = 0; i < 3; ++i) {
        m(0, i + 1) = a[i];
        m(i + 1, 0) = a[i];
        for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = k(i, j);
    }
    return m;
}

/// An electromagnetic field value (or symbolic field): components of E and B.
template <ring R>
struct EMField {
    Vec3<R> E;
    Vec3<R> B;
};

template <ring R>
class ComplexFaraday;

/// Skew-adjoint field matrix [[0, E^t],[E, (xB)]]. Stores E and B so the
/// shape invariant (zero diagonal, Minkowski adjoint = -F) holds by
/// construction.
template <ring R>
class Faraday {
public:
    Faraday() = default;
    explicit Faraday(EMField<R> f) : E_(std::move(f.E)), B_(std::move(f.B)) {}
    Faraday(Vec3<R> e, Vec3<R> b) : E_(std::move(e)), B_(std::move(b)) {}

    const Vec3<R>& electric() const { return E_; }
    const Vec3<R>& magnetic() const { return B_; }

    Mat4<R> matrix() const { return block_matrix(E_, B_); }

    /// Hodge dual: (E,B) -> (-B,E). Applying it twice negates the field.
    Faraday hodge() const { return Faraday(-B_, E_); }

    ComplexFaraday<R> complexify(Orientation o = Orientation::direct) const;

    /// (1/2) cF cFbar: Hermitian, real-entried for real E and B.
    Mat4<R> stress_energy() const;

    friend bool operator==(const Faraday& a, const Faraday& b) {
        return a.E_ == b.E_ && a.B_ == b.B_;
    }

private:
    Vec3<R> E_;
    Vec3<R> B_;
};

/// Complexified field matrix, determined by the amplitude A = E + iB.
/// Realizes [[0, A^t],[A, x(-iA)]] (direct) or its entrywise conjugate.
/// Its square is <A,A> I, so the spectrum is {+lambda, -lambda}.
template <ring R>
class ComplexFaraday {
public:
    ComplexFaraday(Vec3<R> a, Orientation o) : A_(std::move(a)), orient_(o) {}

    const Vec3<R>& amplitude() const { return A_; }
    Orientation orientation() const { return orient_; }

    /// A for the direct form, conj(A) for the conjugate form.
    Vec3<R> realized_amplitude() const {
        return orient_ == Orientation::direct ? A_ : A_.conj();
    }

    Mat4<R> matrix() const {
        const Vec3<R> a = realized_amplitude();
        const R sign = orient_ == Orientation::direct ? -R::imag_unit() : R::imag_unit();
        return block_matrix(a, sign * a);
    }

    /// <A,A>: the scalar whose square roots are the eigenvalues.
    R square_scalar() const {
        const Vec3<R> a = realized_amplitude();
        return bilinear3(a, a);
    }

private:
    Vec3<R> A_;
    Orientation orient_;
};

template <ring R>
ComplexFaraday<R> Faraday<R>::complexify(Orientation o) const {
    const R i = R::imag_unit();
    return ComplexFaraday<R>({E_[0] + i * B_[0], E_[1] + i * B_[1], E_[2] + i * B_[2]}, o);
}

template <ring R>
Mat4<R> Faraday<R>::stress_energy() const {
    const Mat4<R> cf = complexify(Orientation::direct).matrix();
    const Mat4<R> cfbar = complexify(Orientation::conjugate).matrix();
    return R::from_rational(Rational(1, 2)) * (cf * cfbar);
}

/// Principal square root of <A,A>: nonnegative real part, then nonnegative
/// imaginary part. The eigenvalue pair of the matrix is +/- the result.
inline CD eigenvalue(const ComplexFaraday<CD>& cf) {
    std::complex<double> s = std::sqrt(to_std(cf.square_scalar()));
    if (s.real() < 0 || (s.real() == 0 && s.imag() < 0)) s = -s;
    return from_std(s);
}

/// Exact-mode eigenvalue; defined only when <A,A> is a perfect square in
/// the Gaussian rationals.
inline CQ eigenvalue(const ComplexFaraday<CQ>& cf) {
    auto r = gaussian_sqrt(cf.square_scalar());
    if (!r)
        throw std::domain_error(
            "eigenvalue: <A,A> is not a perfect square; use approximate mode");
    return *r;
}

namespace detail {
// Below this, sinh(lambda)/lambda is replaced by its limit 1 and the
// exponential degenerates to I + cF.
inline constexpr double kNullSquareThreshold = 1e-14;
}  // namespace detail

/// Closed-form exponential cosh(lambda) I + sinh(lambda)/lambda cF.
/// Branch-independent (cosh is even and sinh(x)/x is even); the null case
/// lambda = 0 takes the limit I + cF.
inline Mat4<CD> exp_matrix(const ComplexFaraday<CD>& cf) {
    const Mat4<CD> m = cf.matrix();
    if (abs(cf.square_scalar()) < detail::kNullSquareThreshold)
        return Mat4<CD>::identity() + m;
    const std::complex<double> lambda = to_std(eigenvalue(cf));
    const CD ch = from_std(std::cosh(lambda));
    const CD sh = from_std(std::sinh(lambda) / lambda);
    return ch * Mat4<CD>::identity() + sh * m;
}

/// Proper Lorentz transformation e^F = e^{cF/2} e^{cFbar/2}. The two
/// factors commute and are entrywise conjugate, so the product is real up
/// to rounding.
inline Mat4<CD> exp_matrix(const Faraday<CD>& f) {
    const Vec3<CD> a = f.complexify().amplitude();
    const CD half(0.5);
    const ComplexFaraday<CD> half_cf({half * a[0], half * a[1], half * a[2]},
                                     Orientation::direct);
    const Mat4<CD> x = exp_matrix(half_cf);
    return x * x.conj();
}

}  // namespace maxmat

#pragma once

#include <complex>
#include <concepts>
#include <utility>

#include "maxmat/rational.hpp"

namespace maxmat {

/// Complex number over an exact (Rational) or approximate (double) scalar.
/// The two instantiations never mix: an expression is either all-exact or
/// all-approximate, enforced by the type system.
template <typename S>
struct Complex {
    S re{};
    S im{};

    constexpr Complex() = default;
    constexpr Complex(S r) : re(std::move(r)) {}
    constexpr Complex(S r, S i) : re(std::move(r)), im(std::move(i)) {}

    static Complex one() { return Complex(S(1)); }
    static Complex imag_unit() { return Complex(S(0), S(1)); }
    static Complex from_rational(const Rational& r) { return Complex(static_cast<S>(r)); }

    Complex conj() const { return Complex(re, -im); }
    bool is_zero() const { return re == S(0) && im == S(0); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        S d = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

using CQ = Complex<Rational>;  // exact mode
using CD = Complex<double>;    // approximate mode

inline CD to_approx(const CQ& z) {
    return CD(static_cast<double>(z.re), static_cast<double>(z.im));
}
inline std::complex<double> to_std(const CD& z) { return {z.re, z.im}; }
inline CD from_std(const std::complex<double>& z) { return CD(z.real(), z.imag()); }

inline double abs(const CD& z) { return std::abs(to_std(z)); }

/// Commutative ring with an imaginary unit and rational scalars: the
/// element type every algebraic structure here is built over. Models are
/// Complex<Rational>, Complex<double>, and SymScalar.
template <typename R>
concept ring = requires(const R& a, const R& b) {
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.conj() } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { R::one() } -> std::same_as<R>;
    { R::imag_unit() } -> std::same_as<R>;
    { R::from_rational(Rational()) } -> std::same_as<R>;
};

static_assert(ring<CQ>);
static_assert(ring<CD>);

/// Principal square root of an exact complex number: nonnegative real part,
/// and nonnegative imaginary part when the real part is zero. Exists only
/// when the argument is a perfect square in the Gaussian rationals.
inline std::optional<CQ> gaussian_sqrt(const CQ& z) {
    auto normalize = [](CQ w) {
        if (w.re < 0 || (w.re == 0 && w.im < 0)) return -w;
        return w;
    };
    if (z.im == 0) {
        if (z.re >= 0) {
            auto r = rational_sqrt(z.re);
            if (!r) return std::nullopt;
            return CQ(*r);
        }
        auto r = rational_sqrt(-z.re);
        if (!r) return std::nullopt;
        return CQ(Rational(0), *r);
    }
    // |z| must be rational, then x^2 = (re + |z|)/2 must be a rational square.
    auto m = rational_sqrt(z.re * z.re + z.im * z.im);
    if (!m) return std::nullopt;
    auto x2 = Rational(z.re + *m) / 2;
    auto x = rational_sqrt(x2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = z.im / (2 * *x);
    return normalize(CQ(*x, y));
}

}  // namespace maxmat

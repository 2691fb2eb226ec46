#pragma once

#include <algorithm>
#include <array>
#include <cstddef>

#include "maxmat/complex.hpp"

namespace maxmat {

template <ring R>
struct Vec3 {
    std::array<R, 3> c{};

    Vec3() = default;
    Vec3(R a, R b, R d) : c{std::move(a), std::move(b), std::move(d)} {}

    R& operator[](std::size_t i) { return c[i]; }
    const R& operator[](std::size_t i) const { return c[i]; }

    Vec3 conj() const { return {c[0].conj(), c[1].conj(), c[2].conj()}; }
    bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
    }

    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    }
    friend Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
    friend Vec3 operator*(const R& s, const Vec3& a) {
        return {s * a[0], s * a[1], s * a[2]};
    }
    friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }
};

template <ring R>
struct Vec4 {
    std::array<R, 4> c{};  // index 0 is the time component

    Vec4() = default;
    Vec4(R a, R b, R d, R e)
        : c{std::move(a), std::move(b), std::move(d), std::move(e)} {}
    Vec4(R time, Vec3<R> space)
        : c{std::move(time), std::move(space[0]), std::move(space[1]), std::move(space[2])} {}

    R& operator[](std::size_t i) { return c[i]; }
    const R& operator[](std::size_t i) const { return c[i]; }

    Vec3<R> spatial() const { return {c[1], c[2], c[3]}; }
    Vec4 conj() const { return {c[0].conj(), c[1].conj(), c[2].conj(), c[3].conj()}; }
    bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
    }

    friend Vec4 operator+(const Vec4& a, const Vec4& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    friend Vec4 operator-(const Vec4& a, const Vec4& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    }
    friend Vec4 operator-(const Vec4& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
    friend Vec4 operator*(const R& s, const Vec4& a) {
        return {s * a[0], s * a[1], s * a[2], s * a[3]};
    }
    friend bool operator==(const Vec4& a, const Vec4& b) { return a.c == b.c; }
};

/// Complex-bilinear inner product on 3-vectors (not the Hermitian form:
/// <iv, w> = i<v, w>).
template <ring R>
R bilinear3(const Vec3<R>& u, const Vec3<R>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

/// Minkowski inner product of signature (- + + +), complex-bilinear.
template <ring R>
R mink4(const Vec4<R>& u, const Vec4<R>& v) {
    return -(u[0] * v[0]) + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

template <ring R>
Vec3<R> cross(const Vec3<R>& u, const Vec3<R>& v) {
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

template <ring R>
struct Mat3 {
    std::array<R, 9> e{};

    R& operator()(std::size_t i, std::size_t j) { return e[3 * i + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return e[3 * i + j]; }

    friend Vec3<R> operator*(const Mat3& m, const Vec3<R>& v) {
        Vec3<R> r;
        for (std::size_t i = 0; i < 3; ++i)
            r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
        return r;
    }
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.e == b.e; }
};

/// Dense 4x4 matrix over a ring, row-major.
template <ring R>
struct Mat4 {
    std::array<R, 16> e{};

    R& operator()(std::size_t i, std::size_t j) { return e[4 * i + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return e[4 * i + j]; }

    static Mat4 identity() {
        Mat4 m;
        for (std::size_t i = 0; i < 4; ++i) m(i, i) = R::one();
        return m;
    }
    static Mat4 scalar(const R& s) {
        Mat4 m;
        for (std::size_t i = 0; i < 4; ++i) m(i, i) = s;
        return m;
    }

    Mat4 transpose() const {
        Mat4 m;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = (*this)(j, i);
        return m;
    }
    Mat4 conj() const {
        Mat4 m;
        for (std::size_t k = 0; k < 16; ++k) m.e[k] = e[k].conj();
        return m;
    }
    /// Hermitian adjoint (conjugate transpose).
    Mat4 dagger() const { return transpose().conj(); }

    R trace() const { return e[0] + e[5] + e[10] + e[15]; }
    bool is_zero() const {
        return std::all_of(e.begin(), e.end(), [](const R& x) { return x.is_zero(); });
    }

    Vec4<R> row(std::size_t i) const {
        return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2), (*this)(i, 3)};
    }
    Vec4<R> col(std::size_t j) const {
        return {(*this)(0, j), (*this)(1, j), (*this)(2, j), (*this)(3, j)};
    }

    friend Mat4 operator+(const Mat4& a, const Mat4& b) {
        Mat4 m;
        for (std::size_t k = 0; k < 16; ++k) m.e[k] = a.e[k] + b.e[k];
        return m;
    }
    friend Mat4 operator-(const Mat4& a, const Mat4& b) {
        Mat4 m;
        for (std::size_t k = 0; k < 16; ++k) m.e[k] = a.e[k] - b.e[k];
        return m;
    }
    friend Mat4 operator-(const Mat4& a) {
        Mat4 m;
        for (std::size_t k = 0; k < 16; ++k) m.e[k] = -a.e[k];
        return m;
    }
    friend Mat4 operator*(const R& s, const Mat4& a) {
        Mat4 m;
        for (std::size_t k = 0; k < 16; ++k) m.e[k] = s * a.e[k];
        return m;
    }
    friend Mat4 operator*(const Mat4& a, const Mat4& b) {
        Mat4 m;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                R s = a(i, 0) * b(0, j);
                for (std::size_t k = 1; k < 4; ++k) s = s + a(i, k) * b(k, j);
                m(i, j) = s;
            }
        return m;
    }
    friend Vec4<R> operator*(const Mat4& a, const Vec4<R>& v) {
        Vec4<R> r;
        for (std::size_t i = 0; i < 4; ++i) {
            R s = a(i, 0) * v[0];
            for (std::size_t k = 1; k < 4; ++k) s = s + a(i, k) * v[k];
            r[i] = s;
        }
        return r;
    }
    friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }
};

/// eta = diag(-1, +1, +1, +1). The signature is fixed; code never flips it.
template <ring R>
Mat4<R> minkowski_metric() {
    Mat4<R> m = Mat4<R>::identity();
    m(0, 0) = -R::one();
    return m;
}

/// Adjoint with respect to the Minkowski metric: eta M^t eta, the unique N
/// with <Nv, w> = <v, Mw> under mink4.
template <ring R>
Mat4<R> minkowski_adjoint(const Mat4<R>& m) {
    const Mat4<R> eta = minkowski_metric<R>();
    return eta * m.transpose() * eta;
}

/// Truncated Taylor sum I + M + M^2/2! + ... with `terms` summands.
/// The independent oracle for every closed-form exponential here.
template <ring R>
Mat4<R> mat_exp_series(const Mat4<R>& m, int terms) {
    Mat4<R> sum;
    Mat4<R> term = Mat4<R>::identity();
    for (int k = 0; k < terms; ++k) {
        if (k > 0) term = R::from_rational(Rational(1, k)) * (term * m);
        sum = sum + term;
    }
    return sum;
}

/// Determinant by permutation expansion; exact over exact rings.
template <ring R>
R det4(const Mat4<R>& m) {
    auto det3 = [&](std::size_t r0, std::size_t r1, std::size_t r2, std::size_t c0,
                    std::size_t c1, std::size_t c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
               m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
               m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * det3(1, 2, 3, 1, 2, 3) - m(0, 1) * det3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * det3(1, 2, 3, 0, 1, 3) - m(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

// Approximate-mode comparison helpers.

inline double max_abs(const Mat4<CD>& m) {
    double r = 0;
    for (const auto& z : m.e) r = std::max(r, abs(z));
    return r;
}
inline double max_abs_diff(const Mat4<CD>& a, const Mat4<CD>& b) { return max_abs(a - b); }
inline double max_abs(const Vec4<CD>& v) {
    double r = 0;
    for (const auto& z : v.c) r = std::max(r, abs(z));
    return r;
}

}  // namespace maxmat

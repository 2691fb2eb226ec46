#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string_view>
#include <vector>

#include "maxmat/biparavector.hpp"
#include "maxmat/maxwell.hpp"

namespace maxmat {

namespace rng_detail {
inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}
}  // namespace rng_detail

/// Deterministic randomness, split from one seed by suite label so a
/// reported failure replays from the printed seed alone.
class SuiteRng {
public:
    SuiteRng(std::uint64_t seed, std::string_view label)
        : gen_(seed ^ rng_detail::fnv1a(label)) {}

    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    long long nonzero(long long lo, long long hi) {
        for (;;) {
            long long v = uniform(lo, hi);
            if (v != 0) return v;
        }
    }
    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

private:
    std::mt19937_64 gen_;
};

struct SuiteResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

namespace gen {

inline CQ gauss_int(SuiteRng& rng, int bound = 5) {
    return CQ(Rational(rng.uniform(-bound, bound)), Rational(rng.uniform(-bound, bound)));
}
inline CQ real_int(SuiteRng& rng, int bound = 5) {
    return CQ(Rational(rng.uniform(-bound, bound)));
}

inline Vec3<CQ> vec3(SuiteRng& rng, bool real = false) {
    auto draw = [&] { return real ? real_int(rng) : gauss_int(rng); };
    return {draw(), draw(), draw()};
}
inline Vec4<CQ> vec4(SuiteRng& rng) {
    return {gauss_int(rng), gauss_int(rng), gauss_int(rng), gauss_int(rng)};
}
inline Mat4<CQ> mat4(SuiteRng& rng) {
    Mat4<CQ> m;
    for (auto& e : m.e) e = gauss_int(rng, 3);
    return m;
}

inline Faraday<CQ> faraday_exact(SuiteRng& rng) {
    return Faraday<CQ>(vec3(rng, true), vec3(rng, true));
}

inline Vec3<CD> vec3d(SuiteRng& rng, double bound) {
    return {CD(rng.uniform_real(-bound, bound)), CD(rng.uniform_real(-bound, bound)),
            CD(rng.uniform_real(-bound, bound))};
}

inline Faraday<CD> faraday_approx(SuiteRng& rng, double bound) {
    return Faraday<CD>(vec3d(rng, bound), vec3d(rng, bound));
}

/// E, B with |E| = |B| and E.B = 0, so the eigenvalue vanishes and the
/// exponential takes its degenerate I + cF form.
inline Faraday<CD> faraday_null(SuiteRng& rng, double bound) {
    for (;;) {
        const Vec3<CD> e = vec3d(rng, bound);
        const Vec3<CD> v = vec3d(rng, 1.0);
        const Vec3<CD> w = cross(e, v);
        const double e2 = bilinear3(e, e).re;
        const double w2 = bilinear3(w, w).re;
        if (e2 < 1e-2 || w2 < 1e-4) continue;
        const CD scale(std::sqrt(e2 / w2));
        return Faraday<CD>(e, scale * w);
    }
}

inline Paravector<Rational> paravector(SuiteRng& rng, Algebra alg) {
    return Paravector<Rational>(vec4(rng), alg);
}

inline Biparavector<Rational> biparavector(SuiteRng& rng) {
    Biparavector<Rational> bp;
    for (auto& row : bp.a)
        for (auto& c : row) c = gauss_int(rng, 3);
    return bp;
}

/// Real-coefficient polynomial of total degree <= 3 with integer
/// coefficients in [-5,5].
inline SymScalar poly(SuiteRng& rng, bool complex_coeffs = false) {
    SymScalar s;
    const int nterms = static_cast<int>(rng.uniform(2, 5));
    for (int n = 0; n < nterms; ++n) {
        std::array<unsigned, 4> exps{};
        for (;;) {
            unsigned total = 0;
            for (auto& e : exps) {
                e = static_cast<unsigned>(rng.uniform(0, 3));
                total += e;
            }
            if (total <= 3) break;
        }
        const CQ c = complex_coeffs ? gauss_int(rng) : real_int(rng);
        s = s + SymScalar::monomial(c, exps);
    }
    return s;
}

/// Polynomial plus plane-wave atoms with small rational phases.
inline SymScalar sym_scalar(SuiteRng& rng) {
    SymScalar s = poly(rng, true);
    const int natoms = static_cast<int>(rng.uniform(0, 2));
    for (int n = 0; n < natoms; ++n) {
        Rational w(rng.uniform(-2, 2)), kx(rng.uniform(-2, 2)), ky(rng.uniform(-2, 2)),
            kz(rng.uniform(-2, 2));
        if (w == 0 && kx == 0 && ky == 0 && kz == 0) w = 1;
        const SymScalar atom = rng.uniform(0, 1) ? SymScalar::cosine(w, kx, ky, kz)
                                                 : SymScalar::sine(w, kx, ky, kz);
        s = s + poly(rng, true) * atom;
    }
    return s;
}

inline SymVec3 sym_vec3(SuiteRng& rng, bool real = true) {
    return {poly(rng, !real), poly(rng, !real), poly(rng, !real)};
}

inline FourPotential potential(SuiteRng& rng) {
    return {poly(rng), sym_vec3(rng)};
}

inline SymVec4 sym_vec4(SuiteRng& rng) {
    return {sym_scalar(rng), sym_scalar(rng), sym_scalar(rng), sym_scalar(rng)};
}

}  // namespace gen

namespace describe {

inline std::string vec3(const Vec3<CQ>& v) {
    auto c = [](const CQ& z) {
        return "(" + format_rational(z.re) + "," + format_rational(z.im) + ")";
    };
    return "(" + c(v[0]) + ", " + c(v[1]) + ", " + c(v[2]) + ")";
}
inline std::string vec3(const Vec3<CD>& v) {
    std::ostringstream os;
    os << "(" << v[0].re << ", " << v[1].re << ", " << v[2].re << ")";
    return os.str();
}
inline std::string vec4(const Vec4<CQ>& v) {
    auto c = [](const CQ& z) {
        return "(" + format_rational(z.re) + "," + format_rational(z.im) + ")";
    };
    return "(" + c(v[0]) + ", " + c(v[1]) + ", " + c(v[2]) + ", " + c(v[3]) + ")";
}
inline std::string field(const SymEMField& f) {
    return "E=(" + f.E[0].str() + ", " + f.E[1].str() + ", " + f.E[2].str() + ") B=(" +
           f.B[0].str() + ", " + f.B[1].str() + ", " + f.B[2].str() + ")";
}
inline std::string potential(const FourPotential& p) {
    return "phi=" + p.phi.str() + " A=(" + p.A[0].str() + ", " + p.A[1].str() + ", " +
           p.A[2].str() + ")";
}

}  // namespace describe

namespace detail {

template <typename Trial>
SuiteResult run_property(std::string name, int count, Trial&& trial) {
    SuiteResult r;
    r.name = std::move(name);
    r.trials = count;
    for (int i = 0; i < count; ++i) {
        std::optional<std::string> failure = trial(i);
        if (failure) {
            ++r.failures;
            if (r.first_failure.empty())
                r.first_failure = "trial " + std::to_string(i) + ": " + *failure;
        }
    }
    return r;
}

inline bool is_scalar_multiple_of_identity(const Mat4<CQ>& m) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j && !m(i, j).is_zero()) return false;
    return m(1, 1) == m(0, 0) && m(2, 2) == m(0, 0) && m(3, 3) == m(0, 0);
}

}  // namespace detail

/// Random four-potentials: derived fields satisfy the homogeneous
/// equations, all divergence forms agree, the two potential forms agree,
/// the wave and Lorentz-law residuals vanish, and charge is conserved.
inline SuiteResult suite_maxwell_equivalence(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "maxwell-equivalence");
    return detail::run_property("maxwell-equivalence", count, [&](int) -> std::optional<std::string> {
        const FourPotential pot = gen::potential(rng);
        const SymEMField f = derive_fields(pot);
        const FieldCheck ck = check_field(f);
        if (!ck.report.homogeneous_ok)
            return "homogeneous residuals nonzero for " + describe::potential(pot);
        if (!ck.variants_agree || !ck.hodge_current_zero)
            return "divergence forms disagree for " + describe::potential(pot);
        const PotentialForms forms = potential_forms(pot);
        if (!(forms.matrix_form == forms.operator_form) ||
            !(forms.matrix_form == forms.complex_field))
            return "potential duality broken for " + describe::potential(pot);
        if (!ck.wave_residual->is_zero())
            return "wave identity residual nonzero for " + describe::potential(pot);
        if (!ck.lorentz_residual->is_zero())
            return "Lorentz-law residual nonzero for " + describe::potential(pot);
        if (!potential_wave(pot).residual.is_zero())
            return "potential wave residual nonzero for " + describe::potential(pot);
        if (!ck.report.charge_ok)
            return "charge conservation broken for " + describe::potential(pot);
        return std::nullopt;
    });
}

/// Random non-Maxwell fields must be rejected: no false passes.
inline SuiteResult suite_maxwell_falsification(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "maxwell-falsification");
    return detail::run_property("maxwell-falsification", count, [&](int) -> std::optional<std::string> {
        SymEMField f{gen::sym_vec3(rng), gen::sym_vec3(rng)};
        if (maxwell_residuals(f).homogeneous_ok) {
            // force div B != 0
            f.B[0] = f.B[0] + SymScalar::variable(Var::x);
        }
        const FieldCheck ck = check_field(f);
        if (ck.pass() || ck.report.homogeneous_ok)
            return "false pass for " + describe::field(f);
        if (ck.variants_agree && ck.hodge_current_zero)
            return "divergence forms failed to detect non-Maxwell field " + describe::field(f);
        return std::nullopt;
    });
}

/// cF1 cF2 + cF2 cF1 = 2<A1,A2> I, the conjugate version, and the
/// commutation of the two families, exactly on integer fields.
inline SuiteResult suite_anticommutator(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "faraday-anticommutator");
    return detail::run_property("faraday-anticommutator", count, [&](int) -> std::optional<std::string> {
        const Faraday<CQ> f1 = gen::faraday_exact(rng);
        const Faraday<CQ> f2 = gen::faraday_exact(rng);
        const auto cf1 = f1.complexify(Orientation::direct);
        const auto cf2 = f2.complexify(Orientation::direct);
        const auto cb1 = f1.complexify(Orientation::conjugate);
        const auto cb2 = f2.complexify(Orientation::conjugate);
        const Mat4<CQ> m1 = cf1.matrix(), m2 = cf2.matrix();
        const Mat4<CQ> b1 = cb1.matrix(), b2 = cb2.matrix();
        auto describe_pair = [&] {
            return "F1{E=" + describe::vec3(f1.electric()) + ",B=" + describe::vec3(f1.magnetic()) +
                   "} F2{E=" + describe::vec3(f2.electric()) + ",B=" + describe::vec3(f2.magnetic()) + "}";
        };
        const CQ two(Rational(2));
        const CQ inner = bilinear3(cf1.amplitude(), cf2.amplitude());
        if (!(m1 * m2 + m2 * m1 == (two * inner) * Mat4<CQ>::identity()))
            return "anticommutator identity broken: " + describe_pair();
        const CQ inner_conj = bilinear3(cb1.realized_amplitude(), cb2.realized_amplitude());
        if (!(b1 * b2 + b2 * b1 == (two * inner_conj) * Mat4<CQ>::identity()))
            return "conjugate anticommutator identity broken: " + describe_pair();
        if (!(m1 * b2 == b2 * m1))
            return "cF / cFbar commutation broken: " + describe_pair();
        if (!(m1 * m1 == bilinear3(cf1.amplitude(), cf1.amplitude()) * Mat4<CQ>::identity()))
            return "square is not <A,A> I: " + describe_pair();
        return std::nullopt;
    });
}

/// Within the shape [[0,A^t],[A,(xC)]], only C = +-iA squares to a multiple
/// of the identity; every other pair must fail the property.
inline SuiteResult suite_square_uniqueness(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "square-uniqueness");
    return detail::run_property("square-uniqueness", count, [&](int) -> std::optional<std::string> {
        const CQ i = CQ::imag_unit();
        Vec3<CQ> a, c;
        for (;;) {
            a = gen::vec3(rng);
            c = gen::vec3(rng);
            if (!(c == i * a) && !(c == -(i * a))) break;
        }
        const Mat4<CQ> m = block_matrix(a, c);
        if (detail::is_scalar_multiple_of_identity(m * m))
            return "square unexpectedly scalar for A=" + describe::vec3(a) +
                   " C=" + describe::vec3(c);
        return std::nullopt;
    });
}

/// Divergence of the stress-energy matrix equals F (rho, J) for fields
/// derived from random potentials.
inline SuiteResult suite_lorentz_law(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "lorentz-law");
    return detail::run_property("lorentz-law", count, [&](int) -> std::optional<std::string> {
        const FourPotential pot = gen::potential(rng);
        const SymEMField f = derive_fields(pot);
        if (!stress_divergence_residual(f).is_zero())
            return "stress divergence != F(rho,J) for " + describe::potential(pot);
        return std::nullopt;
    });
}

/// Left representation is a homomorphism, right representation reverses
/// products, and left/right multiplications commute, in both algebras.
inline SuiteResult suite_representations(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "representations");
    return detail::run_property("representations", count, [&](int trial) -> std::optional<std::string> {
        const Algebra alg = trial % 2 ? Algebra::pbar : Algebra::p;
        const auto x = gen::paravector(rng, alg);
        const auto y = gen::paravector(rng, alg);
        auto describe_pair = [&] {
            return "X=" + describe::vec4(x.coeffs()) + " Y=" + describe::vec4(y.coeffs()) +
                   (alg == Algebra::p ? " in P" : " in Pbar");
        };
        const auto xy = pv_mul(x, y);
        if (!(represent_left(xy) == represent_left(x) * represent_left(y)))
            return "left representation is not a homomorphism: " + describe_pair();
        if (!(represent_right(xy) == represent_right(y) * represent_right(x)))
            return "right representation does not reverse products: " + describe_pair();
        if (!(represent_left(x) * represent_right(y) == represent_right(y) * represent_left(x)))
            return "left and right multiplications do not commute: " + describe_pair();
        // evaluation map consistency at e0
        const Vec4<CQ> e0{CQ::one(), CQ(), CQ(), CQ()};
        if (!(theta_iso(x, e0) == phi_iso(x)))
            return "theta at e0 differs from phi: " + describe_pair();
        return std::nullopt;
    });
}

/// Fixed checks on the sixteen basis matrices: Hermitian, traceless except
/// the identity, squares equal I, orthonormal under (1/4) trace, and the
/// commutation pattern between the two families.
inline SuiteResult suite_basis_matrices(std::uint64_t /*seed*/, int /*count*/) {
    SuiteResult r;
    r.name = "basis-matrices";
    r.trials = 1;
    auto fail = [&](const std::string& msg) {
        ++r.failures;
        if (r.first_failure.empty()) r.first_failure = msg;
    };
    std::vector<Mat4<CQ>> basis;
    std::vector<std::string> names;
    basis.push_back(Mat4<CQ>::identity());
    names.push_back("I");
    for (std::size_t i = 1; i <= 3; ++i) {
        basis.push_back(basis_matrix<CQ>(i, Algebra::p));
        names.push_back("cE" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= 3; ++i) {
        basis.push_back(basis_matrix<CQ>(i, Algebra::pbar));
        names.push_back("cEbar" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) {
            basis.push_back(basis_matrix<CQ>(i, Algebra::p) * basis_matrix<CQ>(j, Algebra::pbar));
            names.push_back("cE" + std::to_string(i) + "*cEbar" + std::to_string(j));
        }
    const CQ quarter = CQ::from_rational(Rational(1, 4));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!(basis[i].dagger() == basis[i])) fail(names[i] + " is not Hermitian");
        if (i > 0 && !basis[i].trace().is_zero()) fail(names[i] + " is not traceless");
        if (!(basis[i] * basis[i] == Mat4<CQ>::identity())) fail(names[i] + "^2 != I");
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const CQ ip = quarter * (basis[i] * basis[j]).trace();
            const CQ expect = i == j ? CQ::one() : CQ();
            if (!(ip == expect))
                fail("basis not orthonormal at " + names[i] + ", " + names[j]);
        }
    }
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) {
            const Mat4<CQ> p_i = basis_matrix<CQ>(i, Algebra::p);
            const Mat4<CQ> p_j = basis_matrix<CQ>(j, Algebra::p);
            const Mat4<CQ> q_i = basis_matrix<CQ>(i, Algebra::pbar);
            const Mat4<CQ> q_j = basis_matrix<CQ>(j, Algebra::pbar);
            if (i != j) {
                if (!(p_i * p_j == -(p_j * p_i)))
                    fail("cE" + std::to_string(i) + " and cE" + std::to_string(j) +
                         " do not anticommute");
                if (!(q_i * q_j == -(q_j * q_i)))
                    fail("cEbar" + std::to_string(i) + " and cEbar" + std::to_string(j) +
                         " do not anticommute");
            }
            if (!(p_i * q_j == q_j * p_i))
                fail("cE" + std::to_string(i) + " and cEbar" + std::to_string(j) +
                     " do not commute");
        }
    // the expected orientation: cE1 cE2 = i cE3, cEbar1 cEbar2 = -i cEbar3
    const CQ i_unit = CQ::imag_unit();
    if (!(basis_matrix<CQ>(1, Algebra::p) * basis_matrix<CQ>(2, Algebra::p) ==
          i_unit * basis_matrix<CQ>(3, Algebra::p)))
        fail("cE1 cE2 != i cE3");
    if (!(basis_matrix<CQ>(1, Algebra::pbar) * basis_matrix<CQ>(2, Algebra::pbar) ==
          -i_unit * basis_matrix<CQ>(3, Algebra::pbar)))
        fail("cEbar1 cEbar2 != -i cEbar3");
    return r;
}

/// decompose inverts to_matrix exactly; the coefficient transformation
/// matches the paravector-level transformation through evaluation at e0.
inline SuiteResult suite_biparavector_roundtrip(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "biparavector-roundtrip");
    return detail::run_property("biparavector-roundtrip", count, [&](int) -> std::optional<std::string> {
        const Mat4<CQ> m = gen::mat4(rng);
        if (!(to_matrix(decompose(m)) == m))
            return "matrix round trip failed";
        const Biparavector<Rational> bp = gen::biparavector(rng);
        if (!(decompose(to_matrix(bp)) == bp))
            return "coefficient round trip failed";
        const auto x = gen::paravector(rng, Algebra::p);
        const Vec4<CQ> left = to_matrix(bp) * phi_iso(x);
        const Vec4<CQ> right = phi_iso(bp.apply(x));
        if (!(left == right))
            return "matrix action differs from algebra action at X=" + describe::vec4(x.coeffs());
        return std::nullopt;
    });
}

/// Closed-form exponential against the 40-term series oracle; the result
/// preserves the Minkowski metric and has unit determinant.
inline SuiteResult suite_exponential(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "exponential");
    return detail::run_property("exponential", count, [&](int trial) -> std::optional<std::string> {
        const Faraday<CD> f = (trial % 5 == 4) ? gen::faraday_null(rng, 1.1)
                                               : gen::faraday_approx(rng, 1.1);
        auto describe_f = [&] {
            return "E=" + describe::vec3(f.electric()) + " B=" + describe::vec3(f.magnetic());
        };
        const Mat4<CD> L = exp_matrix(f);
        const Mat4<CD> series = mat_exp_series(f.matrix(), 40);
        if (max_abs_diff(L, series) > 1e-10)
            return "closed form differs from series oracle by " +
                   std::to_string(max_abs_diff(L, series)) + " at " + describe_f();
        const Mat4<CD> eta = minkowski_metric<CD>();
        if (max_abs_diff(L.transpose() * eta * L, eta) > 1e-9)
            return "metric not preserved at " + describe_f();
        if (abs(det4(L) - CD(1.0)) > 1e-9)
            return "determinant differs from 1 at " + describe_f();
        // metric preservation on vectors
        Vec4<CD> v, w;
        for (std::size_t k = 0; k < 4; ++k) {
            v[k] = CD(rng.uniform_real(-5, 5));
            w[k] = CD(rng.uniform_real(-5, 5));
        }
        const double drift = abs(mink4(L * v, L * w) - mink4(v, w));
        if (drift > 1e-9)
            return "inner product drift " + std::to_string(drift) + " at " + describe_f();
        // closed form for cF against the series on the complex matrix
        const auto cf = f.complexify();
        if (max_abs_diff(exp_matrix(cf), mat_exp_series(cf.matrix(), 40)) > 1e-10)
            return "cF exponential differs from series oracle at " + describe_f();
        return std::nullopt;
    });
}

/// The stress-energy biparavector realizes the stress-energy matrix exactly;
/// the Lorentz biparavector realizes the exponential within 1e-9; and the
/// transpose/adjoint exchange identity behind both holds exactly.
inline SuiteResult suite_corollary(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "corollary");
    return detail::run_property("corollary", count, [&](int) -> std::optional<std::string> {
        const Faraday<CQ> f = gen::faraday_exact(rng);
        if (!(to_matrix(stress_biparavector(f)) == f.stress_energy()))
            return "stress biparavector mismatch at E=" + describe::vec3(f.electric()) +
                   " B=" + describe::vec3(f.magnetic());
        const Mat4<CQ> cf = f.complexify(Orientation::direct).matrix();
        const Mat4<CQ> cfbar = f.complexify(Orientation::conjugate).matrix();
        if (!(cfbar.transpose() == cf.dagger()))
            return "transpose of cFbar differs from dagger of cF";
        const Faraday<CD> fd = gen::faraday_approx(rng, 1.1);
        const double diff = max_abs_diff(to_matrix(lorentz_biparavector(fd)), exp_matrix(fd));
        if (diff > 1e-9)
            return "Lorentz biparavector differs from exponential by " + std::to_string(diff) +
                   " at E=" + describe::vec3(fd.electric()) + " B=" + describe::vec3(fd.magnetic());
        return std::nullopt;
    });
}

/// Applying the operator matrix twice equals the Laplacian, and the two
/// wave factors compose to the wave operator, on random symbolic fields.
inline SuiteResult suite_operator_square(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "operator-square");
    return detail::run_property("operator-square", count, [&](int) -> std::optional<std::string> {
        const SymVec4 f = gen::sym_vec4(rng);
        SymVec4 lap;
        for (std::size_t k = 0; k < 4; ++k)
            lap[k] = f[k].derivative(Var::x).derivative(Var::x) +
                     f[k].derivative(Var::y).derivative(Var::y) +
                     f[k].derivative(Var::z).derivative(Var::z);
        if (!(cbar_nabla(cbar_nabla(f)) == lap))
            return "operator square differs from Laplacian";
        if (!(wave_factor(TimeSign::minus, wave_factor(TimeSign::plus, f)) == wave_op(f)))
            return "factorization (dt - op)(dt + op) differs from wave operator";
        if (!(wave_factor(TimeSign::plus, wave_factor(TimeSign::minus, f)) == wave_op(f)))
            return "factorization (dt + op)(dt - op) differs from wave operator";
        return std::nullopt;
    });
}

/// Ring axioms, commuting partials, and the Leibniz rule for matrix
/// differentials, exactly on random symbolic inputs.
inline SuiteResult suite_symfield_ring(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "symfield-ring");
    return detail::run_property("symfield-ring", count, [&](int) -> std::optional<std::string> {
        const SymScalar a = gen::sym_scalar(rng);
        const SymScalar b = gen::sym_scalar(rng);
        const SymScalar c = gen::sym_scalar(rng);
        if (!(a * b == b * a)) return "multiplication is not commutative";
        if (!((a + b) * c == a * c + b * c)) return "distributivity broken";
        if (!((a * b) * c == a * (b * c))) return "associativity broken";
        if (!(a.derivative(Var::x).derivative(Var::y) ==
              a.derivative(Var::y).derivative(Var::x)))
            return "partials do not commute";
        // curl grad and div curl vanish
        if (!curl(grad(a)).is_zero()) return "curl of gradient is not zero";
        const SymVec3 v{a, b, c};
        if (!divergence(curl(v)).is_zero()) return "divergence of curl is not zero";
        // Leibniz rule for the matrix differential, entrywise
        SymMat4 ma, mb;
        for (std::size_t k = 0; k < 4; ++k) {
            ma.e[4 * k + k % 4] = ma.e[4 * k + k % 4] + gen::poly(rng, true);
            ma.e[(5 * k + 3) % 16] = ma.e[(5 * k + 3) % 16] + gen::poly(rng, true);
            mb.e[(7 * k + 1) % 16] = mb.e[(7 * k + 1) % 16] + gen::poly(rng, true);
            mb.e[(3 * k + 2) % 16] = mb.e[(3 * k + 2) % 16] + gen::poly(rng, true);
        }
        const auto dab = differential(ma * mb);
        const auto da = differential(ma);
        const auto db = differential(mb);
        for (std::size_t k = 0; k < 4; ++k)
            if (!(dab[k] == da[k] * mb + ma * db[k]))
                return "Leibniz rule broken in variable " +
                       std::string(var_name(static_cast<Var>(k)));
        return std::nullopt;
    });
}

/// Involution laws: the two adjoint-type maps reverse products, the grade
/// automorphism and complex conjugation preserve them, and each matches its
/// matrix realization.
inline SuiteResult suite_involutions(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "involutions");
    return detail::run_property("involutions", count, [&](int trial) -> std::optional<std::string> {
        const Algebra alg = trial % 2 ? Algebra::pbar : Algebra::p;
        const auto x = gen::paravector(rng, alg);
        const auto y = gen::paravector(rng, alg);
        const auto xy = pv_mul(x, y);
        if (!(clifford_conjugate(xy) == pv_mul(clifford_conjugate(y), clifford_conjugate(x))))
            return "Clifford conjugation does not reverse products";
        if (!(reversion(xy) == pv_mul(reversion(y), reversion(x))))
            return "reversion does not reverse products";
        if (!(grade_involution(xy) == pv_mul(grade_involution(x), grade_involution(y))))
            return "grade automorphism does not preserve products";
        if (!(complex_conjugate(xy) == pv_mul(complex_conjugate(x), complex_conjugate(y))))
            return "complex conjugation does not preserve products";
        if (complex_conjugate(x).algebra() == x.algebra())
            return "complex conjugation does not switch algebras";
        const CQ i = CQ::imag_unit();
        if (!(complex_conjugate(i * x) == -i * complex_conjugate(x)))
            return "complex conjugation is unexpectedly complex-linear";
        // matrix-level correspondences
        if (!(represent_left(clifford_conjugate(x)) == minkowski_adjoint(represent_left(x))))
            return "Clifford conjugation does not realize the Minkowski adjoint";
        if (!(represent_left(reversion(x)) == represent_left(x).dagger()))
            return "reversion does not realize the Hermitian adjoint";
        if (!(represent_left(complex_conjugate(x)) == represent_left(x).conj()))
            return "complex conjugation does not realize the entrywise conjugate";
        if (!(represent_left(hodge_dual(x)) == i * represent_left(x)))
            return "Hodge dual does not realize multiplication by i";
        if (!(hodge_dual(x, HodgeConvention::baylis) == -i * x))
            return "Baylis Hodge convention is not multiplication by -i";
        // each is an involution up to the expected sign behaviour
        if (!(clifford_conjugate(clifford_conjugate(x)) == x) ||
            !(reversion(reversion(x)) == x) ||
            !(complex_conjugate(complex_conjugate(x)) == x) ||
            !(grade_involution(grade_involution(x)) == x))
            return "an involution applied twice is not the identity";
        return std::nullopt;
    });
}

/// Metric and adjoint plumbing: the Minkowski adjoint is an involutive
/// antihomomorphism with the defining inner-product property, the trace is
/// cyclic, and both inner products are symmetric and complex-bilinear.
inline SuiteResult suite_linalg(std::uint64_t seed, int count) {
    SuiteRng rng(seed, "linalg-adjoint");
    return detail::run_property("linalg-adjoint", count, [&](int) -> std::optional<std::string> {
        const Mat4<CQ> a = gen::mat4(rng);
        const Mat4<CQ> b = gen::mat4(rng);
        if (!(minkowski_adjoint(minkowski_adjoint(a)) == a))
            return "Minkowski adjoint is not an involution";
        if (!(minkowski_adjoint(a * b) == minkowski_adjoint(b) * minkowski_adjoint(a)))
            return "Minkowski adjoint does not reverse products";
        if (!((a * b).trace() == (b * a).trace())) return "trace is not cyclic";
        const Vec4<CQ> v = gen::vec4(rng), w = gen::vec4(rng);
        if (!(mink4(minkowski_adjoint(a) * v, w) == mink4(v, a * w)))
            return "adjoint does not satisfy <adj(M)v,w> = <v,Mw>";
        if (!(mink4(v, w) == mink4(w, v))) return "Minkowski product is not symmetric";
        const Vec3<CQ> p = gen::vec3(rng), q = gen::vec3(rng);
        const CQ i = CQ::imag_unit();
        if (!(bilinear3(i * p, q) == i * bilinear3(p, q)))
            return "bilinear product is not complex-bilinear";
        if (!(bilinear3(p, q) == bilinear3(q, p))) return "bilinear product is not symmetric";
        return std::nullopt;
    });
}

struct SelftestOptions {
    std::uint64_t seed = 42;
    int count = 100;
};

inline std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
    using Suite = SuiteResult (*)(std::uint64_t, int);
    static constexpr std::array<Suite, 14> suites{
        suite_linalg,
        suite_symfield_ring,
        suite_anticommutator,
        suite_square_uniqueness,
        suite_exponential,
        suite_basis_matrices,
        suite_representations,
        suite_involutions,
        suite_biparavector_roundtrip,
        suite_corollary,
        suite_operator_square,
        suite_maxwell_equivalence,
        suite_maxwell_falsification,
        suite_lorentz_law,
    };
    std::vector<SuiteResult> results;
    results.reserve(suites.size());
    for (Suite s : suites) results.push_back(s(opts.seed, opts.count));
    return results;
}

}  // namespace maxmat

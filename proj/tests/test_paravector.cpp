#include <catch2/catch_amalgamated.hpp>

#include "maxmat/paravector.hpp"
#include "maxmat/selftest.hpp"

using namespace maxmat;

namespace {

ParavectorQ pv(int a0, int a1, int a2, int a3, Algebra alg = Algebra::p) {
    return ParavectorQ({CQ(Rational(a0)), CQ(Rational(a1)), CQ(Rational(a2)), CQ(Rational(a3))},
                       alg);
}

}  // namespace

TEST_CASE("basis matrices: explicit entries") {
    // cE1 = [[0,1,0,0],[1,0,0,0],[0,0,0,-i],[0,0,i,0]]
    Mat4<CQ> ce1;
    ce1(0, 1) = CQ::one();
    ce1(1, 0) = CQ::one();
    ce1(2, 3) = -CQ::imag_unit();
    ce1(3, 2) = CQ::imag_unit();
    CHECK(basis_matrix<CQ>(1, Algebra::p) == ce1);
    CHECK(basis_matrix<CQ>(1, Algebra::pbar) == ce1.transpose());
    CHECK(basis_matrix<CQ>(0, Algebra::p) == Mat4<CQ>::identity());
    CHECK(basis_matrix<CQ>(0, Algebra::pbar) == Mat4<CQ>::identity());
    CHECK_THROWS_AS(basis_matrix<CQ>(4, Algebra::p), std::out_of_range);
}

TEST_CASE("structure constants fix the two orientations") {
    const auto e1 = ParavectorQ::basis(1), e2 = ParavectorQ::basis(2),
               e3 = ParavectorQ::basis(3);
    CHECK(pv_mul(e1, e2) == CQ::imag_unit() * e3);

    const auto f1 = ParavectorQ::basis(1, Algebra::pbar);
    const auto f2 = ParavectorQ::basis(2, Algebra::pbar);
    const auto f3 = ParavectorQ::basis(3, Algebra::pbar);
    CHECK(pv_mul(f1, f2) == -CQ::imag_unit() * f3);

    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(pv_mul(ParavectorQ::basis(i), ParavectorQ::basis(i)) == ParavectorQ::basis(0));
        CHECK(pv_mul(ParavectorQ::basis(i, Algebra::pbar), ParavectorQ::basis(i, Algebra::pbar)) ==
              ParavectorQ::basis(0, Algebra::pbar));
    }

    CHECK_THROWS_AS(pv_mul(e1, f1), std::invalid_argument);
    CHECK_THROWS_AS(pv(1, 2, 3, 4) + pv(1, 0, 0, 0, Algebra::pbar), std::invalid_argument);
}

TEST_CASE("left representation sends basis elements to basis matrices") {
    CHECK(represent_left(ParavectorQ::basis(0)) == Mat4<CQ>::identity());
    CHECK(represent_left(ParavectorQ::basis(1)) == basis_matrix<CQ>(1, Algebra::p));
    CHECK(represent_right(ParavectorQ::basis(1)) == basis_matrix<CQ>(1, Algebra::pbar));
    CHECK(represent_right(ParavectorQ::basis(0)) == Mat4<CQ>::identity());
    // Pbar paravectors are realized over the conjugate basis
    CHECK(represent_left(ParavectorQ::basis(2, Algebra::pbar)) ==
          basis_matrix<CQ>(2, Algebra::pbar));
}

TEST_CASE("representation suite: homomorphism, reversal, commutation") {
    const SuiteResult r = suite_representations(42, 60);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
    const SuiteResult b = suite_basis_matrices(42, 1);
    INFO(b.first_failure);
    CHECK(b.failures == 0);
}

TEST_CASE("coordinate isomorphism and the evaluation map") {
    CHECK(phi_iso(ParavectorQ::basis(2)) ==
          Vec4<CQ>(CQ(), CQ(), CQ::one(), CQ()));

    SuiteRng rng(11, "iso");
    const Vec4<CQ> e0{CQ::one(), CQ(), CQ(), CQ()};
    for (int k = 0; k < 20; ++k) {
        const auto x = gen::paravector(rng, Algebra::p);
        const auto y = gen::paravector(rng, Algebra::p);
        // linearity
        CHECK(phi_iso(x) + phi_iso(y) == phi_iso(x + y));
        // agreement with evaluation at e0
        CHECK(theta_iso(x, e0) == phi_iso(x));
    }

    // scalar paravector acts as a scalar on any nonnull v
    const CQ a(Rational(3), Rational(1));
    const ParavectorQ scalar = a * ParavectorQ::basis(0);
    const Vec4<CQ> v{CQ(Rational(2)), CQ(Rational(1)), CQ(Rational(0)), CQ(Rational(1))};
    CHECK(theta_iso(scalar, v) == a * v);

    // null vector rejected: <v,v> = -1 + 1 = 0
    const Vec4<CQ> null_v{CQ::one(), CQ::one(), CQ(), CQ()};
    CHECK_THROWS_AS(theta_iso(pv(1, 2, 3, 4), null_v), std::domain_error);
}

TEST_CASE("involutions: anchors") {
    const auto e1 = ParavectorQ::basis(1);
    CHECK(clifford_conjugate(e1) == -e1);
    CHECK(minkowski_adjoint(basis_matrix<CQ>(1, Algebra::p)) ==
          -basis_matrix<CQ>(1, Algebra::p));

    const ParavectorQ ie0 = CQ::imag_unit() * ParavectorQ::basis(0);
    CHECK(reversion(ie0) == -ie0);

    // Hodge dual of a paravector is multiplication by i; Baylis flips it
    const ParavectorQ x = pv(1, 2, -3, 4);
    CHECK(hodge_dual(x) == CQ::imag_unit() * x);
    CHECK(hodge_dual(x, HodgeConvention::baylis) == -CQ::imag_unit() * x);

    // dispatcher agrees with the named maps
    CHECK(involution(Involution::clifford_bar, x) == clifford_conjugate(x));
    CHECK(involution(Involution::dagger, x) == reversion(x));
    CHECK(involution(Involution::complex_conj, x) == complex_conjugate(x));
    CHECK(involution(Involution::grade_plus, x) == grade_involution(x));
    CHECK(involution(Involution::hodge, x, HodgeConvention::baylis) ==
          hodge_dual(x, HodgeConvention::baylis));
}

TEST_CASE("involution suite: product laws and matrix realizations") {
    const SuiteResult r = suite_involutions(42, 60);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
}

TEST_CASE("grade automorphism matches the a -> conj(a), vector negation form") {
    const ParavectorQ x({CQ(Rational(1), Rational(2)), CQ(Rational(0), Rational(1)),
                         CQ(Rational(3)), CQ(Rational(-1), Rational(1))},
                        Algebra::p);
    const ParavectorQ g = grade_involution(x);
    CHECK(g.coeff(0) == x.coeff(0).conj());
    for (std::size_t i = 1; i < 4; ++i) CHECK(g.coeff(i) == -x.coeff(i).conj());
    // matrix level: conj(a) I - dagger(cF)
    const Mat4<CQ> left = represent_left(x);
    const Mat4<CQ> scalar_part = Mat4<CQ>::scalar(x.coeff(0));
    const Mat4<CQ> cf = left - scalar_part;
    CHECK(represent_left(g) == Mat4<CQ>::scalar(x.coeff(0).conj()) - cf.dagger());
}

#include <catch2/catch_amalgamated.hpp>

#include "maxmat/biparavector.hpp"
#include "maxmat/selftest.hpp"

using namespace maxmat;

TEST_CASE("realization of single coefficients") {
    BiparavectorQ bp;
    bp.a[0][0] = CQ::one();
    CHECK(to_matrix(bp) == Mat4<CQ>::identity());

    bp = BiparavectorQ{};
    bp.a[1][0] = CQ::one();
    CHECK(to_matrix(bp) == basis_matrix<CQ>(1, Algebra::p));

    bp = BiparavectorQ{};
    bp.a[1][1] = CQ::one();
    Mat4<CQ> diag;  // cE1 cEbar1 = diag(1, 1, -1, -1)
    diag(0, 0) = CQ::one();
    diag(1, 1) = CQ::one();
    diag(2, 2) = -CQ::one();
    diag(3, 3) = -CQ::one();
    CHECK(to_matrix(bp) ==
          basis_matrix<CQ>(1, Algebra::p) * basis_matrix<CQ>(1, Algebra::pbar));
    CHECK(to_matrix(bp) == diag);
}

TEST_CASE("trace-formula decomposition inverts realization exactly") {
    const BiparavectorQ from_identity = decompose(Mat4<CQ>::identity());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(from_identity.a[i][j] == (i == 0 && j == 0 ? CQ::one() : CQ()));

    const BiparavectorQ from_ce2 = decompose(basis_matrix<CQ>(2, Algebra::p));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(from_ce2.a[i][j] == (i == 2 && j == 0 ? CQ::one() : CQ()));

    const SuiteResult r = suite_biparavector_roundtrip(42, 60);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
}

TEST_CASE("decomposition is complex-linear") {
    SuiteRng rng(13, "bp-linear");
    const CQ s(Rational(2), Rational(-3));
    for (int k = 0; k < 10; ++k) {
        const Mat4<CQ> m = gen::mat4(rng), n = gen::mat4(rng);
        const BiparavectorQ dm = decompose(m), dn = decompose(n);
        const BiparavectorQ dsum = decompose(m + s * n);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(dsum.a[i][j] == dm.a[i][j] + s * dn.a[i][j]);
    }
}

TEST_CASE("algebra action matches the matrix action through phi") {
    const BiparavectorQ id = BiparavectorQ::identity();
    SuiteRng rng(14, "bp-apply");
    for (int k = 0; k < 10; ++k) {
        const auto x = gen::paravector(rng, Algebra::p);
        CHECK(id.apply(x) == x);
    }

    // a11 = 1 applied to e0: e1 e0 e1 = e0
    BiparavectorQ bp;
    bp.a[1][1] = CQ::one();
    CHECK(bp.apply(ParavectorQ::basis(0)) == ParavectorQ::basis(0));

    // arguments tagged Pbar are rejected
    CHECK_THROWS_AS(bp.apply(ParavectorQ::basis(0, Algebra::pbar)), std::invalid_argument);
}

TEST_CASE("stress-energy biparavector") {
    CHECK(to_matrix(stress_biparavector(Faraday<CQ>({}, {}))).is_zero());

    const Faraday<CQ> f({CQ::one(), CQ(), CQ()}, {CQ(), CQ(), CQ()});
    const BiparavectorQ bp = stress_biparavector(f);
    const CQ half = CQ::from_rational(Rational(1, 2));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(bp.a[i][j] == (i == 1 && j == 1 ? half : CQ()));
    CHECK(to_matrix(bp) == f.stress_energy());

    SuiteRng rng(15, "bp-stress");
    for (int k = 0; k < 20; ++k) {
        const Faraday<CQ> g = gen::faraday_exact(rng);
        CHECK(to_matrix(stress_biparavector(g)) == g.stress_energy());
    }
}

TEST_CASE("Lorentz biparavector realizes the exponential") {
    const BiparavectorD id_bp = lorentz_biparavector(Faraday<CD>({}, {}));
    CHECK(id_bp.a[0][0] == CD(1.0));
    CHECK(max_abs_diff(to_matrix(id_bp), Mat4<CD>::identity()) == 0.0);

    const Faraday<CD> boost({CD(0.7), CD(), CD()}, {CD(), CD(), CD()});
    CHECK(max_abs_diff(to_matrix(lorentz_biparavector(boost)),
                       mat_exp_series(boost.matrix(), 40)) < 1e-10);

    const SuiteResult r = suite_corollary(42, 40);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
}

TEST_CASE("transpose of the conjugate matrix is the Hermitian adjoint of cF") {
    SuiteRng rng(16, "bp-key-identity");
    for (int k = 0; k < 20; ++k) {
        const Faraday<CQ> g = gen::faraday_exact(rng);
        CHECK(g.complexify(Orientation::conjugate).matrix().transpose() ==
              g.complexify(Orientation::direct).matrix().dagger());
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "maxmat/selftest.hpp"
#include "maxmat/symfield.hpp"

using namespace maxmat;

namespace {

const SymScalar T = SymScalar::variable(Var::t);
const SymScalar X = SymScalar::variable(Var::x);
const SymScalar Y = SymScalar::variable(Var::y);
const SymScalar Z = SymScalar::variable(Var::z);

SymScalar k(int n) { return SymScalar::from_rational(Rational(n)); }

}  // namespace

TEST_CASE("canonical arithmetic") {
    // cos^2 L = 1/2 + cos(2L)/2
    const SymScalar c = SymScalar::cosine(1, 0, 0, 1);  // cos(z - t)
    const SymScalar expected = SymScalar::from_rational(Rational(1, 2)) +
                               SymScalar::from_rational(Rational(1, 2)) *
                                   SymScalar::cosine(2, 0, 0, 2);
    CHECK(c * c == expected);

    CHECK((X + T) * (X - T) == X * X - T * T);

    // canonical idempotence under adding zero
    const SymScalar xc = X * c;
    CHECK(xc + SymScalar{} == xc);

    // sin^2 + cos^2 = 1
    const SymScalar s = SymScalar::sine(1, 0, 0, 1);
    CHECK(s * s + c * c == SymScalar::one());

    // cos(-L) = cos(L), sin(-L) = -sin(L) under phase canonicalization
    CHECK(SymScalar::cosine(1, 0, 0, 1) == SymScalar::cosine(-1, 0, 0, -1));
    CHECK(SymScalar::sine(1, 0, 0, 1) == -SymScalar::sine(-1, 0, 0, -1));
}

TEST_CASE("exact partial derivatives") {
    // d/dx (x^2 y) = 2 x y
    CHECK(partial(X * X * Y, Var::x) == k(2) * X * Y);

    // d/dt cos(k z - w t) = w sin(k z - w t)
    const SymScalar wave = SymScalar::cosine(3, 0, 0, 2);
    CHECK(partial(wave, Var::t) == k(3) * SymScalar::sine(3, 0, 0, 2));

    // product rule across the atom: d/dx (x cos L) = cos L - x k1 sin L
    const SymScalar cl = SymScalar::cosine(0, 2, 0, 0);  // cos(2x)
    CHECK(partial(X * cl, Var::x) ==
          cl - k(2) * X * SymScalar::sine(0, 2, 0, 0));

    // partials commute
    SuiteRng rng(21, "partials");
    for (int i = 0; i < 10; ++i) {
        const SymScalar f = gen::sym_scalar(rng);
        CHECK(partial(partial(f, Var::x), Var::y) == partial(partial(f, Var::y), Var::x));
    }
}

TEST_CASE("vector calculus operators") {
    SuiteRng rng(22, "vector-calculus");
    for (int i = 0; i < 10; ++i) {
        const SymScalar f = gen::poly(rng);
        CHECK(curl(grad(f)).is_zero());
        const SymVec3 v{gen::poly(rng), gen::poly(rng), gen::poly(rng)};
        CHECK(divergence(curl(v)).is_zero());
    }

    // curl (0, 0, -t x) = (0, t, 0)
    const SymVec3 a{SymScalar{}, SymScalar{}, -(T * X)};
    CHECK(curl(a) == SymVec3{SymScalar{}, T, SymScalar{}});
}

TEST_CASE("matrix divergence semantics") {
    // constant matrix: divergence vanishes for either time sign
    SymMat4 constant;
    constant(0, 0) = k(3);
    constant(2, 1) = k(-7);
    CHECK(matrix_divergence(constant, TimeSign::minus).is_zero());
    CHECK(matrix_divergence(constant, TimeSign::plus).is_zero());

    // the Maxwell field E = (0,0,x), B = (0,t,0) is source-free
    const Faraday<SymScalar> f({SymScalar{}, SymScalar{}, X}, {SymScalar{}, T, SymScalar{}});
    CHECK(matrix_divergence(f.matrix(), TimeSign::minus).is_zero());

    // Leibniz rule and ring axioms at suite scale
    const SuiteResult r = suite_symfield_ring(42, 30);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
}

TEST_CASE("wave operator") {
    CHECK(wave_op(T * T + X * X + Y * Y + Z * Z) == k(-4));
    CHECK(wave_op(SymScalar::cosine(1, 0, 0, 1)).is_zero());  // light-like phase
    CHECK(wave_op(k(5)).is_zero());
}

TEST_CASE("operator-matrix square equals the Laplacian") {
    const SuiteResult r = suite_operator_square(42, 30);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
}

TEST_CASE("evaluation, exact and approximate") {
    const SymScalar f = X * X + T;
    CHECK(f.eval_exact({Rational(1), Rational(2), Rational(0), Rational(0)}) ==
          CQ(Rational(5)));

    const SymScalar c = SymScalar::cosine(1, 0, 0, 1);  // cos(z - t)
    // phase vanishes at t = z = 1: exact value is 1
    CHECK(c.eval_exact({Rational(1), Rational(0), Rational(0), Rational(1)}) == CQ::one());
    // nonzero phase: exact evaluation refuses
    CHECK_THROWS_AS(c.eval_exact({Rational(0), Rational(0), Rational(0), Rational(1)}),
                    std::domain_error);
    // ... but approximate evaluation gives cos(1)
    const CD approx = c.eval({0.0, 0.0, 0.0, 1.0});
    CHECK(approx.re == Catch::Approx(0.5403023058681398).epsilon(1e-12));
    CHECK(approx.im == 0.0);

    // a zero-coefficient trig atom does not poison exact evaluation
    const SymScalar g = (X - X) * c + f;
    CHECK(g.eval_exact({Rational(0), Rational(1), Rational(0), Rational(3)}) ==
          CQ(Rational(1)));
}

TEST_CASE("term budget guardrail") {
    // two scattered ~1100-term polynomials whose product overflows the budget
    auto big = [](unsigned salt) {
        SymScalar s;
        std::uint64_t state = 88172645463325252ull + salt;
        auto next = [&state] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int i = 0; i < 1100; ++i) {
            const unsigned a = static_cast<unsigned>(next() % 2000);
            const unsigned b = static_cast<unsigned>(next() % 2000);
            s = s + SymScalar::monomial(CQ(Rational(1 + i % 7)), {a, b, 0, 0});
        }
        return s;
    };
    const SymScalar p = big(1), q = big(2);
    CHECK_THROWS_AS(p * q, resource_error);
}

TEST_CASE("oversized exponents are rejected at construction") {
    CHECK_THROWS_AS(SymScalar::monomial(CQ::one(), {5000, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("deterministic human-readable form") {
    const SymScalar f = k(2) * X * Y - T * T +
                        SymScalar::from_rational(Rational(1, 2)) * SymScalar::cosine(1, 0, 0, 1);
    CHECK(f.str() == "2*x*y - t^2 + 1/2*cos(t - z)");
    CHECK(SymScalar{}.str() == "0");
    CHECK(SymScalar::imag_unit().str() == "i");
}

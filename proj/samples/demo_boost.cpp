// Small usage example: build a Faraday matrix for a boost along x combined
// with a rotation about z, exponentiate it in closed form, and verify the
// result is a proper Lorentz transformation.

#include <cstdio>

#include "maxmat/faraday.hpp"

int main() {
    using namespace maxmat;

    const Faraday<CD> f({CD(0.8), CD(0.0), CD(0.0)}, {CD(0.0), CD(0.0), CD(0.4)});
    const CD lambda = eigenvalue(f.complexify());
    const Mat4<CD> L = exp_matrix(f);

    std::printf("lambda = %.6f %+.6fi\n", lambda.re, lambda.im);
    std::printf("exp(F) =\n");
    for (std::size_t i = 0; i < 4; ++i)
        std::printf("  [ %10.6f %10.6f %10.6f %10.6f ]\n", L(i, 0).re, L(i, 1).re, L(i, 2).re,
                    L(i, 3).re);

    const Mat4<CD> eta = minkowski_metric<CD>();
    std::printf("|L^t eta L - eta|_max = %.3g\n", max_abs_diff(L.transpose() * eta * L, eta));
    std::printf("|det L - 1|           = %.3g\n", abs(det4(L) - CD(1.0)));
    std::printf("series check          = %.3g\n",
                max_abs_diff(L, mat_exp_series(f.matrix(), 40)));
    return 0;
}

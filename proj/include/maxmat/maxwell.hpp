#pragma once

#include "maxmat/faraday.hpp"
#include "maxmat/symfield.hpp"

namespace maxmat {

using SymEMField = EMField<SymScalar>;
using SymFaraday = Faraday<SymScalar>;

/// Four-vector potential (phi, A).
struct FourPotential {
    SymScalar phi;
    SymVec3 A;
};

/// B = curl A, E = -dt A - grad phi. Fields built this way satisfy the
/// homogeneous Maxwell equations identically.
inline SymEMField derive_fields(const FourPotential& p) {
    return {-(dt(p.A) + grad(p.phi)), curl(p.A)};
}

/// Sources are defined by the field (rho := div E, J := curl B - dt E);
/// the homogeneous residuals and charge conservation are checks.
struct MaxwellReport {
    SymScalar rho;
    SymVec3 current;
    SymVec3 faraday_residual;   // curl E + dt B
    SymScalar div_b_residual;   // div B
    SymScalar charge_residual;  // dt rho + div J
    bool homogeneous_ok = false;
    bool charge_ok = false;
};

inline MaxwellReport maxwell_residuals(const SymEMField& f) {
    MaxwellReport r;
    r.rho = divergence(f.E);
    r.current = curl(f.B) - dt(f.E);
    r.faraday_residual = curl(f.E) + dt(f.B);
    r.div_b_residual = divergence(f.B);
    r.charge_residual = dt(r.rho) + divergence(r.current);
    r.homogeneous_ok = r.faraday_residual.is_zero() && r.div_b_residual.is_zero();
    r.charge_ok = r.charge_residual.is_zero();
    return r;
}

/// The five matrix forms whose divergence against (-dt, grad) expresses
/// Maxwell's equations in one shot.
enum class DivergenceForm {
    field,          // F itself: always returns (rho, J) by definition
    hodge_dual,     // F*: returns zero exactly when the field is Maxwell
    complexified,   // cF
    conjugated,     // entrywise conjugate of cF
    operator_dual,  // operator matrix (dt - cbar_nabla) applied to (0, -E-iB)
};

inline constexpr std::array<DivergenceForm, 5> kDivergenceForms{
    DivergenceForm::field, DivergenceForm::hodge_dual, DivergenceForm::complexified,
    DivergenceForm::conjugated, DivergenceForm::operator_dual};

inline const char* divergence_form_name(DivergenceForm v) {
    switch (v) {
        case DivergenceForm::field: return "field";
        case DivergenceForm::hodge_dual: return "hodge_dual";
        case DivergenceForm::complexified: return "complexified";
        case DivergenceForm::conjugated: return "conjugated";
        case DivergenceForm::operator_dual: return "operator_dual";
    }
    return "?";
}

/// The four-current produced by one of the divergence forms. For a Maxwell
/// field every form except hodge_dual returns exactly (rho, J), and
/// hodge_dual returns zero.
inline SymVec4 divergence_form_current(const SymEMField& f, DivergenceForm v) {
    const SymFaraday fm(f.E, f.B);
    switch (v) {
        case DivergenceForm::field:
            return matrix_divergence(fm.matrix(), TimeSign::minus);
        case DivergenceForm::hodge_dual:
            return matrix_divergence(fm.hodge().matrix(), TimeSign::minus);
        case DivergenceForm::complexified:
            return matrix_divergence(fm.complexify(Orientation::direct).matrix(),
                                     TimeSign::minus);
        case DivergenceForm::conjugated:
            return matrix_divergence(fm.complexify(Orientation::conjugate).matrix(),
                                     TimeSign::minus);
        case DivergenceForm::operator_dual: {
            const SymScalar i = SymScalar::imag_unit();
            SymVec4 g;
            for (std::size_t k = 0; k < 3; ++k) g[k + 1] = -(f.E[k] + i * f.B[k]);
            return wave_factor(TimeSign::minus, g);
        }
    }
    throw std::invalid_argument("divergence_form_current: unknown variant");
}

/// Macroscopic form over four fields: divergence of
/// [[0, (D+iB)^t],[D+iB, x(-i(E+iH))]] against (-dt, grad). Real part is
/// (div D, curl H - dt D); imaginary part is (div B, -dt B - curl E).
inline SymVec4 macroscopic_current(const SymVec3& E, const SymVec3& B, const SymVec3& D,
                                   const SymVec3& H) {
    const SymScalar i = SymScalar::imag_unit();
    SymVec3 a, c;
    for (std::size_t k = 0; k < 3; ++k) {
        a[k] = D[k] + i * B[k];
        c[k] = -(i * (E[k] + i * H[k]));
    }
    return matrix_divergence(block_matrix(a, c), TimeSign::minus);
}

/// The two equivalent matrix forms of the potential equation, their common
/// value (g, -E - iB), and the gauge scalar g = dt phi + div A.
struct PotentialForms {
    SymVec4 matrix_form;    // (phi I + block(A, -iA)) against (+dt, grad)
    SymVec4 operator_form;  // (dt + cbar_nabla) applied to (phi, A)
    SymScalar gauge;
    SymVec4 complex_field;  // (gauge, -E - iB)
};

inline PotentialForms potential_forms(const FourPotential& p) {
    PotentialForms out;
    const SymScalar i = SymScalar::imag_unit();

    SymMat4 m = block_matrix(p.A, -(i * p.A));
    for (std::size_t d = 0; d < 4; ++d) m(d, d) = m(d, d) + p.phi;
    out.matrix_form = matrix_divergence(m, TimeSign::plus);

    out.operator_form = wave_factor(TimeSign::plus, SymVec4(p.phi, p.A));

    out.gauge = dt(p.phi) + divergence(p.A);
    const SymEMField f = derive_fields(p);
    out.complex_field = SymVec4(out.gauge, -(f.E + i * f.B));
    return out;
}

namespace detail {
inline void require_maxwell(const MaxwellReport& r, const char* who) {
    if (!r.homogeneous_ok)
        throw std::domain_error(std::string(who) +
                                ": field does not satisfy the homogeneous Maxwell equations");
}
}  // namespace detail

/// Residual of the decoupled wave identity: the wave operator applied to
/// (0, -E - iB) minus (dt rho + div J, grad rho + dt J - i curl J). The
/// time component is charge conservation. Requires a Maxwell field.
inline SymVec4 wave_identity_residual(const SymEMField& f) {
    const MaxwellReport r = maxwell_residuals(f);
    detail::require_maxwell(r, "wave_identity_residual");
    const SymScalar i = SymScalar::imag_unit();
    SymVec4 lhs_arg;
    for (std::size_t k = 0; k < 3; ++k) lhs_arg[k + 1] = -(f.E[k] + i * f.B[k]);
    const SymVec4 lhs = wave_op(lhs_arg);
    const SymVec3 gr = grad(r.rho);
    const SymVec3 dj = dt(r.current);
    const SymVec3 cj = curl(r.current);
    SymVec4 rhs(dt(r.rho) + divergence(r.current),
                SymVec3{gr[0] + dj[0] - i * cj[0], gr[1] + dj[1] - i * cj[1],
                        gr[2] + dj[2] - i * cj[2]});
    return lhs - rhs;
}

/// Wave equation for the potential: wave(phi, A) = (rho, J) + (dt g, -grad g)
/// where g is the gauge scalar. The residual is identically zero; under the
/// covariant gauge g = 0 the extra vector vanishes.
struct PotentialWave {
    SymVec4 residual;
    SymVec4 gauge_vector;  // (dt g, -grad g)
    SymScalar gauge;
};

inline PotentialWave potential_wave(const FourPotential& p) {
    PotentialWave out;
    out.gauge = dt(p.phi) + divergence(p.A);
    out.gauge_vector = SymVec4(dt(out.gauge), -grad(out.gauge));
    const SymEMField f = derive_fields(p);
    const MaxwellReport r = maxwell_residuals(f);
    const SymVec4 wave = wave_op(SymVec4(p.phi, p.A));
    out.residual = wave - SymVec4(r.rho, r.current) - out.gauge_vector;
    return out;
}

/// Lorentz-force law as a matrix identity: the divergence of the
/// stress-energy matrix T = (1/2) cF cFbar against (-dt, grad) equals
/// F (rho, J). Returns the residual (zero for Maxwell fields).
inline SymVec4 stress_divergence_residual(const SymEMField& f) {
    const MaxwellReport r = maxwell_residuals(f);
    detail::require_maxwell(r, "stress_divergence_residual");
    const SymFaraday fm(f.E, f.B);
    const SymVec4 lhs = matrix_divergence(fm.stress_energy(), TimeSign::minus);
    const SymVec4 rhs = fm.matrix() * SymVec4(r.rho, r.current);
    return lhs - rhs;
}

/// Every identity check for one field configuration. All flags come from
/// exact zero tests, never tolerances.
struct FieldCheck {
    MaxwellReport report;
    std::array<SymVec4, 5> currents;  // indexed like kDivergenceForms
    bool variants_agree = false;      // all non-hodge forms return (rho, J)
    bool hodge_current_zero = false;
    // Present only when the homogeneous equations hold (their precondition).
    std::optional<SymVec4> wave_residual;
    std::optional<SymVec4> lorentz_residual;

    bool pass() const {
        bool ok = report.homogeneous_ok && report.charge_ok && variants_agree &&
                  hodge_current_zero;
        if (wave_residual) ok = ok && wave_residual->is_zero();
        if (lorentz_residual) ok = ok && lorentz_residual->is_zero();
        return ok;
    }
};

inline FieldCheck check_field(const SymEMField& f) {
    FieldCheck c;
    c.report = maxwell_residuals(f);
    for (std::size_t i = 0; i < kDivergenceForms.size(); ++i)
        c.currents[i] = divergence_form_current(f, kDivergenceForms[i]);
    const SymVec4& reference = c.currents[0];  // the field form is (rho, J) by definition
    c.variants_agree = c.currents[2] == reference && c.currents[3] == reference &&
                       c.currents[4] == reference;
    c.hodge_current_zero = c.currents[1].is_zero();
    if (c.report.homogeneous_ok) {
        c.wave_residual = wave_identity_residual(f);
        c.lorentz_residual = stress_divergence_residual(f);
    }
    return c;
}

}  // namespace maxmat

#pragma once

#include <optional>

#include <json.hpp>

#include "maxmat/maxwell.hpp"

namespace maxmat::io {

using json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from_json(const json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument(std::string(what) +
                                ": expected an integer or a \"p/q\" string");
}

inline double number_from_json(const json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return static_cast<double>(parse_rational(j.get<std::string>()));
    throw std::invalid_argument(std::string(what) + ": expected a number or \"p/q\" string");
}

inline SymScalar poly_terms_from_json(const json& arr, const char* what) {
    if (!arr.is_array())
        throw std::invalid_argument(std::string(what) + ": expected an array of terms");
    SymScalar s;
    for (const json& term : arr) {
        if (!term.is_object() || !term.contains("exp"))
            throw std::invalid_argument(std::string(what) + ": term must have \"exp\"");
        const json& je = term["exp"];
        if (!je.is_array() || je.size() != 4)
            throw std::invalid_argument(std::string(what) + ": \"exp\" must have 4 entries");
        std::array<unsigned, 4> exps{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (!je[i].is_number_integer() || je[i].get<long long>() < 0)
                throw std::invalid_argument(std::string(what) +
                                            ": exponents must be nonnegative integers");
            exps[i] = static_cast<unsigned>(je[i].get<long long>());
        }
        Rational re = term.contains("re") ? rational_from_json(term["re"], what) : Rational(0);
        Rational im = term.contains("im") ? rational_from_json(term["im"], what) : Rational(0);
        s = s + SymScalar::monomial(CQ(re, im), exps);
    }
    return s;
}

inline json poly_terms_to_json(const SymScalar::Poly& p) {
    json arr = json::array();
    for (const auto& [key, coeff] : p) {
        json term;
        term["exp"] = {sym_detail::exponent_of(key, Var::t), sym_detail::exponent_of(key, Var::x),
                       sym_detail::exponent_of(key, Var::y), sym_detail::exponent_of(key, Var::z)};
        term["re"] = format_rational(coeff.re);
        term["im"] = format_rational(coeff.im);
        arr.push_back(std::move(term));
    }
    return arr;
}

}  // namespace detail

inline json to_json(const SymScalar& s) {
    json j;
    j["poly_terms"] = detail::poly_terms_to_json(s.polynomial_part());
    json trig = json::array();
    for (const auto& [phase, parts] : s.trig_part()) {
        const json phase_json = {format_rational(phase.omega()), format_rational(phase.k(0)),
                                 format_rational(phase.k(1)), format_rational(phase.k(2))};
        if (!parts.cos_part.empty())
            trig.push_back({{"kind", "cos"},
                            {"phase", phase_json},
                            {"poly", detail::poly_terms_to_json(parts.cos_part)}});
        if (!parts.sin_part.empty())
            trig.push_back({{"kind", "sin"},
                            {"phase", phase_json},
                            {"poly", detail::poly_terms_to_json(parts.sin_part)}});
    }
    j["trig_terms"] = std::move(trig);
    return j;
}

inline SymScalar symscalar_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("symbolic scalar: expected an object");
    SymScalar s;
    if (j.contains("poly_terms"))
        s = s + detail::poly_terms_from_json(j["poly_terms"], "poly_terms");
    if (j.contains("trig_terms")) {
        const json& arr = j["trig_terms"];
        if (!arr.is_array())
            throw std::invalid_argument("trig_terms: expected an array");
        for (const json& term : arr) {
            if (!term.is_object() || !term.contains("kind") || !term.contains("phase") ||
                !term.contains("poly"))
                throw std::invalid_argument(
                    "trig term: needs \"kind\", \"phase\" and \"poly\"");
            const std::string kind = term["kind"].get<std::string>();
            if (kind != "cos" && kind != "sin")
                throw std::invalid_argument("trig term: kind must be \"cos\" or \"sin\"");
            const json& jp = term["phase"];
            if (!jp.is_array() || jp.size() != 4)
                throw std::invalid_argument("trig term: phase must have 4 entries");
            std::array<Rational, 4> ph;
            for (std::size_t i = 0; i < 4; ++i)
                ph[i] = detail::rational_from_json(jp[i], "phase");
            if (ph[0] == 0 && ph[1] == 0 && ph[2] == 0 && ph[3] == 0)
                throw std::invalid_argument("trig term: zero phase is not allowed");
            const SymScalar atom = kind == "cos"
                                       ? SymScalar::cosine(ph[0], ph[1], ph[2], ph[3])
                                       : SymScalar::sine(ph[0], ph[1], ph[2], ph[3]);
            s = s + detail::poly_terms_from_json(term["poly"], "trig poly") * atom;
        }
    }
    return s;
}

inline json to_json(const SymVec3& v) {
    return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}
inline json to_json(const SymVec4& v) {
    return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2]), to_json(v[3])});
}

inline SymVec3 symvec3_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument(std::string(what) + ": expected an array of 3 components");
    return {symscalar_from_json(j[0]), symscalar_from_json(j[1]), symscalar_from_json(j[2])};
}

struct FieldInput {
    SymEMField field;
    std::optional<SymVec3> D;
    std::optional<SymVec3> H;
};

inline FieldInput field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("E") || !j.contains("B"))
        throw std::invalid_argument("field file: expected an object with \"E\" and \"B\"");
    FieldInput in;
    in.field.E = symvec3_from_json(j["E"], "E");
    in.field.B = symvec3_from_json(j["B"], "B");
    if (j.contains("D")) in.D = symvec3_from_json(j["D"], "D");
    if (j.contains("H")) in.H = symvec3_from_json(j["H"], "H");
    if (in.D.has_value() != in.H.has_value())
        throw std::invalid_argument("field file: \"D\" and \"H\" must appear together");
    return in;
}

inline json to_json(const SymEMField& f) {
    return {{"E", to_json(f.E)}, {"B", to_json(f.B)}};
}

inline FourPotential potential_from_json(const json& j) {
    if (!j.is_object() || !j.contains("phi") || !j.contains("A"))
        throw std::invalid_argument("potential file: expected an object with \"phi\" and \"A\"");
    return {symscalar_from_json(j["phi"]), symvec3_from_json(j["A"], "A")};
}

inline json to_json(const FourPotential& p) {
    return {{"phi", to_json(p.phi)}, {"A", to_json(p.A)}};
}

inline json to_json(const MaxwellReport& r) {
    json j;
    j["sources"] = {{"rho", to_json(r.rho)}, {"J", to_json(r.current)}};
    j["residuals"] = {{"faraday_law", to_json(r.faraday_residual)},
                      {"div_B", to_json(r.div_b_residual)},
                      {"charge_conservation", to_json(r.charge_residual)}};
    j["flags"] = {{"homogeneous", r.homogeneous_ok}, {"charge_conserved", r.charge_ok}};
    return j;
}

inline json to_json(const FieldCheck& c) {
    json j = to_json(c.report);
    json currents;
    for (std::size_t i = 0; i < kDivergenceForms.size(); ++i)
        currents[divergence_form_name(kDivergenceForms[i])] = to_json(c.currents[i]);
    j["divergence_currents"] = std::move(currents);
    j["flags"]["variants_agree"] = c.variants_agree;
    j["flags"]["hodge_current_zero"] = c.hodge_current_zero;
    if (c.wave_residual) j["wave_identity_residual"] = to_json(*c.wave_residual);
    if (c.lorentz_residual) j["lorentz_law_residual"] = to_json(*c.lorentz_residual);
    j["flags"]["pass"] = c.pass();
    return j;
}

namespace detail {

inline CQ cq_from_json(const json& j, const char* what) {
    if (j.is_object()) {
        Rational re = j.contains("re") ? rational_from_json(j["re"], what) : Rational(0);
        Rational im = j.contains("im") ? rational_from_json(j["im"], what) : Rational(0);
        return CQ(re, im);
    }
    return CQ(rational_from_json(j, what));
}

inline CD cd_from_json(const json& j, const char* what) {
    if (j.is_object()) {
        double re = j.contains("re") ? number_from_json(j["re"], what) : 0.0;
        double im = j.contains("im") ? number_from_json(j["im"], what) : 0.0;
        return CD(re, im);
    }
    return CD(number_from_json(j, what));
}

template <typename Entry>
auto matrix_from_json(const json& j, Entry entry) {
    using C = decltype(entry(json{}, ""));
    if (!j.is_object() || !j.contains("matrix"))
        throw std::invalid_argument("matrix file: expected an object with \"matrix\"");
    const json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != 4)
        throw std::invalid_argument("matrix file: expected 4 rows");
    Mat4<C> m;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 4)
            throw std::invalid_argument("matrix file: each row needs 4 entries");
        for (std::size_t k = 0; k < 4; ++k) m(i, k) = entry(rows[i][k], "matrix entry");
    }
    return m;
}

}  // namespace detail

inline Mat4<CQ> matrix_exact_from_json(const json& j) {
    return detail::matrix_from_json(j, [](const json& e, const char* w) {
        return detail::cq_from_json(e, w);
    });
}

inline Mat4<CD> matrix_approx_from_json(const json& j) {
    return detail::matrix_from_json(j, [](const json& e, const char* w) {
        return detail::cd_from_json(e, w);
    });
}

inline json to_json(const CQ& z) {
    return {{"re", format_rational(z.re)}, {"im", format_rational(z.im)}};
}
inline json to_json(const CD& z) { return {{"re", z.re}, {"im", z.im}}; }

template <typename C>
json matrix_to_json(const Mat4<C>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < 4; ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return {{"matrix", std::move(rows)}};
}

/// Constant E,B values (numbers, not fields) for the exponential command.
inline EMField<CD> eb_values_from_json(const json& j) {
    if (!j.is_object() || !j.contains("E") || !j.contains("B"))
        throw std::invalid_argument("values file: expected an object with \"E\" and \"B\"");
    auto vec = [](const json& a, const char* what) {
        if (!a.is_array() || a.size() != 3)
            throw std::invalid_argument(std::string(what) + ": expected 3 numbers");
        return Vec3<CD>{CD(detail::number_from_json(a[0], what)),
                        CD(detail::number_from_json(a[1], what)),
                        CD(detail::number_from_json(a[2], what))};
    };
    return {vec(j["E"], "E"), vec(j["B"], "B")};
}

}  // namespace maxmat::io

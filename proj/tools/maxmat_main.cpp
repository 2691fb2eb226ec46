// maxmat: verify Maxwell-equation identities over exact symbolic fields,
// compute closed-form Lorentz exponentials, and decompose 4x4 matrices over
// the paravector basis.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxmat/json_io.hpp"
#include "maxmat/selftest.hpp"

namespace {

using namespace maxmat;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    std::string mode = "exact";
    bool mode_given = false;
    double tolerance = 1e-10;
    bool emit_json = false;
};

io::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    io::json j;
    in >> j;
    return j;
}

std::string sym_vec3_str(const SymVec3& v) {
    return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}
std::string sym_vec4_str(const SymVec4& v) {
    return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ", " + v[3].str() + ")";
}

void print_check(const char* label, bool ok) {
    std::printf("  %-32s %s\n", label, ok ? "PASS" : "FAIL");
}

struct FieldCheckPrinter {
    const FieldCheck& ck;
    bool print(bool verbose_sources = true) const {
        if (verbose_sources) {
            std::printf("rho = %s\n", ck.report.rho.str().c_str());
            std::printf("J   = %s\n", sym_vec3_str(ck.report.current).c_str());
        }
        print_check("homogeneous equations", ck.report.homogeneous_ok);
        print_check("charge conservation", ck.report.charge_ok);
        print_check("divergence forms agree", ck.variants_agree);
        print_check("hodge-dual current zero", ck.hodge_current_zero);
        if (ck.wave_residual) print_check("wave identity", ck.wave_residual->is_zero());
        if (ck.lorentz_residual) print_check("Lorentz law", ck.lorentz_residual->is_zero());
        return ck.pass();
    }
};

int cmd_verify_potential(const RunConfig& cfg, const std::string& path) {
    const FourPotential pot = io::potential_from_json(load_json(path));
    const SymEMField f = derive_fields(pot);
    const FieldCheck ck = check_field(f);
    const PotentialForms forms = potential_forms(pot);
    const PotentialWave wave = potential_wave(pot);
    const bool duality_ok =
        forms.matrix_form == forms.operator_form && forms.matrix_form == forms.complex_field;
    const bool wave_ok = wave.residual.is_zero();
    const bool pass = ck.pass() && duality_ok && wave_ok;

    if (cfg.emit_json) {
        io::json j;
        j["potential"] = io::to_json(pot);
        j["derived_field"] = io::to_json(f);
        j["gauge"] = io::to_json(forms.gauge);
        j["field_check"] = io::to_json(ck);
        j["potential_forms"] = {{"matrix_form", io::to_json(forms.matrix_form)},
                                {"operator_form", io::to_json(forms.operator_form)},
                                {"agree", duality_ok}};
        j["potential_wave"] = {{"residual", io::to_json(wave.residual)},
                               {"gauge_vector", io::to_json(wave.gauge_vector)},
                               {"zero", wave_ok}};
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("phi = %s\n", pot.phi.str().c_str());
        std::printf("A   = %s\n", sym_vec3_str(pot.A).c_str());
        std::printf("E   = %s\n", sym_vec3_str(f.E).c_str());
        std::printf("B   = %s\n", sym_vec3_str(f.B).c_str());
        std::printf("g   = %s\n", forms.gauge.str().c_str());
        FieldCheckPrinter{ck}.print();
        print_check("potential duality", duality_ok);
        print_check("potential wave equation", wave_ok);
        std::printf("result: %s\n", pass ? "PASS" : "FAIL");
    }
    return pass ? kExitPass : kExitIdentityFailure;
}

int cmd_verify_field(const RunConfig& cfg, const std::string& path) {
    const io::FieldInput in = io::field_from_json(load_json(path));
    const FieldCheck ck = check_field(in.field);
    std::optional<SymVec4> macro;
    if (in.D)
        macro = macroscopic_current(in.field.E, in.field.B, *in.D, *in.H);
    const bool pass = ck.pass();

    if (cfg.emit_json) {
        io::json j;
        j["field"] = io::to_json(in.field);
        j["field_check"] = io::to_json(ck);
        if (macro) j["macroscopic_current"] = io::to_json(*macro);
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("E = %s\n", sym_vec3_str(in.field.E).c_str());
        std::printf("B = %s\n", sym_vec3_str(in.field.B).c_str());
        FieldCheckPrinter{ck}.print();
        if (macro)
            std::printf("macroscopic current = %s\n", sym_vec4_str(*macro).c_str());
        std::printf("result: %s\n", pass ? "PASS" : "FAIL");
    }
    return pass ? kExitPass : kExitIdentityFailure;
}

int cmd_exp(const RunConfig& cfg, const std::string& path) {
    if (cfg.mode_given && cfg.mode == "exact")
        throw std::invalid_argument(
            "exp computes transcendental values and requires approximate mode");
    const EMField<CD> eb = io::eb_values_from_json(load_json(path));
    const Faraday<CD> f(eb);
    const CD lambda = eigenvalue(f.complexify());
    const Mat4<CD> L = exp_matrix(f);
    const Mat4<CD> eta = minkowski_metric<CD>();
    const double metric_dev = max_abs_diff(L.transpose() * eta * L, eta);
    const double det_dev = abs(det4(L) - CD(1.0));
    double imag_dev = 0;
    for (const auto& z : L.e) imag_dev = std::max(imag_dev, std::abs(z.im));
    const bool pass = metric_dev <= cfg.tolerance && det_dev <= cfg.tolerance;

    if (cfg.emit_json) {
        io::json j;
        j["lambda"] = io::to_json(lambda);
        j["matrix"] = io::matrix_to_json(L)["matrix"];
        j["deviations"] = {{"metric", metric_dev}, {"det", det_dev}, {"imag", imag_dev}};
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("lambda = %.12g %+.12gi\n", lambda.re, lambda.im);
        std::printf("exp(F) =\n");
        for (std::size_t i = 0; i < 4; ++i)
            std::printf("  [ %14.10f %14.10f %14.10f %14.10f ]\n", L(i, 0).re, L(i, 1).re,
                        L(i, 2).re, L(i, 3).re);
        std::printf("|L^t eta L - eta|_max = %.3g\n", metric_dev);
        std::printf("|det L - 1|           = %.3g\n", det_dev);
        std::printf("max |imag|            = %.3g\n", imag_dev);
        std::printf("result: %s\n", pass ? "PASS" : "FAIL");
    }
    return pass ? kExitPass : kExitIdentityFailure;
}

int cmd_decompose(const RunConfig& cfg, const std::string& path) {
    const io::json j = load_json(path);
    if (cfg.mode == "approx") {
        const Mat4<CD> m = io::matrix_approx_from_json(j);
        const Biparavector<double> bp = decompose(m);
        const double residual = max_abs_diff(to_matrix(bp), m);
        const bool pass = residual <= cfg.tolerance;
        if (cfg.emit_json) {
            io::json out;
            io::json rows = io::json::array();
            for (const auto& row : bp.a) {
                io::json r = io::json::array();
                for (const auto& c : row) r.push_back(io::to_json(c));
                rows.push_back(std::move(r));
            }
            out["coefficients"] = std::move(rows);
            out["roundtrip_residual"] = residual;
            out["pass"] = pass;
            std::cout << out.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t k = 0; k < 4; ++k)
                    std::printf("a[%zu][%zu] = %.12g %+.12gi\n", i, k, bp.a[i][k].re,
                                bp.a[i][k].im);
            std::printf("roundtrip residual = %.3g\n", residual);
            std::printf("result: %s\n", pass ? "PASS" : "FAIL");
        }
        return pass ? kExitPass : kExitIdentityFailure;
    }
    const Mat4<CQ> m = io::matrix_exact_from_json(j);
    const Biparavector<Rational> bp = decompose(m);
    const bool pass = to_matrix(bp) == m;
    if (cfg.emit_json) {
        io::json out;
        io::json rows = io::json::array();
        for (const auto& row : bp.a) {
            io::json r = io::json::array();
            for (const auto& c : row) r.push_back(io::to_json(c));
            rows.push_back(std::move(r));
        }
        out["coefficients"] = std::move(rows);
        out["roundtrip_residual"] = pass ? "0" : "nonzero";
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k) {
                const Rational& im = bp.a[i][k].im;
                const std::string im_str =
                    (im < 0 ? "" : "+") + format_rational(im);
                std::printf("a[%zu][%zu] = %s %si\n", i, k,
                            format_rational(bp.a[i][k].re).c_str(), im_str.c_str());
            }
        std::printf("roundtrip residual = %s\n", pass ? "0" : "nonzero");
        std::printf("result: %s\n", pass ? "PASS" : "FAIL");
    }
    return pass ? kExitPass : kExitIdentityFailure;
}

int cmd_selftest(const RunConfig& cfg, std::uint64_t seed, int count) {
    if (count == 0) {
        if (cfg.emit_json) {
            io::json j{{"seed", seed}, {"count", 0}, {"suites", io::json::array()}, {"pass", true},
                       {"warning", "count is 0, no trials run"}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("selftest seed=%llu count=0\n", static_cast<unsigned long long>(seed));
            std::printf("warning: count is 0, no trials run\n");
        }
        return kExitPass;
    }
    const auto results = run_selftest({seed, count});
    bool all_ok = true;
    if (cfg.emit_json) {
        io::json suites = io::json::array();
        for (const auto& r : results) {
            all_ok = all_ok && r.ok();
            suites.push_back({{"name", r.name},
                              {"trials", r.trials},
                              {"failures", r.failures},
                              {"first_failure", r.first_failure}});
        }
        io::json j{{"seed", seed}, {"count", count}, {"suites", std::move(suites)},
                   {"pass", all_ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("selftest seed=%llu count=%d\n", static_cast<unsigned long long>(seed), count);
        for (const auto& r : results) {
            std::printf("suite %-24s %d/%d passed\n", r.name.c_str(), r.trials - r.failures,
                        r.trials);
            if (!r.ok()) {
                std::printf("  counterexample: %s\n", r.first_failure.c_str());
                all_ok = false;
            }
        }
        std::printf("%s\n", all_ok ? "all suites passed" : "selftest FAILED");
    }
    return all_ok ? kExitPass : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix and biquaternion checks for Maxwell's equations"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--mode", cfg.mode, "Arithmetic mode (default exact)")
        ->check(CLI::IsMember({"exact", "approx"}));
    app.add_option("--tol", cfg.tolerance, "Comparison tolerance for approximate mode")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", cfg.emit_json, "Emit a JSON report on stdout");

    std::string path;
    auto* verify_potential = app.add_subcommand(
        "verify-potential", "Check every identity for a four-potential file");
    verify_potential->add_option("file", path, "FourPotential JSON file")->required();
    auto* verify_field =
        app.add_subcommand("verify-field", "Check every identity for an E,B field file");
    verify_field->add_option("file", path, "Field JSON file")->required();
    auto* exp_cmd = app.add_subcommand(
        "exp", "Closed-form Lorentz transformation e^F for constant E,B values");
    exp_cmd->add_option("file", path, "Values JSON file")->required();
    auto* decompose_cmd = app.add_subcommand(
        "decompose", "Coefficients of a 4x4 matrix over the paravector product basis");
    decompose_cmd->add_option("file", path, "Matrix JSON file")->required();

    std::uint64_t seed = 42;
    int count = 100;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the randomized property suites");
    selftest_cmd->add_option("--seed", seed, "PRNG seed (default 42)");
    selftest_cmd->add_option("--count", count, "Trials per suite (default 100)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }
    cfg.mode_given = app.count("--mode") > 0;

    try {
        if (verify_potential->parsed()) return cmd_verify_potential(cfg, path);
        if (verify_field->parsed()) return cmd_verify_field(cfg, path);
        if (exp_cmd->parsed()) return cmd_exp(cfg, path);
        if (decompose_cmd->parsed()) return cmd_decompose(cfg, path);
        if (selftest_cmd->parsed()) return cmd_selftest(cfg, seed, count);
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

// End-to-end checks of the command-line tool: exit-code contract, report
// content, selftest determinism, and the resource guardrail.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "maxmat/json_io.hpp"

#ifndef MAXMAT_CLI_PATH
#error "MAXMAT_CLI_PATH must be defined"
#endif
#ifndef MAXMAT_SAMPLES_DIR
#error "MAXMAT_SAMPLES_DIR must be defined"
#endif

namespace {

int g_failures = 0;

#define EXPECT(cond)                                                          \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);       \
            ++g_failures;                                                     \
        }                                                                     \
    } while (0)

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/maxmat_cli_out.txt";
    const std::string cmd =
        std::string("'") + MAXMAT_CLI_PATH + "' " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::string sample(const std::string& name) {
    return std::string("'") + MAXMAT_SAMPLES_DIR + "/" + name + "'";
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

int main() {
    using maxmat::CQ;
    using maxmat::Rational;
    using maxmat::SymScalar;

    // verify-potential: static charge, report shows rho = 2
    {
        const RunResult r = run_cli("verify-potential " + sample("potential_static.json"));
        EXPECT(r.exit_code == 0);
        EXPECT(contains(r.output, "rho = 2"));
        EXPECT(contains(r.output, "result: PASS"));
    }
    // verify-potential: JSON report round-trips and passes
    {
        const RunResult r =
            run_cli("--json verify-potential " + sample("potential_tx.json"));
        EXPECT(r.exit_code == 0);
        const auto j = maxmat::io::json::parse(r.output);
        EXPECT(j["pass"] == true);
        EXPECT(j["potential_forms"]["agree"] == true);
        EXPECT(maxmat::io::symscalar_from_json(j["field_check"]["sources"]["rho"]).is_zero());
    }
    // malformed JSON: input error
    {
        write_file("/tmp/maxmat_bad.json", "{ definitely not json");
        const RunResult r = run_cli("verify-potential '/tmp/maxmat_bad.json'");
        EXPECT(r.exit_code == 2);
    }
    // missing file: input error
    {
        const RunResult r = run_cli("verify-potential '/tmp/does_not_exist.json'");
        EXPECT(r.exit_code == 2);
    }
    // term-budget guardrail: resource exit code
    {
        SymScalar phi;
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto next = [&state] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int i = 0; i < 1100; ++i) {
            const unsigned a = static_cast<unsigned>(next() % 2000);
            const unsigned b = static_cast<unsigned>(next() % 2000);
            const unsigned c = static_cast<unsigned>(next() % 2000);
            phi = phi + SymScalar::monomial(CQ(Rational(1 + i % 5)), {0, a, b, c});
        }
        maxmat::FourPotential pot{phi, {SymScalar{}, SymScalar{}, SymScalar{}}};
        std::ofstream out("/tmp/maxmat_huge.json");
        out << maxmat::io::to_json(pot).dump();
        out.close();
        const RunResult r = run_cli("verify-potential '/tmp/maxmat_huge.json'");
        EXPECT(r.exit_code == 3);
    }
    // verify-field: Maxwell field passes with zero sources
    {
        const RunResult r = run_cli("verify-field " + sample("field_simple.json"));
        EXPECT(r.exit_code == 0);
        EXPECT(contains(r.output, "rho = 0"));
    }
    // verify-field: nonzero div B is an identity failure
    {
        const RunResult r = run_cli("verify-field " + sample("field_bad.json"));
        EXPECT(r.exit_code == 1);
        EXPECT(contains(r.output, "result: FAIL"));
    }
    // verify-field: light-like plane wave passes, including the wave identity
    {
        const RunResult r = run_cli("verify-field " + sample("field_plane_wave.json"));
        EXPECT(r.exit_code == 0);
    }
    // verify-field with D,H reports the macroscopic current
    {
        const std::string zero = R"({"poly_terms": []})";
        const std::string xterm =
            R"({"poly_terms": [{"exp": [0,1,0,0], "re": "1", "im": "0"}]})";
        write_file("/tmp/maxmat_macro.json",
                   "{\"E\": [" + zero + "," + zero + "," + zero + "], \"B\": [" + zero + "," +
                       zero + "," + zero + "], \"D\": [" + xterm + "," + zero + "," + zero +
                       "], \"H\": [" + zero + "," + zero + "," + zero + "]}");
        const RunResult r = run_cli("--json verify-field '/tmp/maxmat_macro.json'");
        EXPECT(r.exit_code == 0);
        const auto j = maxmat::io::json::parse(r.output);
        EXPECT(j.contains("macroscopic_current"));
        EXPECT(maxmat::io::symscalar_from_json(j["macroscopic_current"][0]) ==
               SymScalar::one());
    }
    // exp: boost along x has cosh/sinh entries
    {
        const RunResult r = run_cli("--json exp " + sample("values_boost_x.json"));
        EXPECT(r.exit_code == 0);
        const auto j = maxmat::io::json::parse(r.output);
        EXPECT(std::abs(j["matrix"][0][0]["re"].get<double>() - std::cosh(1.0)) < 1e-12);
        EXPECT(std::abs(j["matrix"][0][1]["re"].get<double>() - std::sinh(1.0)) < 1e-12);
        EXPECT(std::abs(j["lambda"]["re"].get<double>() - 1.0) < 1e-12);
        EXPECT(j["deviations"]["metric"].get<double>() < 1e-10);
    }
    // exp: rotation about z by pi/4
    {
        const RunResult r = run_cli("--json exp " + sample("values_rotation_z.json"));
        EXPECT(r.exit_code == 0);
        const auto j = maxmat::io::json::parse(r.output);
        EXPECT(std::abs(j["matrix"][1][1]["re"].get<double>() - std::sqrt(0.5)) < 1e-12);
        EXPECT(std::abs(j["lambda"]["im"].get<double>() - 0.7853981633974483) < 1e-12);
    }
    // exp: null field exercises the degenerate branch and stays Lorentz
    {
        const RunResult r = run_cli("--json exp " + sample("values_null.json"));
        EXPECT(r.exit_code == 0);
        const auto j = maxmat::io::json::parse(r.output);
        EXPECT(std::abs(j["lambda"]["re"].get<double>()) < 1e-12);
        EXPECT(std::abs(j["lambda"]["im"].get<double>()) < 1e-12);
        EXPECT(j["deviations"]["metric"].get<double>() < 1e-10);
    }
    // exp refuses exact mode
    {
        const RunResult r =
            run_cli("--mode exact exp " + sample("values_boost_x.json"));
        EXPECT(r.exit_code == 2);
    }
    // decompose: identity matrix has a single unit coefficient
    {
        const RunResult r = run_cli("decompose " + sample("matrix_identity.json"));
        EXPECT(r.exit_code == 0);
        EXPECT(contains(r.output, "a[0][0] = 1 +0i"));
        EXPECT(contains(r.output, "roundtrip residual = 0"));
    }
    // decompose: a basis matrix lands on its own coefficient
    {
        const RunResult r = run_cli("--json decompose " + sample("matrix_ce1.json"));
        EXPECT(r.exit_code == 0);
        const auto j = maxmat::io::json::parse(r.output);
        EXPECT(j["coefficients"][1][0]["re"] == "1");
        EXPECT(j["coefficients"][0][0]["re"] == "0");
        EXPECT(j["pass"] == true);
    }
    // decompose in approximate mode
    {
        const RunResult r =
            run_cli("--mode approx decompose " + sample("matrix_ce1.json"));
        EXPECT(r.exit_code == 0);
        EXPECT(contains(r.output, "result: PASS"));
    }
    // decompose: malformed matrix is an input error
    {
        write_file("/tmp/maxmat_badmat.json", R"({"matrix": [[1,0],[0,1]]})");
        const RunResult r = run_cli("decompose '/tmp/maxmat_badmat.json'");
        EXPECT(r.exit_code == 2);
    }
    // selftest: deterministic byte-identical output for a fixed seed
    {
        const RunResult r1 = run_cli("selftest --seed 42 --count 5");
        const RunResult r2 = run_cli("selftest --seed 42 --count 5");
        EXPECT(r1.exit_code == 0);
        EXPECT(r1.output == r2.output);
        EXPECT(contains(r1.output, "all suites passed"));
    }
    // selftest: count 0 warns and exits cleanly
    {
        const RunResult r = run_cli("selftest --count 0");
        EXPECT(r.exit_code == 0);
        EXPECT(contains(r.output, "warning"));
    }
    // unknown subcommand is an input error
    {
        const RunResult r = run_cli("frobnicate");
        EXPECT(r.exit_code == 2);
    }

    if (g_failures == 0) {
        std::printf("cli checks: all passed\n");
        return 0;
    }
    std::printf("cli checks: %d failure(s)\n", g_failures);
    return 1;
}

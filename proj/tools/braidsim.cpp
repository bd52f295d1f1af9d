#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "braid/chains.hpp"
#include "braid/connector.hpp"
#include "braid/dsl.hpp"
#include "braid/io.hpp"
#include "braid/verify.hpp"

using nlohmann::json;

namespace {

int run_program(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return 1;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    braid::dsl::CircuitProgram prog;
    try {
        prog = braid::dsl::parse_program(text);
    } catch (const braid::Error& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return 1;
    }

    braid::dsl::RunResult result;
    const std::string base_dir = std::filesystem::path(file).parent_path().string();
    try {
        result = braid::dsl::execute_program(prog, base_dir);
    } catch (const braid::Error& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return 2;
    }

    for (const braid::dsl::DumpArtifact& dump : result.dumps) {
        if (dump.path.empty()) {
            std::cout << dump.content;
        } else {
            std::filesystem::path out_path(dump.path);
            if (out_path.is_relative() && !base_dir.empty())
                out_path = std::filesystem::path(base_dir) / out_path;
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path.string() << "\n";
                return 2;
            }
            out << dump.content;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temperley-Lieb braid quantum gate simulator"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    double tol = braid::kRelationTol;
    std::size_t dense_limit = braid::kDenseLimit;
    std::string format = "json";
    std::uint64_t seed = 1;
    app.add_option("--tol", tol, "relation-check tolerance override");
    app.add_option("--dense-limit", dense_limit, "max D^n for dense realizations");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "root seed for randomized sweeps");

    auto* run = app.add_subcommand("run", "parse and execute a .braid program");
    std::string run_file;
    run->add_option("file", run_file, "program file")->required();

    auto* verify = app.add_subcommand("verify", "randomized algebraic identity sweep");
    std::size_t v_D = 2, v_n = 2, v_trials = 50;
    verify->add_option("--D", v_D, "levels per qudit")->required();
    verify->add_option("--n", v_n, "number of qudits")->required();
    verify->add_option("--trials", v_trials, "number of random configurations");

    auto* ghz = app.add_subcommand("ghz", "generate a generalized GHZ state");
    std::size_t g_D = 2, g_n = 2, g_k = 1;
    int g_l = 1, g_q = 0;
    std::string g_bsigns, g_out;
    ghz->add_option("--D", g_D, "levels per qudit")->required();
    ghz->add_option("--n", g_n, "number of qudits")->required();
    ghz->add_option("--l", g_l, "superposed levels (support size l+1)")->required();
    ghz->add_option("--k", g_k, "pivot position (1-based)");
    ghz->add_option("--q", g_q, "pivot level");
    ghz->add_option("--bsigns", g_bsigns, "per-step b signs, e.g. '+-+'");
    ghz->add_option("--out", g_out, "write the state to this file");

    auto* conn = app.add_subcommand("connect", "braid gate from a component to a full state");
    std::string c_state, c_component, c_out;
    conn->add_option("--state", c_state, "state JSON file")->required();
    conn->add_option("--component", c_component, "component digits, e.g. 00 or 1,2,0")
        ->required();
    conn->add_option("--out", c_out, "write the generated state to this file");

    CLI11_PARSE(app, argc, argv);

    if (*run) return run_program(run_file);

    if (*verify) {
        braid::SweepOptions opt;
        opt.D = v_D;
        opt.n = v_n;
        opt.trials = v_trials;
        opt.seed = seed;
        opt.tol_tla = tol;
        opt.dense_limit = dense_limit;
        try {
            const braid::SweepReport report = braid::run_verification_sweep(opt);
            json j{{"D", v_D},       {"n", v_n},   {"trials", report.trials},
                   {"seed", seed},   {"pass", report.pass},
                   {"max_residuals", report.max_residuals}};
            std::cout << j.dump(2) << "\n";
            return report.pass ? 0 : 1;
        } catch (const braid::Error& e) {
            std::cerr << "verify: " << e.what() << "\n";
            return 2;
        }
    }

    if (*ghz) {
        try {
            std::vector<int> b_signs;
            for (char c : g_bsigns) {
                if (c == '+')
                    b_signs.push_back(+1);
                else if (c == '-')
                    b_signs.push_back(-1);
                else
                    throw braid::Error("bsigns must contain only '+' and '-'");
            }
            const braid::QuditRegisterState state =
                braid::generate_ghz(g_D, g_n, g_l, g_k, b_signs, g_q);
            const std::string text = format == "csv" ? braid::state_to_csv(state)
                                                     : braid::state_to_json(state).dump(2) + "\n";
            if (g_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(g_out);
                if (!out) throw braid::Error("cannot write " + g_out);
                out << text;
            }
            return 0;
        } catch (const braid::Error& e) {
            std::cerr << "ghz: " << e.what() << "\n";
            return 2;
        }
    }

    if (*conn) {
        try {
            const braid::QuditRegisterState psi = braid::load_state_file(c_state);
            std::vector<int> digits;
            if (c_component.find(',') != std::string::npos) {
                std::size_t start = 0;
                while (start <= c_component.size()) {
                    const std::size_t comma = c_component.find(',', start);
                    const std::string part = c_component.substr(
                        start, comma == std::string::npos ? std::string::npos : comma - start);
                    digits.push_back(std::stoi(part));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            } else {
                for (char c : c_component) {
                    if (c < '0' || c > '9')
                        throw braid::Error("component digits must be 0-9 (or comma-separated)");
                    digits.push_back(c - '0');
                }
            }

            const braid::ConnectorGate gate = braid::connect(psi, digits);
            const braid::QuditRegisterState generated =
                braid::apply_connector(gate, braid::basis_state(psi.D, psi.n, digits));
            const braid::cplx ov = braid::overlap(psi, generated);

            json admissible = json::array();
            for (const auto& comp : braid::admissible_components(psi))
                admissible.push_back(json{{"index", comp.index},
                                          {"digits", comp.digits},
                                          {"alpha2", comp.alpha_squared}});
            json report{{"component", digits},
                        {"alpha2", std::norm(gate.alpha)},
                        {"d", gate.d},
                        {"phase", gate.phase()},
                        {"overlap_modulus", std::abs(ov)},
                        {"overlap_phase", std::arg(ov)},
                        {"admissible_components", std::move(admissible)}};
            std::cout << report.dump(2) << "\n";
            if (!c_out.empty()) braid::save_state_file(generated, c_out);
            return 0;
        } catch (const braid::BelowThreshold& e) {
            json report{{"error", "BelowThreshold"}, {"alpha2", e.alpha_squared}};
            std::cout << report.dump(2) << "\n";
            std::cerr << "connect: " << e.what() << "\n";
            return 2;
        } catch (const braid::Error& e) {
            std::cerr << "connect: " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

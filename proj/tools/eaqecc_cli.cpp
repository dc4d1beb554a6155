// Copyright 2026 The EAQECC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eaqecc/eaqecc.hpp"

namespace {

constexpr int kExitFailure = 2;
constexpr int kExitInfeasible = 3;

void emit(const eaqecc::Report &report, const std::string &output_path) {
    std::string text = report.str();
    std::cout << text;
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) {
            throw std::runtime_error("cannot write '" + output_path + "'");
        }
        out << text;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement-assisted quantum codes from classical GF(4) codes"};
    app.require_subcommand(1);

    std::string input;
    std::string output;

    auto *build = app.add_subcommand("build", "Build the code and print parameters and generators");
    build->add_option("input", input, "Classical code file")->required()->check(CLI::ExistingFile);
    build->add_option("-o,--output", output, "Also write the report to this file");

    eaqecc::AnalyzeOptions analyze_opts;
    auto *analyze = app.add_subcommand("analyze", "Distance, syndrome distinctness, Singleton slack, degeneracy");
    analyze->add_option("input", input, "Classical code file")->required()->check(CLI::ExistingFile);
    analyze->add_option("--weight-cap", analyze_opts.weight_cap, "Largest error weight the distance search tries")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analyze->add_option("--t", analyze_opts.t, "Error weight for the distinct-syndrome check")->capture_default_str();
    analyze->add_option("-o,--output", output, "Also write the report to this file");

    eaqecc::SimulateOptions sim_opts;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo over a depolarizing channel with table decoding");
    simulate->add_option("input", input, "Classical code file")->required()->check(CLI::ExistingFile);
    simulate->add_option("--p", sim_opts.p, "Per-qubit error probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    simulate->add_option("--trials", sim_opts.trials, "Number of channel uses")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--seed", sim_opts.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--max-weight", sim_opts.max_weight, "Largest error weight stored in the decoder table")
        ->capture_default_str();
    simulate->add_option("--threads", sim_opts.threads, "Worker threads (does not change results)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("-o,--output", output, "Also write the report to this file");

    std::vector<double> f_list;
    auto *bounds = app.add_subcommand("bounds", "Classical and quantum hashing rates per error probability");
    bounds->add_option("--f-list", f_list, "Comma-separated error probabilities")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    bounds->add_option("-o,--output", output, "Also write the report to this file");

    std::size_t rounds = 1;
    std::size_t initial_ebits = 0;
    auto *catalytic = app.add_subcommand("catalytic", "Entanglement ledger for repeated catalytic use");
    catalytic->add_option("input", input, "Classical code file")->required()->check(CLI::ExistingFile);
    catalytic->add_option("--rounds", rounds, "Number of code uses")->capture_default_str();
    catalytic->add_option("--initial-ebits", initial_ebits, "Ebits shared before the first round")
        ->required();
    catalytic->add_option("-o,--output", output, "Also write the report to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            emit(eaqecc::cmd_build(eaqecc::load_code_file(input).code), output);
        } else if (analyze->parsed()) {
            emit(eaqecc::cmd_analyze(eaqecc::load_code_file(input).code, analyze_opts), output);
        } else if (simulate->parsed()) {
            emit(eaqecc::cmd_simulate(eaqecc::load_code_file(input).code, sim_opts), output);
        } else if (bounds->parsed()) {
            emit(eaqecc::cmd_bounds(f_list), output);
        } else if (catalytic->parsed()) {
            emit(eaqecc::cmd_catalytic(eaqecc::load_code_file(input).code, rounds, initial_ebits), output);
        }
    } catch (const eaqecc::InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}

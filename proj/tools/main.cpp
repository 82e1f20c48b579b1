// Copyright 2026 The qunit Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char **argv) {
    using namespace qunit::cli;

    CLI::App app{"qunit: unit testing for quantum subroutines"};
    app.require_subcommand(1);

    RunOptions run;
    std::string format = "text";
    auto *run_cmd = app.add_subcommand("run", "Run a test suite and print the report");
    run_cmd->add_option("suite", run.suite_path, "Suite document (JSON)")->required();
    run_cmd->add_option("--shots", run.shots, "Shots per measurement setting");
    run_cmd->add_option("--seed", run.seed, "Master seed");
    run_cmd->add_option("--threshold", run.threshold, "Pass threshold")->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--noise", run.noise, "Noise preset (none, default) or noise file");
    run_cmd->add_option("--save-data", run.save_data, "Directory for the full report with raw data");
    run_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    run_cmd->add_option("--jobs", run.jobs, "Worker threads")->check(CLI::PositiveNumber);

    SweepOptions sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Run a shot-count sweep and print CSV");
    sweep_cmd->add_option("sweep", sweep.sweep_path, "Sweep document (JSON)")->required();
    sweep_cmd->add_option("--seed", sweep.seed, "Master seed");
    sweep_cmd->add_option("--noise", sweep.noise, "Noise preset (none, default) or noise file");
    sweep_cmd->add_option("--trials", sweep.trials, "Trials per grid point")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--pass-rate", sweep.pass_rate, "Add pass-rate columns");
    sweep_cmd->add_flag("--timing", sweep.timing, "Print per-protocol time per shot to stderr");
    sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInvalidInput;
    }

    if (*run_cmd) {
        run.format = format == "json" ? qunit::ReportFormat::Json : qunit::ReportFormat::Text;
        return cmd_run(run, std::cout, std::cerr);
    }
    return cmd_sweep(sweep, std::cout, std::cerr);
}

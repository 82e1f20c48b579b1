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

#include "commands.hpp"

#include <fmt/format.h>

#include <fstream>

#include "qunit/errors.hpp"
#include "qunit/suite_io.hpp"

namespace qunit::cli {

namespace {

template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const NumericError &e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw ValidationError(path.string() + ": cannot write file");
    }
}

}  // namespace

int cmd_run(const RunOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        TestSuite suite = load_suite(options.suite_path);
        if (options.shots) {
            suite.defaults.shots = *options.shots;
        }
        if (options.seed) {
            suite.defaults.seed = *options.seed;
        }
        if (options.threshold) {
            suite.defaults.threshold = *options.threshold;
        }
        if (options.noise) {
            suite.defaults.noise = resolve_noise(*options.noise);
        }
        if (options.save_data) {
            suite.save_data = true;
        }
        validate_suite(suite);

        const TestReport report = run_suite(suite, options.jobs);
        out << format_report(report, options.format);

        if (options.save_data) {
            std::error_code ec;
            std::filesystem::create_directories(*options.save_data, ec);
            if (ec) {
                throw ValidationError(options.save_data->string() + ": " + ec.message());
            }
            write_file(*options.save_data / "report.json", format_report(report, ReportFormat::Json));
        }
        return report.all_passed() ? kAllPassed : kSomeFailed;
    });
}

int cmd_sweep(const SweepOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        SweepConfig config = load_sweep(options.sweep_path);
        if (options.seed) {
            config.seed = *options.seed;
        }
        if (options.noise) {
            config.noise = resolve_noise(*options.noise);
        }
        if (options.trials) {
            config.trials_per_point = *options.trials;
        }
        validate_sweep(config);

        out << format_sweep_csv(run_sweep(config, options.jobs), options.pass_rate);

        if (options.timing) {
            const uint64_t shots = config.shot_grid.back();
            for (const auto &cost : measure_protocol_costs(config.positive_case.subject, shots, 3, config.noise)) {
                err << fmt::format("timing {}: {:.3e} s per shot\n", protocol_name(cost.protocol),
                                   cost.seconds_per_shot);
            }
        }
        return kAllPassed;
    });
}

}  // namespace qunit::cli

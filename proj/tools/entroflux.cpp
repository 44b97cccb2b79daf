// Copyright 2026 The Entroflux Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entroflux/commands.hpp"

int main(int argc, char** argv) {
    using namespace entroflux;

    CLI::App app{"entroflux: entropy of measurement-based feedback dynamics"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string out_dir;
    std::vector<double> alphas;
    bool inject_corrupt = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Run configuration (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "Master seed (overrides the config)");
        sub->add_option("--workers", workers, "Worker threads (default: $ENTROFLUX_WORKERS or 1)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", out_dir, "Output directory (overrides output_path)");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "Run the trajectory ensemble, write ensemble.csv");
    add_common(simulate);
    CLI::App* verify = app.add_subcommand("verify-bound", "Check the entropy-rate bound, write bound_report.csv");
    add_common(verify);
    CLI::App* sweep = app.add_subcommand("sweep-alpha", "Threshold and bound along the master equation per alpha");
    add_common(sweep);
    sweep->add_option("--alphas", alphas, "Decoherence ratios, e.g. --alphas 0,6,50")
        ->required()
        ->delimiter(',');
    CLI::App* selftest = app.add_subcommand("selftest", "Run the property suites");
    selftest->add_flag("--inject-corrupt-state", inject_corrupt)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CommandOptions opts;
    opts.config_path = config_path;
    if (app.got_subcommand(selftest) == false) {
        CLI::App* sub = app.get_subcommands().front();
        if (sub->count("--seed") > 0) opts.seed = seed;
        if (sub->count("--workers") > 0) opts.workers = workers;
        if (sub->count("--out") > 0) opts.out_dir = out_dir;
    }

    try {
        if (app.got_subcommand(simulate)) return cmd_simulate(opts);
        if (app.got_subcommand(verify)) return cmd_verify_bound(opts);
        if (app.got_subcommand(sweep)) return cmd_sweep_alpha(opts, alphas);
        SelftestOptions st;
        st.inject_corrupt_state = inject_corrupt;
        return cmd_selftest(st);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

// fdxsim command line front end. Talks to the simulator exclusively through
// the shared library's C API.
//
//   fdxsim run --config sim.cfg [--snr-db -10,0,10] [--bits 0,1,8]
//              [--trials 500] [--seed 1] [--out raw.csv --summary summary.csv]
//              [--threads 4]

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "fdxsim.h"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

int status_to_exit_code(fdx_status s) {
    return s == FDX_ERR_CONFIG ? kExitConfig : kExitRuntime;
}

int fail(fdx_sim* sim, fdx_status s, const std::string& context) {
    std::fprintf(stderr, "fdxsim: %s: %s\n", context.c_str(), fdx_sim_last_error(sim));
    return status_to_exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full-duplex mmWave MIMO link-level simulator"};
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand("run", "Run a Monte Carlo sweep and write CSV results");
    std::string config_path;
    std::string snr_list, bits_list, trials, seed;
    std::string out_path = "raw.csv";
    std::string summary_path = "summary.csv";
    int threads = 1;
    run->add_option("--config", config_path, "Config file (flat key = value)")->required();
    run->add_option("--snr-db", snr_list, "Override the SNR grid (comma-separated dB values)");
    run->add_option("--bits", bits_list, "Override the ASIC bit-depth list (comma-separated)");
    run->add_option("--trials", trials, "Override the number of trials per grid point");
    run->add_option("--seed", seed, "Override the base seed");
    run->add_option("--out", out_path, "Per-trial CSV output path");
    run->add_option("--summary", summary_path, "Aggregated CSV output path");
    run->add_option("--threads", threads, "Worker threads (results are thread-count invariant)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfig : 0;
    }

    std::unique_ptr<fdx_sim, decltype(&fdx_sim_destroy)> sim(fdx_sim_create(), &fdx_sim_destroy);
    if (!sim) {
        std::fprintf(stderr, "fdxsim: out of memory\n");
        return kExitRuntime;
    }

    fdx_status s = fdx_sim_load_config(sim.get(), config_path.c_str());
    if (s != FDX_OK) return fail(sim.get(), s, "loading " + config_path);

    const std::pair<const char*, const std::string*> overrides[] = {
        {"snr_db", &snr_list}, {"asic_bits", &bits_list}, {"trials", &trials}, {"seed", &seed}};
    for (const auto& [key, value] : overrides) {
        if (value->empty()) continue;
        s = fdx_sim_set(sim.get(), key, value->c_str());
        if (s != FDX_OK) return fail(sim.get(), s, std::string("setting ") + key);
    }

    fdx_results* results = nullptr;
    s = fdx_sim_run(sim.get(), threads, &results);
    if (s != FDX_OK) return fail(sim.get(), s, "running sweep");
    std::unique_ptr<fdx_results, decltype(&fdx_results_destroy)> guard(results,
                                                                       &fdx_results_destroy);

    if (fdx_results_write_raw_csv(results, out_path.c_str()) != FDX_OK) {
        std::fprintf(stderr, "fdxsim: cannot write %s\n", out_path.c_str());
        return kExitRuntime;
    }
    if (fdx_results_write_summary_csv(results, summary_path.c_str()) != FDX_OK) {
        std::fprintf(stderr, "fdxsim: cannot write %s\n", summary_path.c_str());
        return kExitRuntime;
    }

    const size_t skipped = fdx_results_skipped(results);
    if (skipped > 0)
        std::fprintf(stderr, "fdxsim: warning: %zu degenerate trial row(s) skipped\n", skipped);
    std::printf("wrote %zu rows to %s, summary to %s\n", fdx_results_rows(results),
                out_path.c_str(), summary_path.c_str());
    return 0;
}

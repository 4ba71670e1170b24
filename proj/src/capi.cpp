// extern-C surface of the shared library: opaque handles over the C++ core,
// exceptions mapped to status codes.

#include "fdxsim.h"

#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "fdxsim/sim.hpp"

struct fdx_sim {
    fdx::SimConfig config;
    std::string last_error;
};

struct fdx_results {
    fdx::SweepResult sweep;
};

namespace {

constexpr const char* kVersion = "1.0.0";

fdx_status fail(fdx_sim* sim, fdx_status code, const char* what) {
    if (sim) sim->last_error = what;
    return code;
}

fdx_status write_file(const fdx_results* res, const char* path,
                      void (*writer)(const fdx::SweepResult&, std::ostream&)) {
    if (!res || !path) return FDX_ERR_INVALID_ARG;
    try {
        std::ofstream os(path, std::ios::binary);
        if (!os) return FDX_ERR_RUNTIME;
        writer(res->sweep, os);
        os.flush();
        return os ? FDX_OK : FDX_ERR_RUNTIME;
    } catch (const std::exception&) {
        return FDX_ERR_RUNTIME;
    }
}

}  // namespace

extern "C" {

const char* fdx_version(void) {
    return kVersion;
}

fdx_sim* fdx_sim_create(void) {
    return new (std::nothrow) fdx_sim{};
}

void fdx_sim_destroy(fdx_sim* sim) {
    delete sim;
}

const char* fdx_sim_last_error(const fdx_sim* sim) {
    return sim ? sim->last_error.c_str() : "";
}

fdx_status fdx_sim_load_config(fdx_sim* sim, const char* path) {
    if (!sim || !path) return fail(sim, FDX_ERR_INVALID_ARG, "null argument");
    try {
        sim->config = fdx::SimConfig::from_file(path);
        sim->last_error.clear();
        return FDX_OK;
    } catch (const std::exception& e) {
        return fail(sim, FDX_ERR_CONFIG, e.what());
    }
}

fdx_status fdx_sim_set(fdx_sim* sim, const char* key, const char* value) {
    if (!sim || !key || !value) return fail(sim, FDX_ERR_INVALID_ARG, "null argument");
    try {
        sim->config.apply(key, value);
        sim->last_error.clear();
        return FDX_OK;
    } catch (const std::exception& e) {
        return fail(sim, FDX_ERR_CONFIG, e.what());
    }
}

fdx_status fdx_sim_run(fdx_sim* sim, int threads, fdx_results** out) {
    if (!sim || !out) return fail(sim, FDX_ERR_INVALID_ARG, "null argument");
    *out = nullptr;
    try {
        fdx::SweepResult sweep = fdx::run_sweep(sim->config, threads);
        *out = new fdx_results{std::move(sweep)};
        sim->last_error.clear();
        return FDX_OK;
    } catch (const fdx::ConfigError& e) {
        return fail(sim, FDX_ERR_CONFIG, e.what());
    } catch (const std::exception& e) {
        return fail(sim, FDX_ERR_RUNTIME, e.what());
    }
}

size_t fdx_results_rows(const fdx_results* res) {
    return res ? res->sweep.rows.size() : 0;
}

fdx_status fdx_results_get_row(const fdx_results* res, size_t index, fdx_trial_row* out) {
    if (!res || !out || index >= res->sweep.rows.size()) return FDX_ERR_INVALID_ARG;
    const fdx::TrialResult& r = res->sweep.rows[index];
    *out = fdx_trial_row{r.trial,    r.snr_db,   r.asic_bits, r.rate_ki,
                         r.rate_ij,  r.sum_rate, r.ideal_sum, r.half_duplex_sum};
    return FDX_OK;
}

size_t fdx_results_skipped(const fdx_results* res) {
    return res ? res->sweep.skipped.size() : 0;
}

fdx_status fdx_results_write_raw_csv(const fdx_results* res, const char* path) {
    return write_file(res, path, &fdx::write_raw_csv);
}

fdx_status fdx_results_write_summary_csv(const fdx_results* res, const char* path) {
    return write_file(res, path, &fdx::write_summary_csv);
}

void fdx_results_destroy(fdx_results* res) {
    delete res;
}

}  // extern "C"

// Monte Carlo harness: simulation configuration, the per-trial pipeline
// (channel draws -> beamtraining -> canceller -> beamforming -> rates),
// sweeps over SNR and canceller resolution, and CSV emission.
//
// Determinism contract: the output is a pure function of the configuration.
// Each (snr index, trial index) cell owns an RNG substream, so canceller
// resolution never perturbs the channel draws and multi-threaded sweeps are
// bit-identical to serial ones.

#ifndef FDXSIM_SIM_HPP
#define FDXSIM_SIM_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdxsim/asic.hpp"
#include "fdxsim/channel.hpp"
#include "fdxsim/link.hpp"

namespace fdx {

/// Invalid configuration (bad key, unparsable value, violated invariant).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Full simulation setup. Field names double as the config-file keys.
struct SimConfig {
    int antennas = 32;
    int rf_chains_tx_i = 4;   // the full-duplex transmitter gets 2 extra chains
    int rf_chains_rx_i = 2;
    int rf_chains_tx_k = 2;
    int rf_chains_rx_j = 2;
    int streams = 2;          // per link
    double element_spacing_wavelengths = 0.5;
    double rician_factor_db = 20.0;
    double snr_ii_db = 40.0;
    double si_separation_wavelengths = 10.0;
    double carrier_ghz = 28.0;   // informational: geometry is in wavelengths
    int desired_rays_min = 1;
    int desired_rays_max = 10;
    int desired_clusters_min = 1;
    int desired_clusters_max = 6;
    int si_rays_min = 1;
    int si_rays_max = 6;
    int si_clusters_min = 1;
    int si_clusters_max = 3;
    std::vector<double> snr_db = {-10, -5, 0, 5, 10, 15, 20, 25, 30};
    std::vector<int> asic_bits = {0, 1, 2, 4, 8};
    int trials = 500;
    std::uint64_t seed = 1;

    /// Set one field from its config-file key. Throws ConfigError for
    /// unknown keys or unparsable values.
    void apply(const std::string& key, const std::string& value);

    /// Throws ConfigError if any invariant is violated.
    void validate() const;

    /// Parse a flat `key = value` file. Blank lines and lines starting with
    /// '#' are ignored.
    static SimConfig from_file(const std::string& path);

    // Derived pieces.
    std::vector<double> sorted_snr_grid() const;   // ascending, deduplicated
    std::vector<int> sorted_bit_list() const;
    ArrayGeometry desired_array() const;
    ArrayGeometry si_tx_array() const;
    ArrayGeometry si_rx_array() const;
    ClusterSpec desired_cluster_spec() const;
    SiChannelConfig si_channel_config() const;
};

/// Everything about one channel draw that is independent of the SNR point's
/// canceller resolution: the three channels, the beamtrained RF selections, and
/// the effective channels seen through them.
struct TrialContext {
    ChannelRealization h_ij;
    ChannelRealization h_ki;
    ChannelRealization h_ii;
    CMat f_rf_i, w_rf_j;   // link i -> j
    CMat f_rf_k, w_rf_i;   // link k -> i
    CMat h_t_ij, h_t_ki, h_t_ii;
};

/// Canceller and baseband beamformers for one canceller resolution.
struct BasebandDesign {
    AsicFilter filter;
    CMat w_bb_j, w_bb_i;   // combiners (orthonormal columns)
    CMat f_bb_k, f_bb_i;   // stream-normalized precoders
};

struct TrialResult {
    int trial = 0;
    double snr_db = 0.0;
    int asic_bits = 0;
    double rate_ki = 0.0;
    double rate_ij = 0.0;
    double sum_rate = 0.0;
    double ideal_sum = 0.0;
    double half_duplex_sum = 0.0;
};

struct SkipRecord {
    double snr_db = 0.0;
    int asic_bits = 0;
    int trial = 0;
    std::string reason;
};

struct SweepResult {
    std::vector<TrialResult> rows;     // ordered (snr_db asc, asic_bits asc, trial asc)
    std::vector<SkipRecord> skipped;   // same ordering
};

struct SummaryRow {
    double snr_db = 0.0;
    int asic_bits = 0;
    double mean_sum = 0.0;
    double stderr_sum = 0.0;
    double mean_ideal = 0.0;
    double mean_half_duplex = 0.0;
};

/// Draw one trial's channels and run beamtraining on both desired links.
TrialContext make_trial_context(const SimConfig& cfg, Rng& rng);

/// Configure the canceller and all baseband beamformers for one resolution.
BasebandDesign design_baseband(const SimConfig& cfg, const TrialContext& ctx,
                          unsigned bits, double snr_db);

/// Rates plus ideal/half-duplex baselines on the context's channel draw.
TrialResult evaluate_trial(const SimConfig& cfg, const TrialContext& ctx,
                           double snr_db, unsigned bits, int trial_index);

/// Single-point convenience entry: snr_db must be a grid point of cfg.
/// The trial's substream is keyed by (seed, snr index, trial index).
TrialResult run_trial(const SimConfig& cfg, double snr_db, unsigned bits, int trial_index);

/// Full Cartesian sweep (snr grid x bit list x trials). Degenerate draws
/// skip only the affected rows and are reported in SweepResult::skipped.
/// Any thread count yields output identical to a serial run.
SweepResult run_sweep(const SimConfig& cfg, int threads = 1);

/// Per-(snr, bits) mean and standard error over the present rows.
std::vector<SummaryRow> summarize(const std::vector<TrialResult>& rows);

void write_raw_csv(const SweepResult& result, std::ostream& os);
void write_summary_csv(const SweepResult& result, std::ostream& os);

}  // namespace fdx

#endif

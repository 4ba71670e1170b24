#include "fdxsim/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "fdxsim/beamforming.hpp"
#include "fdxsim/beamtraining.hpp"

namespace fdx {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const double v = std::stod(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const long v = std::stol(value, &idx);
        if (idx != value.size() || v < std::numeric_limits<int>::min() ||
            v > std::numeric_limits<int>::max())
            throw std::invalid_argument("");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for '" + key + "': " + value);
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const std::uint64_t v = std::stoull(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid seed value for '" + key + "': " + value);
    }
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("empty element in list for '" + key + "'");
        out.push_back(parse(key, item));
    }
    if (out.empty()) throw ConfigError("empty list for '" + key + "'");
    return out;
}

}  // namespace

void SimConfig::apply(const std::string& key, const std::string& value) {
    if (key == "antennas") antennas = parse_int(key, value);
    else if (key == "rf_chains_tx_i") rf_chains_tx_i = parse_int(key, value);
    else if (key == "rf_chains_rx_i") rf_chains_rx_i = parse_int(key, value);
    else if (key == "rf_chains_tx_k") rf_chains_tx_k = parse_int(key, value);
    else if (key == "rf_chains_rx_j") rf_chains_rx_j = parse_int(key, value);
    else if (key == "streams") streams = parse_int(key, value);
    else if (key == "element_spacing_wavelengths") element_spacing_wavelengths = parse_double(key, value);
    else if (key == "rician_factor_db") rician_factor_db = parse_double(key, value);
    else if (key == "snr_ii_db") snr_ii_db = parse_double(key, value);
    else if (key == "si_separation_wavelengths") si_separation_wavelengths = parse_double(key, value);
    else if (key == "carrier_ghz") carrier_ghz = parse_double(key, value);
    else if (key == "desired_rays_min") desired_rays_min = parse_int(key, value);
    else if (key == "desired_rays_max") desired_rays_max = parse_int(key, value);
    else if (key == "desired_clusters_min") desired_clusters_min = parse_int(key, value);
    else if (key == "desired_clusters_max") desired_clusters_max = parse_int(key, value);
    else if (key == "si_rays_min") si_rays_min = parse_int(key, value);
    else if (key == "si_rays_max") si_rays_max = parse_int(key, value);
    else if (key == "si_clusters_min") si_clusters_min = parse_int(key, value);
    else if (key == "si_clusters_max") si_clusters_max = parse_int(key, value);
    else if (key == "snr_db") snr_db = parse_list<double>(key, value, parse_double);
    else if (key == "asic_bits") asic_bits = parse_list<int>(key, value, parse_int);
    else if (key == "trials") trials = parse_int(key, value);
    else if (key == "seed") seed = parse_u64(key, value);
    else throw ConfigError("unknown config key: " + key);
}

void SimConfig::validate() const {
    auto require = [](bool ok, const char* msg) {
        if (!ok) throw ConfigError(msg);
    };
    require(antennas >= 1, "antennas must be >= 1");
    require(rf_chains_tx_i >= 1 && rf_chains_tx_i <= antennas, "rf_chains_tx_i out of range");
    require(rf_chains_rx_i >= 1 && rf_chains_rx_i <= antennas, "rf_chains_rx_i out of range");
    require(rf_chains_tx_k >= 1 && rf_chains_tx_k <= antennas, "rf_chains_tx_k out of range");
    require(rf_chains_rx_j >= 1 && rf_chains_rx_j <= antennas, "rf_chains_rx_j out of range");
    require(streams >= 1, "streams must be >= 1");
    require(streams <= std::min(rf_chains_tx_k, rf_chains_rx_i),
            "streams exceed the RF chains of link k->i");
    require(streams <= std::min(rf_chains_tx_i, rf_chains_rx_j),
            "streams exceed the RF chains of link i->j");
    require(element_spacing_wavelengths > 0.0, "element spacing must be positive");
    require(std::isfinite(rician_factor_db) || rician_factor_db == -std::numeric_limits<double>::infinity(),
            "rician_factor_db must not be NaN or +inf");
    require(std::isfinite(snr_ii_db), "snr_ii_db must be finite");
    require(si_separation_wavelengths > 0.0, "si_separation_wavelengths must be positive");
    require(carrier_ghz > 0.0, "carrier_ghz must be positive");
    require(desired_rays_min >= 1 && desired_rays_min <= desired_rays_max, "bad desired ray range");
    require(desired_clusters_min >= 1 && desired_clusters_min <= desired_clusters_max,
            "bad desired cluster range");
    require(si_rays_min >= 1 && si_rays_min <= si_rays_max, "bad SI ray range");
    require(si_clusters_min >= 1 && si_clusters_min <= si_clusters_max, "bad SI cluster range");
    require(!snr_db.empty(), "snr_db grid must not be empty");
    for (double v : snr_db) require(std::isfinite(v), "snr_db entries must be finite");
    require(!asic_bits.empty(), "asic_bits list must not be empty");
    for (int b : asic_bits) require(b >= 0 && b <= 52, "asic_bits entries must be in [0, 52]");
    require(trials >= 1, "trials must be >= 1");
}

SimConfig SimConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    SimConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        cfg.apply(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return cfg;
}

std::vector<double> SimConfig::sorted_snr_grid() const {
    std::vector<double> grid = snr_db;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::vector<int> SimConfig::sorted_bit_list() const {
    std::vector<int> bits = asic_bits;
    std::sort(bits.begin(), bits.end());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    return bits;
}

ArrayGeometry SimConfig::desired_array() const {
    return ArrayGeometry{antennas, element_spacing_wavelengths, Eigen::Vector3d::Zero(),
                         Eigen::Vector3d::UnitX()};
}

ArrayGeometry SimConfig::si_tx_array() const {
    return desired_array();
}

ArrayGeometry SimConfig::si_rx_array() const {
    // Stacked vertically above the transmit array, flush along x.
    return ArrayGeometry{antennas, element_spacing_wavelengths,
                         Eigen::Vector3d(0.0, 0.0, si_separation_wavelengths),
                         Eigen::Vector3d::UnitX()};
}

ClusterSpec SimConfig::desired_cluster_spec() const {
    ClusterSpec spec;
    spec.clusters_min = desired_clusters_min;
    spec.clusters_max = desired_clusters_max;
    spec.rays_min = desired_rays_min;
    spec.rays_max = desired_rays_max;
    return spec;
}

SiChannelConfig SimConfig::si_channel_config() const {
    SiChannelConfig si;
    si.rician_factor_db = rician_factor_db;
    si.array_separation_wavelengths = si_separation_wavelengths;
    si.nlos_spec.clusters_min = si_clusters_min;
    si.nlos_spec.clusters_max = si_clusters_max;
    si.nlos_spec.rays_min = si_rays_min;
    si.nlos_spec.rays_max = si_rays_max;
    return si;
}

TrialContext make_trial_context(const SimConfig& cfg, Rng& rng) {
    const ArrayGeometry ula = cfg.desired_array();
    const ClusterSpec desired = cfg.desired_cluster_spec();

    TrialContext ctx;
    // Draw order is part of the determinism contract: H_ij, H_ki, H_ii.
    ctx.h_ij = gen_sv_channel(rng, ula, ula, desired);
    ctx.h_ki = gen_sv_channel(rng, ula, ula, desired);
    ctx.h_ii = gen_si_channel(rng, cfg.si_channel_config(), cfg.si_tx_array(), cfg.si_rx_array());

    const Codebook cb = dft_codebook(cfg.antennas);
    const RfSelection sel_ij =
        beam_search(ctx.h_ij.matrix, cb, cb, cfg.rf_chains_tx_i, cfg.rf_chains_rx_j);
    const RfSelection sel_ki =
        beam_search(ctx.h_ki.matrix, cb, cb, cfg.rf_chains_tx_k, cfg.rf_chains_rx_i);
    ctx.f_rf_i = sel_ij.f_rf;
    ctx.w_rf_j = sel_ij.w_rf;
    ctx.f_rf_k = sel_ki.f_rf;
    ctx.w_rf_i = sel_ki.w_rf;

    ctx.h_t_ij = effective_channel(ctx.w_rf_j, ctx.h_ij.matrix, ctx.f_rf_i);
    ctx.h_t_ki = effective_channel(ctx.w_rf_i, ctx.h_ki.matrix, ctx.f_rf_k);
    ctx.h_t_ii = effective_channel(ctx.w_rf_i, ctx.h_ii.matrix, ctx.f_rf_i);
    return ctx;
}

BasebandDesign design_baseband(const SimConfig& cfg, const TrialContext& ctx,
                          unsigned bits, double snr_db) {
    const int ns = cfg.streams;
    BasebandDesign s2;
    s2.filter = configure_asic(ctx.h_t_ii, AsicConfig{bits});
    s2.w_bb_j = svd_combiner(ctx.h_t_ij, ns);
    s2.w_bb_i = svd_combiner(ctx.h_t_ki, ns);
    s2.f_bb_k = normalize_streams(ctx.f_rf_k, svd_precoder(ctx.h_t_ki, ns));

    MmseInputs mmse;
    mmse.h_des = s2.w_bb_j.adjoint() * ctx.h_t_ij;
    mmse.h_int = s2.w_bb_i.adjoint() * residual(ctx.h_t_ii, s2.filter);
    mmse.snr_des = db_to_linear(snr_db);
    mmse.snr_si = db_to_linear(cfg.snr_ii_db);
    mmse.ns = ns;
    s2.f_bb_i = normalize_streams(ctx.f_rf_i, mmse_precoder(mmse));
    return s2;
}

TrialResult evaluate_trial(const SimConfig& cfg, const TrialContext& ctx,
                           double snr_db, unsigned bits, int trial_index) {
    const int ns = cfg.streams;
    const LinkBudget budget{snr_db, snr_db, cfg.snr_ii_db};
    const BasebandDesign s2 = design_baseband(cfg, ctx, bits, snr_db);

    TrialResult r;
    r.trial = trial_index;
    r.snr_db = snr_db;
    r.asic_bits = static_cast<int>(bits);
    r.rate_ki = rate_uplink(s2.w_bb_i, ctx.w_rf_i, ctx.h_ki.matrix, ctx.f_rf_k, s2.f_bb_k,
                            ctx.h_ii.matrix, ctx.f_rf_i, s2.f_bb_i, s2.filter, budget, ns, ns);
    r.rate_ij = rate_downlink(s2.w_bb_j, ctx.w_rf_j, ctx.h_ij.matrix, ctx.f_rf_i, s2.f_bb_i,
                              budget, ns);
    r.sum_rate = r.rate_ki + r.rate_ij;

    const LinkRates ideal = ideal_fd_rates(ctx.h_ki.matrix, ctx.f_rf_k, ctx.w_rf_i,
                                           ctx.h_ij.matrix, ctx.f_rf_i, ctx.w_rf_j, budget, ns, ns);
    r.ideal_sum = ideal.sum;
    r.half_duplex_sum = half_duplex_sum(ideal);
    return r;
}

TrialResult run_trial(const SimConfig& cfg, double snr_db, unsigned bits, int trial_index) {
    cfg.validate();
    if (trial_index < 0 || trial_index >= cfg.trials)
        throw std::invalid_argument("run_trial: trial index out of range");
    const std::vector<double> grid = cfg.sorted_snr_grid();
    const auto it = std::find(grid.begin(), grid.end(), snr_db);
    if (it == grid.end()) throw std::invalid_argument("run_trial: snr_db not on the configured grid");
    const auto snr_index = static_cast<std::uint64_t>(it - grid.begin());

    Rng rng = Rng::substream(cfg.seed, snr_index, static_cast<std::uint64_t>(trial_index));
    const TrialContext ctx = make_trial_context(cfg, rng);
    return evaluate_trial(cfg, ctx, snr_db, bits, trial_index);
}

SweepResult run_sweep(const SimConfig& cfg, int threads) {
    cfg.validate();
    const std::vector<double> grid = cfg.sorted_snr_grid();
    const std::vector<int> bits = cfg.sorted_bit_list();
    const std::size_t num_snr = grid.size();
    const std::size_t num_bits = bits.size();
    const std::size_t num_trials = static_cast<std::size_t>(cfg.trials);
    const std::size_t num_cells = num_snr * num_trials;
    const std::size_t num_slots = num_cells * num_bits;

    std::vector<TrialResult> slots(num_slots);
    std::vector<std::string> failures(num_slots);   // empty string = row present
    auto slot_index = [&](std::size_t s, std::size_t b, std::size_t t) {
        return (s * num_bits + b) * num_trials + t;
    };

    auto run_cell = [&](std::size_t cell) {
        const std::size_t s = cell / num_trials;
        const std::size_t t = cell % num_trials;
        Rng rng = Rng::substream(cfg.seed, s, t);
        TrialContext ctx;
        try {
            ctx = make_trial_context(cfg, rng);
        } catch (const std::exception& e) {
            for (std::size_t b = 0; b < num_bits; ++b)
                failures[slot_index(s, b, t)] = std::string("channel draw failed: ") + e.what();
            return;
        }
        for (std::size_t b = 0; b < num_bits; ++b) {
            const std::size_t idx = slot_index(s, b, t);
            try {
                slots[idx] = evaluate_trial(cfg, ctx, grid[s], static_cast<unsigned>(bits[b]),
                                            static_cast<int>(t));
            } catch (const std::exception& e) {
                failures[idx] = e.what();
            }
        }
    };

    if (threads <= 1) {
        for (std::size_t cell = 0; cell < num_cells; ++cell) run_cell(cell);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t cell = next.fetch_add(1);
                if (cell >= num_cells) return;
                run_cell(cell);
            }
        };
        std::vector<std::thread> pool;
        const int n = std::min<int>(threads, static_cast<int>(num_cells));
        pool.reserve(n);
        for (int w = 0; w < n; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepResult out;
    out.rows.reserve(num_slots);
    for (std::size_t s = 0; s < num_snr; ++s)
        for (std::size_t b = 0; b < num_bits; ++b)
            for (std::size_t t = 0; t < num_trials; ++t) {
                const std::size_t idx = slot_index(s, b, t);
                if (failures[idx].empty()) {
                    out.rows.push_back(slots[idx]);
                } else {
                    out.skipped.push_back(
                        SkipRecord{grid[s], bits[b], static_cast<int>(t), failures[idx]});
                }
            }
    return out;
}

std::vector<SummaryRow> summarize(const std::vector<TrialResult>& rows) {
    std::vector<SummaryRow> out;
    std::size_t i = 0;
    while (i < rows.size()) {
        const double snr = rows[i].snr_db;
        const int bits = rows[i].asic_bits;
        double sum = 0.0, sum_sq = 0.0, ideal = 0.0, half = 0.0;
        std::size_t n = 0;
        while (i < rows.size() && rows[i].snr_db == snr && rows[i].asic_bits == bits) {
            sum += rows[i].sum_rate;
            sum_sq += rows[i].sum_rate * rows[i].sum_rate;
            ideal += rows[i].ideal_sum;
            half += rows[i].half_duplex_sum;
            ++n;
            ++i;
        }
        SummaryRow row;
        row.snr_db = snr;
        row.asic_bits = bits;
        row.mean_sum = sum / n;
        if (n > 1) {
            const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1));
            row.stderr_sum = std::sqrt(var / n);
        }
        row.mean_ideal = ideal / n;
        row.mean_half_duplex = half / n;
        out.push_back(row);
    }
    return out;
}

namespace {

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string format_rate(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

void write_raw_csv(const SweepResult& result, std::ostream& os) {
    os << "trial,snr_db,asic_bits,rate_ki,rate_ij,sum_rate,ideal_sum,half_duplex_sum\n";
    for (const TrialResult& r : result.rows) {
        os << r.trial << ',' << format_g(r.snr_db) << ',' << r.asic_bits << ','
           << format_rate(r.rate_ki) << ',' << format_rate(r.rate_ij) << ','
           << format_rate(r.sum_rate) << ',' << format_rate(r.ideal_sum) << ','
           << format_rate(r.half_duplex_sum) << '\n';
    }
    for (const SkipRecord& s : result.skipped) {
        os << "# skipped trial=" << s.trial << " snr_db=" << format_g(s.snr_db)
           << " asic_bits=" << s.asic_bits << " reason=" << s.reason << '\n';
    }
    os << "# skipped_rows=" << result.skipped.size() << '\n';
}

void write_summary_csv(const SweepResult& result, std::ostream& os) {
    os << "snr_db,asic_bits,mean_sum,stderr_sum,mean_ideal,mean_half_duplex\n";
    for (const SummaryRow& r : summarize(result.rows)) {
        os << format_g(r.snr_db) << ',' << r.asic_bits << ',' << format_rate(r.mean_sum) << ','
           << format_rate(r.stderr_sum) << ',' << format_rate(r.mean_ideal) << ','
           << format_rate(r.mean_half_duplex) << '\n';
    }
}

}  // namespace fdx

#include "fdxsim/link.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fdxsim/beamforming.hpp"
#include "fdxsim/beamtraining.hpp"

namespace fdx {

namespace {

double logdet_hpd(const CMat& a) {
    Eigen::LLT<CMat> llt(a);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("logdet: matrix not positive definite");
    const CMat l = llt.matrixL();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < l.rows(); ++i) acc += std::log(l(i, i).real());
    return 2.0 * acc;
}

double logdet_rate(const CMat& q, const CMat& g_sig) {
    const double rate = (logdet_hpd(q + g_sig) - logdet_hpd(q)) / std::log(2.0);
    return std::max(0.0, rate);
}

void check_budget(const LinkBudget& b, bool uses_si) {
    if (!(b.snr_ij() > 0.0) || !std::isfinite(b.snr_ij()) ||
        !(b.snr_ki() > 0.0) || !std::isfinite(b.snr_ki()))
        throw std::invalid_argument("LinkBudget: desired-link SNRs must be positive and finite");
    if (uses_si) {
        // Linear 0 (snr_ii_db = -inf) is allowed: it models perfect isolation.
        const double si = b.snr_ii();
        if (!(si >= 0.0) || !std::isfinite(si))
            throw std::invalid_argument("LinkBudget: self-interference SNR out of range");
    }
}

}  // namespace

double rate_uplink(const CMat& w_bb, const CMat& w_rf, const CMat& h_ki,
                   const CMat& f_rf_k, const CMat& f_bb_k, const CMat& h_ii,
                   const CMat& f_rf_i, const CMat& f_bb_i, const AsicFilter& asic,
                   const LinkBudget& budget, int ns_i, int ns_j) {
    check_budget(budget, true);
    const CMat w = w_rf * w_bb;                 // Nr_i x ns_i
    const CMat f_k = f_rf_k * f_bb_k;           // Nt_k x ns_i
    const CMat s = w.adjoint() * h_ki * f_k;    // ns_i x ns_i
    const CMat g_sig = (budget.snr_ki() / ns_i) * (s * s.adjoint());

    // Residual SI channel after the analog canceller, seen at baseband.
    const CMat h_delta = effective_channel(w_rf, h_ii, f_rf_i) - asic.replica;
    const CMat t = w_bb.adjoint() * h_delta * f_bb_i;   // ns_i x ns_j
    CMat q = w_bb.adjoint() * (w_rf.adjoint() * w_rf) * w_bb;
    if (budget.snr_ii() > 0.0) q += (budget.snr_ii() / ns_j) * (t * t.adjoint());

    return logdet_rate(q, g_sig);
}

double rate_downlink(const CMat& w_bb_j, const CMat& w_rf_j, const CMat& h_ij,
                     const CMat& f_rf_i, const CMat& f_bb_i,
                     const LinkBudget& budget, int ns_j) {
    check_budget(budget, false);
    const CMat w = w_rf_j * w_bb_j;
    const CMat f_i = f_rf_i * f_bb_i;
    const CMat s = w.adjoint() * h_ij * f_i;
    const CMat g_sig = (budget.snr_ij() / ns_j) * (s * s.adjoint());
    const CMat q = w_bb_j.adjoint() * (w_rf_j.adjoint() * w_rf_j) * w_bb_j;
    return logdet_rate(q, g_sig);
}

LinkRates ideal_fd_rates(const CMat& h_ki, const CMat& f_rf_k, const CMat& w_rf_i,
                         const CMat& h_ij, const CMat& f_rf_i, const CMat& w_rf_j,
                         const LinkBudget& budget, int ns_i, int ns_j) {
    const CMat h_t_ki = effective_channel(w_rf_i, h_ki, f_rf_k);
    const CMat h_t_ij = effective_channel(w_rf_j, h_ij, f_rf_i);

    const CMat w_bb_i = svd_combiner(h_t_ki, ns_i);
    const CMat f_bb_k = normalize_streams(f_rf_k, svd_precoder(h_t_ki, ns_i));
    const CMat w_bb_j = svd_combiner(h_t_ij, ns_j);
    const CMat f_bb_i = normalize_streams(f_rf_i, svd_precoder(h_t_ij, ns_j));

    LinkBudget no_si = budget;
    no_si.snr_ii_db = -std::numeric_limits<double>::infinity();
    const CMat h_ii_zero = CMat::Zero(w_rf_i.rows(), f_rf_i.rows());
    AsicFilter off;
    off.replica = CMat::Zero(w_rf_i.cols(), f_rf_i.cols());

    LinkRates out;
    out.rate_ki = rate_uplink(w_bb_i, w_rf_i, h_ki, f_rf_k, f_bb_k, h_ii_zero,
                              f_rf_i, f_bb_i, off, no_si, ns_i, ns_j);
    out.rate_ij = rate_downlink(w_bb_j, w_rf_j, h_ij, f_rf_i, f_bb_i, no_si, ns_j);
    out.sum = out.rate_ki + out.rate_ij;
    return out;
}

double half_duplex_sum(const LinkRates& ideal) {
    return ideal.sum / 2.0;
}

}  // namespace fdx

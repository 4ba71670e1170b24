// Spectral-efficiency evaluation. Rates are Gaussian mutual information in
// bits/s/Hz with the residual self-interference treated as noise, evaluated
// through the Hermitian-stabilized identity
//   log2 det(I + Q^-1 G) = (logdet(Q + G) - logdet(Q)) / ln 2.

#ifndef FDXSIM_LINK_HPP
#define FDXSIM_LINK_HPP

#include "fdxsim/asic.hpp"
#include "fdxsim/linalg.hpp"

namespace fdx {

/// Link SNRs in dB. Noise power and transmit power enter only through these
/// ratios. snr_ii_db may be -inf to model a self-interference-free system.
struct LinkBudget {
    double snr_ij_db = 0.0;
    double snr_ki_db = 0.0;
    double snr_ii_db = 40.0;

    double snr_ij() const { return db_to_linear(snr_ij_db); }
    double snr_ki() const { return db_to_linear(snr_ki_db); }
    double snr_ii() const { return db_to_linear(snr_ii_db); }
};

struct LinkRates {
    double rate_ki = 0.0;   // k -> i, the full-duplex node's receive link
    double rate_ij = 0.0;   // i -> j
    double sum = 0.0;
};

/// Rate of the k -> i link at the full-duplex receiver. The canceller output
/// is injected after the RF combiner, so the baseband sees the residual
/// channel w_rf^* h_ii f_rf_i - replica through w_bb and f_bb_i.
double rate_uplink(const CMat& w_bb, const CMat& w_rf, const CMat& h_ki,
                   const CMat& f_rf_k, const CMat& f_bb_k, const CMat& h_ii,
                   const CMat& f_rf_i, const CMat& f_bb_i, const AsicFilter& asic,
                   const LinkBudget& budget, int ns_i, int ns_j);

/// Rate of the i -> j link; j is half-duplex and sees no self-interference.
double rate_downlink(const CMat& w_bb_j, const CMat& w_rf_j, const CMat& h_ij,
                     const CMat& f_rf_i, const CMat& f_bb_i,
                     const LinkBudget& budget, int ns_j);

/// Interference-free reference: both links evaluated with singular-vector
/// precoders/combiners on their effective channels and the SI term forced to
/// zero.
LinkRates ideal_fd_rates(const CMat& h_ki, const CMat& f_rf_k, const CMat& w_rf_i,
                         const CMat& h_ij, const CMat& f_rf_i, const CMat& w_rf_j,
                         const LinkBudget& budget, int ns_i, int ns_j);

/// Half-duplex splits the time-frequency resource: half the ideal sum.
double half_duplex_sum(const LinkRates& ideal);

}  // namespace fdx

#endif

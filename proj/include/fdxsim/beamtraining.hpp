// Beamtraining: DFT codebooks, exhaustive beam-pair search that fixes the RF
// beamformers of a link, and formation of the effective (RF-chain sized)
// channels seen through them.

#ifndef FDXSIM_BEAMTRAINING_HPP
#define FDXSIM_BEAMTRAINING_HPP

#include <vector>

#include "fdxsim/linalg.hpp"

namespace fdx {

/// N x N matrix of candidate RF beams; every entry has modulus 1/sqrt(N)
/// (phase-only constraint) and the columns are mutually orthonormal.
struct Codebook {
    CMat beams;
};

/// Outcome of the beam search for one link: RF precoder columns for the
/// transmit side, RF combiner columns for the receive side, and the gains of
/// the selected pairs in non-increasing order (min(nrf_tx, nrf_rx) entries).
struct RfSelection {
    CMat f_rf;                      // Nt x nrf_tx
    CMat w_rf;                      // Nr x nrf_rx
    std::vector<double> pair_gains;
};

/// DFT codebook: column m entry k = exp(j*2*pi*m*k/n) / sqrt(n).
Codebook dft_codebook(int n);

/// Exhaustive pair search over g(m,n) = |w_m^* H f_n|^2 followed by greedy
/// top-K selection with distinct beams per side. When one side has more RF
/// chains than the other, its remaining columns are filled with the
/// next-best unused beams ranked by their best gain against the selected
/// beams of the opposite side. Ties break toward the lowest (rx, tx) index.
RfSelection beam_search(const CMat& h, const Codebook& tx_cb, const Codebook& rx_cb,
                        int nrf_tx, int nrf_rx);

/// w_rf^* * h * f_rf, the channel seen by the baseband stages.
CMat effective_channel(const CMat& w_rf, const CMat& h, const CMat& f_rf);

}  // namespace fdx

#endif

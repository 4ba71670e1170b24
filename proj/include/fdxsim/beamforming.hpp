// Baseband beamformers. Desired links use singular-vector combiners and
// precoders; the full-duplex transmitter uses an MMSE precoder that trades
// energy into the desired channel against energy leaked into the residual
// self-interference channel.

#ifndef FDXSIM_BEAMFORMING_HPP
#define FDXSIM_BEAMFORMING_HPP

#include "fdxsim/linalg.hpp"

namespace fdx {

/// Inputs to the MMSE precoder. h_des rows live at the desired receiver's
/// stream level, h_int rows at the self-interference victim's stream level;
/// both have one column per transmit RF chain.
struct MmseInputs {
    CMat h_des;       // ns_des x nrf_tx
    CMat h_int;       // ns_int x nrf_tx
    double snr_des;   // linear SNR of the desired link
    double snr_si;    // linear self-interference SNR
    int ns;           // streams on the desired link
};

/// The ns strongest left singular vectors of h_tilde (orthonormal columns).
CMat svd_combiner(const CMat& h_tilde, int ns);

/// The ns strongest right singular vectors of h_tilde (orthonormal columns).
CMat svd_precoder(const CMat& h_tilde, int ns);

/// Regularized-inverse precoder:
///   [ (Hd^* Hd + (snr_si/snr_des) Hi^* Hi + (ns/snr_des) I)^-1 Hd^* ][:, 0:ns-1]
/// computed via Hermitian solve; the noise regularizer keeps the system
/// positive definite. Output is not yet power-normalized.
CMat mmse_precoder(const MmseInputs& in);

/// Rescale each baseband column so every effective stream vector
/// rf * bb[:,l] has unit norm (hence ||rf*bb||_F^2 = Ns). Throws
/// std::runtime_error if any effective column is zero.
CMat normalize_streams(const CMat& rf, const CMat& bb);

}  // namespace fdx

#endif

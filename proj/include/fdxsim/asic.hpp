// The analog canceller: a matrix of complex weights that replicates the
// effective self-interference channel with M bits of resolution per
// component. What it cannot express is the residual the baseband
// beamformers have to avoid.

#ifndef FDXSIM_ASIC_HPP
#define FDXSIM_ASIC_HPP

#include "fdxsim/linalg.hpp"
#include "fdxsim/rng.hpp"

namespace fdx {

struct AsicConfig {
    unsigned bits = 0;               // 0 disables the canceller entirely
    double config_error_std = 0.0;   // optional CN(0, std^2) perturbation of the replica
};

struct AsicFilter {
    CMat replica;        // quantized copy of the effective SI channel
    double step = 0.0;   // quantizer step (0 when bits == 0 or input is zero)
    double amplitude = 0.0;
    unsigned bits = 0;
};

/// Midrise-quantize each real/imag component of h onto odd multiples of
/// step/2 inside [-amplitude, amplitude], where step = 2*amplitude / 2^bits.
/// bits == 0 or amplitude == 0 produce the all-zeros matrix.
CMat quantize_matrix(const CMat& h, unsigned bits, double amplitude);

/// Build the canceller for an effective SI channel. The quantizer range
/// anchors to the matrix being replicated: amplitude = max over entries of
/// max(|Re|, |Im|).
AsicFilter configure_asic(const CMat& h_tilde_ii, const AsicConfig& cfg);

/// Same, with the configuration-error hook active: adds CN(0, std^2) noise
/// to every replica entry when cfg.config_error_std > 0.
AsicFilter configure_asic(const CMat& h_tilde_ii, const AsicConfig& cfg, Rng& rng);

/// Residual after cancellation: h_tilde_ii - replica (exact).
CMat residual(const CMat& h_tilde_ii, const AsicFilter& filter);

}  // namespace fdx

#endif

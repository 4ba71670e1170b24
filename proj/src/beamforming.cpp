#include "fdxsim/beamforming.hpp"

#include <stdexcept>

namespace fdx {

CMat svd_combiner(const CMat& h_tilde, int ns) {
    if (ns < 1 || ns > std::min(h_tilde.rows(), h_tilde.cols()))
        throw std::invalid_argument("svd_combiner: ns out of range");
    return svd(h_tilde).u.leftCols(ns);
}

CMat svd_precoder(const CMat& h_tilde, int ns) {
    if (ns < 1 || ns > std::min(h_tilde.rows(), h_tilde.cols()))
        throw std::invalid_argument("svd_precoder: ns out of range");
    return svd(h_tilde).v.leftCols(ns);
}

CMat mmse_precoder(const MmseInputs& in) {
    if (!is_finite(in.h_des) || !is_finite(in.h_int))
        throw std::invalid_argument("mmse_precoder: non-finite input");
    if (!(in.snr_des > 0.0) || !(in.snr_si > 0.0))
        throw std::invalid_argument("mmse_precoder: SNRs must be positive");
    if (in.h_des.cols() != in.h_int.cols())
        throw std::invalid_argument("mmse_precoder: RF chain dimension mismatch");
    if (in.ns < 1 || in.ns > in.h_des.rows())
        throw std::invalid_argument("mmse_precoder: ns out of range");

    const Eigen::Index nrf = in.h_des.cols();
    CMat gram = in.h_des.adjoint() * in.h_des
              + (in.snr_si / in.snr_des) * (in.h_int.adjoint() * in.h_int)
              + (static_cast<double>(in.ns) / in.snr_des) * CMat::Identity(nrf, nrf);
    // Products accumulate tiny asymmetry at high SNR ratios; symmetrize
    // before the Cholesky-based solve.
    gram = 0.5 * (gram + gram.adjoint()).eval();
    const CMat x = solve_hermitian(gram, in.h_des.adjoint());
    return x.leftCols(in.ns);
}

CMat normalize_streams(const CMat& rf, const CMat& bb) {
    if (rf.cols() != bb.rows())
        throw std::invalid_argument("normalize_streams: dimension mismatch");
    CMat out = bb;
    for (Eigen::Index l = 0; l < bb.cols(); ++l) {
        const double norm = (rf * bb.col(l)).norm();
        if (norm == 0.0) throw std::runtime_error("normalize_streams: zero effective column");
        out.col(l) /= norm;
    }
    return out;
}

}  // namespace fdx

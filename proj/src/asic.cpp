#include "fdxsim/asic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdx {

namespace {

double max_component(const CMat& h) {
    double a = 0.0;
    for (Eigen::Index j = 0; j < h.cols(); ++j)
        for (Eigen::Index i = 0; i < h.rows(); ++i) {
            a = std::max(a, std::abs(h(i, j).real()));
            a = std::max(a, std::abs(h(i, j).imag()));
        }
    return a;
}

}  // namespace

CMat quantize_matrix(const CMat& h, unsigned bits, double amplitude) {
    if (!is_finite(h)) throw std::invalid_argument("quantize_matrix: non-finite input");
    if (bits == 0 || amplitude == 0.0) return CMat::Zero(h.rows(), h.cols());

    const double step = 2.0 * amplitude / std::ldexp(1.0, static_cast<int>(bits));
    const double top = amplitude - step / 2.0;
    auto q = [&](double x) {
        const double y = step * (std::floor(x / step) + 0.5);
        return std::clamp(y, -top, top);
    };
    CMat out(h.rows(), h.cols());
    for (Eigen::Index j = 0; j < h.cols(); ++j)
        for (Eigen::Index i = 0; i < h.rows(); ++i)
            out(i, j) = cplx(q(h(i, j).real()), q(h(i, j).imag()));
    return out;
}

AsicFilter configure_asic(const CMat& h_tilde_ii, const AsicConfig& cfg) {
    if (!is_finite(h_tilde_ii)) throw std::invalid_argument("configure_asic: non-finite input");
    AsicFilter f;
    f.bits = cfg.bits;
    f.amplitude = max_component(h_tilde_ii);
    if (cfg.bits == 0 || f.amplitude == 0.0) {
        f.replica = CMat::Zero(h_tilde_ii.rows(), h_tilde_ii.cols());
        f.step = 0.0;
        return f;
    }
    f.step = 2.0 * f.amplitude / std::ldexp(1.0, static_cast<int>(cfg.bits));
    f.replica = quantize_matrix(h_tilde_ii, cfg.bits, f.amplitude);
    return f;
}

AsicFilter configure_asic(const CMat& h_tilde_ii, const AsicConfig& cfg, Rng& rng) {
    AsicFilter f = configure_asic(h_tilde_ii, cfg);
    if (cfg.config_error_std > 0.0) {
        for (Eigen::Index j = 0; j < f.replica.cols(); ++j)
            for (Eigen::Index i = 0; i < f.replica.rows(); ++i)
                f.replica(i, j) += cfg.config_error_std * rng.sample_cn();
    }
    return f;
}

CMat residual(const CMat& h_tilde_ii, const AsicFilter& filter) {
    if (h_tilde_ii.rows() != filter.replica.rows() || h_tilde_ii.cols() != filter.replica.cols())
        throw std::invalid_argument("residual: dimension mismatch");
    return h_tilde_ii - filter.replica;
}

}  // namespace fdx

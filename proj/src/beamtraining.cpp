#include "fdxsim/beamtraining.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdx {

Codebook dft_codebook(int n) {
    if (n < 1) throw std::invalid_argument("dft_codebook: n must be >= 1");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CMat beams(n, n);
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) {
            const double phase = 2.0 * std::numbers::pi * m * k / n;
            beams(k, m) = scale * cplx(std::cos(phase), std::sin(phase));
        }
    return Codebook{std::move(beams)};
}

RfSelection beam_search(const CMat& h, const Codebook& tx_cb, const Codebook& rx_cb,
                        int nrf_tx, int nrf_rx) {
    const int nt = static_cast<int>(tx_cb.beams.cols());
    const int nr = static_cast<int>(rx_cb.beams.cols());
    if (h.cols() != tx_cb.beams.rows() || h.rows() != rx_cb.beams.rows())
        throw std::invalid_argument("beam_search: channel/codebook dimension mismatch");
    if (nrf_tx < 1 || nrf_tx > nt || nrf_rx < 1 || nrf_rx > nr)
        throw std::invalid_argument("beam_search: RF chain count out of range");

    // All pair gains at once: gains(m,n) = |w_m^* H f_n|^2.
    const CMat projected = rx_cb.beams.adjoint() * h * tx_cb.beams;
    const Eigen::MatrixXd gains = projected.cwiseAbs2();

    std::vector<bool> tx_used(nt, false);
    std::vector<bool> rx_used(nr, false);
    std::vector<int> tx_sel;
    std::vector<int> rx_sel;
    std::vector<double> pair_gains;

    // Greedy strongest-pair selection; strict > plus (rx, tx) scan order
    // makes ties land on the lowest indices.
    const int num_pairs = std::min(nrf_tx, nrf_rx);
    for (int p = 0; p < num_pairs; ++p) {
        double best = -1.0;
        int best_m = -1, best_n = -1;
        for (int m = 0; m < nr; ++m) {
            if (rx_used[m]) continue;
            for (int n = 0; n < nt; ++n) {
                if (tx_used[n]) continue;
                if (gains(m, n) > best) {
                    best = gains(m, n);
                    best_m = m;
                    best_n = n;
                }
            }
        }
        rx_used[best_m] = true;
        tx_used[best_n] = true;
        rx_sel.push_back(best_m);
        tx_sel.push_back(best_n);
        pair_gains.push_back(best);
    }

    // The longer side gets extra beams, ranked by their best gain against the
    // already-selected beams of the opposite side; ties resolve toward the
    // lowest (rx, tx) pair. Scanning opposite indices in ascending order with
    // strict > pins the rx component of that pair.
    auto sorted_asc = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    while (static_cast<int>(tx_sel.size()) < nrf_tx) {
        const std::vector<int> rx_asc = sorted_asc(rx_sel);
        double best = -1.0;
        int best_rx = nr, best_n = -1;
        for (int n = 0; n < nt; ++n) {
            if (tx_used[n]) continue;
            double score = -1.0;
            int score_rx = -1;
            for (int m : rx_asc)
                if (gains(m, n) > score) {
                    score = gains(m, n);
                    score_rx = m;
                }
            if (score > best || (score == best && score_rx < best_rx)) {
                best = score;
                best_rx = score_rx;
                best_n = n;
            }
        }
        tx_used[best_n] = true;
        tx_sel.push_back(best_n);
    }
    while (static_cast<int>(rx_sel.size()) < nrf_rx) {
        const std::vector<int> tx_asc = sorted_asc(tx_sel);
        double best = -1.0;
        int best_m = -1;
        for (int m = 0; m < nr; ++m) {
            if (rx_used[m]) continue;
            double score = -1.0;
            for (int n : tx_asc) score = std::max(score, gains(m, n));
            if (score > best) {
                best = score;
                best_m = m;
            }
        }
        rx_used[best_m] = true;
        rx_sel.push_back(best_m);
    }

    RfSelection out;
    out.f_rf.resize(h.cols(), nrf_tx);
    for (int c = 0; c < nrf_tx; ++c) out.f_rf.col(c) = tx_cb.beams.col(tx_sel[c]);
    out.w_rf.resize(h.rows(), nrf_rx);
    for (int c = 0; c < nrf_rx; ++c) out.w_rf.col(c) = rx_cb.beams.col(rx_sel[c]);
    out.pair_gains = std::move(pair_gains);
    return out;
}

CMat effective_channel(const CMat& w_rf, const CMat& h, const CMat& f_rf) {
    if (w_rf.rows() != h.rows() || h.cols() != f_rf.rows())
        throw std::invalid_argument("effective_channel: dimension mismatch");
    return w_rf.adjoint() * h * f_rf;
}

}  // namespace fdx

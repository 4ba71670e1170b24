#include "fdxsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdx {

namespace {

constexpr double kPi = std::numbers::pi;

void check_geometry(const ArrayGeometry& g, const char* who) {
    if (g.num_elements < 1) throw std::invalid_argument(std::string(who) + ": num_elements < 1");
    if (!(g.spacing_wavelengths > 0.0))
        throw std::invalid_argument(std::string(who) + ": spacing must be positive");
    if (std::abs(g.axis.norm() - 1.0) > 1e-9)
        throw std::invalid_argument(std::string(who) + ": axis must be a unit vector");
}

void check_spec(const ClusterSpec& s) {
    if (s.clusters_min < 1 || s.clusters_min > s.clusters_max)
        throw std::invalid_argument("ClusterSpec: bad cluster range");
    if (s.rays_min < 1 || s.rays_min > s.rays_max)
        throw std::invalid_argument("ClusterSpec: bad ray range");
    if (s.angle_min < 0.0 || s.angle_max > kPi || s.angle_min > s.angle_max)
        throw std::invalid_argument("ClusterSpec: angle support must lie in [0, pi]");
}

}  // namespace

CVec steering_vector(const ArrayGeometry& geom, double angle) {
    check_geometry(geom, "steering_vector");
    if (!(angle >= 0.0 && angle <= kPi))
        throw std::invalid_argument("steering_vector: angle outside [0, pi]");
    const int n = geom.num_elements;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CVec a(n);
    for (int k = 0; k < n; ++k) {
        const double phase = 2.0 * kPi * geom.spacing_wavelengths * k * std::cos(angle);
        a(k) = scale * cplx(std::cos(phase), std::sin(phase));
    }
    return a;
}

CMat assemble_sv_channel(const ArrayGeometry& tx, const ArrayGeometry& rx,
                         const std::vector<cplx>& gains,
                         const std::vector<double>& aod,
                         const std::vector<double>& aoa) {
    check_geometry(tx, "assemble_sv_channel(tx)");
    check_geometry(rx, "assemble_sv_channel(rx)");
    if (gains.empty() || gains.size() != aod.size() || gains.size() != aoa.size())
        throw std::invalid_argument("assemble_sv_channel: ray parameter lists must match");
    const double nt = tx.num_elements;
    const double nr = rx.num_elements;
    CMat h = CMat::Zero(rx.num_elements, tx.num_elements);
    for (std::size_t r = 0; r < gains.size(); ++r)
        h += gains[r] * steering_vector(rx, aoa[r]) * steering_vector(tx, aod[r]).adjoint();
    h *= std::sqrt(nt * nr / static_cast<double>(gains.size()));
    return h;
}

ChannelRealization gen_sv_channel(Rng& rng, const ArrayGeometry& tx,
                                  const ArrayGeometry& rx, const ClusterSpec& spec) {
    check_geometry(tx, "gen_sv_channel(tx)");
    check_geometry(rx, "gen_sv_channel(rx)");
    check_spec(spec);

    ChannelMeta meta;
    meta.num_clusters = rng.uniform_int(spec.clusters_min, spec.clusters_max);
    meta.num_rays = rng.uniform_int(spec.rays_min, spec.rays_max);
    const int total = meta.num_clusters * meta.num_rays;
    meta.gains.reserve(total);
    meta.aod.reserve(total);
    meta.aoa.reserve(total);
    // Every ray draws its own angles; draw order (gain, AoD, AoA per ray) is
    // part of the determinism contract.
    for (int r = 0; r < total; ++r) {
        meta.gains.push_back(rng.sample_cn());
        meta.aod.push_back(rng.uniform(spec.angle_min, spec.angle_max));
        meta.aoa.push_back(rng.uniform(spec.angle_min, spec.angle_max));
    }

    ChannelRealization out;
    out.matrix = assemble_sv_channel(tx, rx, meta.gains, meta.aod, meta.aoa);
    out.kind = ChannelKind::Desired;
    out.meta = std::move(meta);
    return out;
}

CMat gen_los_si(const ArrayGeometry& tx, const ArrayGeometry& rx) {
    check_geometry(tx, "gen_los_si(tx)");
    check_geometry(rx, "gen_los_si(rx)");
    const int nt = tx.num_elements;
    const int nr = rx.num_elements;
    CMat h(nr, nt);
    double inv_r_sq_sum = 0.0;
    for (int u = 0; u < nt; ++u) {
        const Eigen::Vector3d pt = tx.origin + u * tx.spacing_wavelengths * tx.axis;
        for (int v = 0; v < nr; ++v) {
            const Eigen::Vector3d pr = rx.origin + v * rx.spacing_wavelengths * rx.axis;
            const double r = (pt - pr).norm();
            if (!(r > 0.0)) throw std::runtime_error("gen_los_si: coincident array elements");
            const double phase = -2.0 * kPi * r;
            h(v, u) = cplx(std::cos(phase), std::sin(phase)) / r;
            inv_r_sq_sum += 1.0 / (r * r);
        }
    }
    // rho makes ||H||_F^2 = Nt*Nr hold exactly, not just in expectation.
    const double rho = std::sqrt(static_cast<double>(nt) * nr / inv_r_sq_sum);
    h *= rho;
    return h;
}

ChannelRealization gen_si_channel(Rng& rng, const SiChannelConfig& cfg,
                                  const ArrayGeometry& tx, const ArrayGeometry& rx) {
    if (!(cfg.array_separation_wavelengths > 0.0))
        throw std::invalid_argument("gen_si_channel: array separation must be positive");
    const double kappa = db_to_linear(cfg.rician_factor_db);
    double w_los = 1.0;
    double w_nlos = 0.0;
    if (std::isfinite(kappa)) {
        w_los = std::sqrt(kappa / (kappa + 1.0));
        w_nlos = std::sqrt(1.0 / (kappa + 1.0));
    }

    ChannelRealization out = gen_sv_channel(rng, tx, rx, cfg.nlos_spec);
    out.matrix = w_los * gen_los_si(tx, rx) + w_nlos * out.matrix;
    out.kind = ChannelKind::SelfInterference;
    return out;
}

}  // namespace fdx

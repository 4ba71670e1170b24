// Channel generation: far-field clustered (Saleh-Valenzuela) channels for the
// desired links, a near-field spherical-wave LOS component between the
// co-located arrays of the full-duplex node, and their Rician combination as
// the self-interference channel. All geometry is expressed in wavelengths.

#ifndef FDXSIM_CHANNEL_HPP
#define FDXSIM_CHANNEL_HPP

#include <vector>

#include "fdxsim/linalg.hpp"
#include "fdxsim/rng.hpp"

namespace fdx {

/// Uniform linear array: element n sits at origin + n * spacing * axis.
struct ArrayGeometry {
    int num_elements = 1;
    double spacing_wavelengths = 0.5;
    Eigen::Vector3d origin = Eigen::Vector3d::Zero();
    Eigen::Vector3d axis = Eigen::Vector3d::UnitX();
};

/// Ranges for the per-realization draws of a clustered channel. Angles are
/// measured from the array axis.
struct ClusterSpec {
    int clusters_min = 1;
    int clusters_max = 6;
    int rays_min = 1;
    int rays_max = 10;
    double angle_min = 0.0;
    double angle_max = 3.14159265358979323846;
};

enum class ChannelKind { Desired, SelfInterference };

/// Parameters drawn for one clustered-channel realization, kept for
/// inspection and for rebuilding the matrix deterministically.
struct ChannelMeta {
    int num_clusters = 0;
    int num_rays = 0;
    std::vector<double> aoa;   // one per ray, cluster-major
    std::vector<double> aod;
    std::vector<cplx> gains;
};

struct ChannelRealization {
    CMat matrix;   // num_rx x num_tx
    ChannelKind kind = ChannelKind::Desired;
    ChannelMeta meta;
};

struct SiChannelConfig {
    double rician_factor_db = 20.0;
    double array_separation_wavelengths = 10.0;
    ClusterSpec nlos_spec{1, 3, 1, 6};
};

/// Unit-norm ULA response: entry n = exp(j*2*pi*spacing*n*cos(angle)) / sqrt(N).
/// angle must lie in [0, pi].
CVec steering_vector(const ArrayGeometry& geom, double angle);

/// Deterministic assembly of a clustered channel from already-drawn ray
/// parameters (gains/aod/aoa run cluster-major, one entry per ray).
CMat assemble_sv_channel(const ArrayGeometry& tx, const ArrayGeometry& rx,
                         const std::vector<cplx>& gains,
                         const std::vector<double>& aod,
                         const std::vector<double>& aoa);

/// Clustered far-field channel draw. Cluster/ray counts are uniform over the
/// spec ranges, angles uniform over the angle support, ray gains CN(0,1).
/// The sqrt(Nt*Nr / (rays*clusters)) prefactor gives E||H||_F^2 = Nt*Nr.
ChannelRealization gen_sv_channel(Rng& rng, const ArrayGeometry& tx,
                                  const ArrayGeometry& rx, const ClusterSpec& spec);

/// Near-field LOS matrix between two co-located arrays: entry (v,u) is
/// (rho / r_uv) * exp(-j*2*pi*r_uv) for the distance r_uv (in wavelengths)
/// between transmit element u and receive element v, with rho set so that
/// ||H||_F^2 = Nt*Nr exactly. Throws std::runtime_error if any element pair
/// coincides.
CMat gen_los_si(const ArrayGeometry& tx, const ArrayGeometry& rx);

/// Rician self-interference channel, kappa converted from dB to linear:
/// H = sqrt(kappa/(kappa+1)) * H_los + sqrt(1/(kappa+1)) * H_nlos.
ChannelRealization gen_si_channel(Rng& rng, const SiChannelConfig& cfg,
                                  const ArrayGeometry& tx, const ArrayGeometry& rx);

}  // namespace fdx

#endif

// SPDX-License-Identifier: Apache-2.0
//
// chanbound: Cramer-Rao error bounds for mobile MIMO-OFDM channel
// estimation, interpolation and prediction
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "chanbound/types.hpp"

namespace chanbound {

/// Slots of the real parameter vector, per path. A Z-path channel has 6Z
/// real parameters ordered path-major:
///   [Re(alpha), Im(alpha), rx_spatial_freq, tx_spatial_freq,
///    doppler_freq, delay_freq] for path 0, then path 1, ...
inline constexpr int kParamsPerPath = 6;

enum class ParamSlot : int {
    amp_re = 0,
    amp_im = 1,
    rx_freq = 2,
    tx_freq = 3,
    doppler = 4,
    delay = 5,
};

/// Flattens a realization into the 6Z parameter vector (lossless).
Eigen::VectorXd pack_parameters(const ChannelRealization& realization);

/// Inverse of pack_parameters. Throws StructuralError if the length is not
/// a positive multiple of 6.
ChannelRealization unpack_parameters(const Eigen::VectorXd& theta);

enum class FimMode { full, block_diagonal };

/// Real symmetric 6Z x 6Z Fisher information matrix for the pilot-grid
/// observation model, together with the noise variance it was built with.
struct FisherMatrix {
    Eigen::MatrixXd matrix;
    FimMode mode = FimMode::full;
    double sigma2 = 1.0;

    int dim() const { return static_cast<int>(matrix.rows()); }
};

using Vector6cd = Eigen::Matrix<std::complex<double>, 6, 1>;

/// Partial derivatives of channel_entry with respect to the 6 parameters of
/// path `path`, at receive/transmit elements (rx, tx) and absolute indices
/// (t_idx, f_idx). With e the path's phase factor:
///
///   [e, je, -j*rx*alpha*e, -j*tx*alpha*e, j*t_idx*alpha*e, -j*f_idx*alpha*e]
Vector6cd gradient(const ChannelRealization& realization, int path, int rx,
                   int tx, long t_idx, long f_idx);

/// Full 6Z gradient row (all paths stacked) at one sample point.
Eigen::VectorXcd full_gradient(const ChannelRealization& realization, int rx,
                               int tx, long t_idx, long f_idx);

/// Jacobian of the pilot observations: one row per sample over the pilot
/// grid and all antenna pairs, one column per parameter. Row order is
/// (p, q, rx, tx) lexicographic.
Eigen::MatrixXcd pilot_jacobian(const ChannelRealization& realization,
                                const SystemConfig& config);

/// Exact Fisher information matrix over the pilot grid:
///   J_ij = (2/sigma2) * Re sum_samples (dh/dtheta_i)(dh/dtheta_j)^*
/// with sigma2 = noise.sigma2(Z). Symmetric by construction.
FisherMatrix fim_exact(const ChannelRealization& realization,
                       const SystemConfig& config, const NoiseModel& noise);

/// Per-path block diagonal of fim_exact: cross-path 6x6 blocks are zeroed,
/// modelling uncorrelated scatterers.
FisherMatrix fim_block_diagonal(const ChannelRealization& realization,
                                const SystemConfig& config,
                                const NoiseModel& noise);

/// Inverts a Fisher matrix through a symmetric LDLT factorization. Throws
/// SingularFim when the condition estimate exceeds cond_limit; a singular
/// information matrix means some parameter is unidentifiable and the bound
/// is unbounded, so no regularized or pseudo inverse is attempted.
Eigen::MatrixXd invert_fim(const FisherMatrix& fim, double cond_limit = 1e12);

/// Parameter slots (subset of 0..5) that can influence the observations and
/// prediction targets for this geometry. A single-element array carries no
/// angle information: with rx_antennas == 1 the receive spatial frequency
/// drops out of the model entirely (every phase factor multiplies index 0),
/// and likewise on the transmit side. All other slots always remain.
std::vector<int> identifiable_slots(const SystemConfig& config);

/// Rows/columns of `fim` restricted to the given per-path slots (applied to
/// each of the Z blocks).
Eigen::MatrixXd select_slots(const Eigen::MatrixXd& fim,
                             const std::vector<int>& slots, int num_paths);

/// Mean-square-error bound on the channel matrix at (t_idx, f_idx):
///   sum_{rx,tx} g * finv * g^H
/// where g is the 6Z gradient row and finv comes from invert_fim on a
/// matching realization/config. The quadratic form is mathematically real;
/// an imaginary residue above 1e-10 relative signals an assembly bug and
/// throws NumericalError.
double mseb_point(const ChannelRealization& realization,
                  const SystemConfig& config, const Eigen::MatrixXd& finv,
                  long t_idx, long f_idx);

/// mseb_point on a reduced parameter set: finv must be the inverse of
/// select_slots(fim, slots, Z). Exact whenever the removed slots are
/// structurally absent from the model (see identifiable_slots).
double mseb_point_slots(const ChannelRealization& realization,
                        const SystemConfig& config,
                        const Eigen::MatrixXd& finv,
                        const std::vector<int>& slots, long t_idx, long f_idx);

/// MSE bound normalized by the expected channel power N*M*Z.
double nmse(double mseb, int rx_antennas, int tx_antennas, int num_paths);

/// Root NMSE, the usual reporting metric.
double rnmse(double nmse_value);

} // namespace chanbound

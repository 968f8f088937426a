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

#include "chanbound/types.hpp"

namespace chanbound {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

/// Asymptotic per-path information core. The full per-path FIM block in the
/// large-sample regime is scale * K with scale = N*M*P*Q / sigma2; K depends
/// only on the system geometry, never on the channel parameters.
struct AsymptoticCore {
    Matrix6d k;
    Matrix6d k_inv;
    double scale = 0.0; ///< N*M*P*Q / sigma2
};

/// The 6x6 asymptotic core K. The amplitude block is 2*I2; the remaining
/// 4x4 block is D*A*D with D = diag(N, M, P*U_t, Q*U_f) and A the constant
/// matrix with diagonal 2/3 and off-diagonal entries +-1/2.
Matrix6d k_matrix(const SystemConfig& config);

/// Closed-form inverse of k_matrix: amplitude block (1/2)*I2, lower block
/// D^-1 * (6*I - (18/13)*e*e^T) * D^-1 with e = (1, 1, -1, 1).
Matrix6d k_inverse(const SystemConfig& config);

/// Finite-sample variant of K: identical block structure, but with the
/// exact index sums in place of their large-N limits, e.g. the receive
/// angle diagonal is (N-1)(2N-1)/3 instead of 2N^2/3 and first moments use
/// (N-1)/2 instead of N/2. scale * k_matrix_finite equals the ensemble mean
/// of the exact single-path FIM over unit-power amplitudes.
Matrix6d k_matrix_finite(const SystemConfig& config);

/// Convenience bundle of K, its closed-form inverse and the information
/// scale for noise variance sigma2.
AsymptoticCore asymptotic_core(const SystemConfig& config, double sigma2);

/// Closed-form asymptotic mean-square-error bound at absolute symbol index
/// t_idx and absolute subcarrier index f_idx for a Z-path channel:
///
///   (Z^2 * s2 / (13*P*Q)) * [44 - 36a + 60a^2 - 36b + 60b^2 - 36ab]
///
/// with a = t_idx/(P*U_t), b = f_idx/(Q*U_f) and s2 the single-path noise
/// variance 1/snr. Unit path power is baked in; there is no per-path power
/// knob at this level.
double amseb(long t_idx, long f_idx, int num_paths, const NoiseModel& noise,
             const SystemConfig& config);

/// amseb normalized by the expected channel power N*M*Z.
double anmseb(long t_idx, long f_idx, int num_paths, const NoiseModel& noise,
              const SystemConfig& config);

} // namespace chanbound

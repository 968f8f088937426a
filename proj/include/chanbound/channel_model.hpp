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
#include <cstdint>
#include <vector>

#include "chanbound/types.hpp"

namespace chanbound {

/// ULA array response for spatial frequency mu: element k is e^{-j*k*mu},
/// k = 0 .. n_elem-1.
Eigen::VectorXcd steering_vector(double spatial_freq, int n_elem);

/// Sampled frequency response seen by receive element `rx` from transmit
/// element `tx` (both 0-based) at absolute symbol index t_idx and absolute
/// subcarrier index f_idx:
///
///   h = sum_z alpha_z * e^{j(t_idx*nu_z - rx*mu_r_z - tx*mu_t_z - f_idx*eta_z)}
std::complex<double> channel_entry(const ChannelRealization& realization,
                                   int rx, int tx, long t_idx, long f_idx);

/// Full rx_antennas x tx_antennas channel matrix at (t_idx, f_idx); entry
/// (n, m) equals channel_entry(realization, n, m, t_idx, f_idx).
Eigen::MatrixXcd channel_matrix(const ChannelRealization& realization,
                                const SystemConfig& config, long t_idx,
                                long f_idx);

/// Noisy pilot-grid channel samples, indexed by receive element, transmit
/// element and pilot counters (p, q). Storage is row-major in that order.
struct PilotObservations {
    int rx_antennas = 0;
    int tx_antennas = 0;
    int time_pilots = 0;
    int freq_pilots = 0;
    std::vector<std::complex<double>> samples;

    const std::complex<double>& at(int rx, int tx, int p, int q) const {
        return samples[static_cast<std::size_t>(
            ((rx * tx_antennas + tx) * time_pilots + p) * freq_pilots + q)];
    }
};

/// Draws h + w on the pilot grid, w i.i.d. circular complex Gaussian with
/// variance noise.sigma2(Z) per sample. Pilot (p, q) is evaluated at
/// t_idx = p*U_t, f_idx = q*U_f. Deterministic for a given seed.
PilotObservations observe(const ChannelRealization& realization,
                          const SystemConfig& config, const NoiseModel& noise,
                          std::uint64_t seed);

/// Expected squared Frobenius norm of the channel matrix for unit-power
/// path amplitudes: N*M*Z. Normalizes MSE bounds into NMSE.
double frobenius_normalizer(int rx_antennas, int tx_antennas, int num_paths);

} // namespace chanbound

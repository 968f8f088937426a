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

#include "chanbound/crlb_asymptotic.hpp"

#include <array>

#include "chanbound/errors.hpp"

namespace chanbound {

namespace {

// Sign pattern of the coupled 4x4 block: entry (i, j) of its scale-free
// core is eps_i * eps_j / 2 off the diagonal. The minus signs trace back to
// the Doppler derivative carrying +j while the angle and delay derivatives
// carry -j.
constexpr std::array<double, 4> kEps = {1.0, 1.0, -1.0, 1.0};

std::array<double, 4> block_scales(const SystemConfig& c) {
    return {static_cast<double>(c.rx_antennas),
            static_cast<double>(c.tx_antennas),
            static_cast<double>(c.time_pilots) * c.time_pilot_spacing,
            static_cast<double>(c.freq_pilots) * c.freq_pilot_spacing};
}

} // namespace

Matrix6d k_matrix(const SystemConfig& config) {
    const auto d = block_scales(config);
    Matrix6d k = Matrix6d::Zero();
    k(0, 0) = 2.0;
    k(1, 1) = 2.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            k(2 + i, 2 + j) = i == j
                                  ? 2.0 * d[i] * d[i] / 3.0
                                  : 0.5 * kEps[i] * kEps[j] * d[i] * d[j];
    return k;
}

Matrix6d k_inverse(const SystemConfig& config) {
    const auto d = block_scales(config);
    Matrix6d inv = Matrix6d::Zero();
    inv(0, 0) = 0.5;
    inv(1, 1) = 0.5;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            inv(2 + i, 2 + j) =
                i == j ? 60.0 / (13.0 * d[i] * d[i])
                       : -18.0 * kEps[i] * kEps[j] / (13.0 * d[i] * d[j]);
    return inv;
}

Matrix6d k_matrix_finite(const SystemConfig& config) {
    // Exact index sums: sum k = X(X-1)/2 and sum k^2 = X(X-1)(2X-1)/6 over
    // k = 0..X-1, divided by the X that joins the information scale.
    const std::array<double, 4> counts = {
        static_cast<double>(config.rx_antennas),
        static_cast<double>(config.tx_antennas),
        static_cast<double>(config.time_pilots),
        static_cast<double>(config.freq_pilots)};
    const std::array<double, 4> units = {
        1.0, 1.0, static_cast<double>(config.time_pilot_spacing),
        static_cast<double>(config.freq_pilot_spacing)};

    Matrix6d k = Matrix6d::Zero();
    k(0, 0) = 2.0;
    k(1, 1) = 2.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) {
                const double x = counts[i];
                k(2 + i, 2 + i) =
                    (x - 1.0) * (2.0 * x - 1.0) / 3.0 * units[i] * units[i];
            } else {
                k(2 + i, 2 + j) = 0.5 * kEps[i] * kEps[j] *
                                  (counts[i] - 1.0) * units[i] *
                                  (counts[j] - 1.0) * units[j];
            }
        }
    return k;
}

AsymptoticCore asymptotic_core(const SystemConfig& config, double sigma2) {
    if (sigma2 <= 0.0)
        throw StructuralError("noise variance must be positive");
    AsymptoticCore core;
    core.k = k_matrix(config);
    core.k_inv = k_inverse(config);
    core.scale = static_cast<double>(config.rx_antennas) *
                 config.tx_antennas * config.time_pilots *
                 config.freq_pilots / sigma2;
    return core;
}

double amseb(long t_idx, long f_idx, int num_paths, const NoiseModel& noise,
             const SystemConfig& config) {
    if (t_idx < 0 || f_idx < 0)
        throw StructuralError("evaluation indices must be >= 0");
    if (num_paths < 1)
        throw StructuralError("path count must be >= 1");
    const double a = static_cast<double>(t_idx) /
                     (static_cast<double>(config.time_pilots) *
                      config.time_pilot_spacing);
    const double b = static_cast<double>(f_idx) /
                     (static_cast<double>(config.freq_pilots) *
                      config.freq_pilot_spacing);
    const double bracket =
        44.0 - 36.0 * a + 60.0 * a * a - 36.0 * b + 60.0 * b * b - 36.0 * a * b;
    const double z = static_cast<double>(num_paths);
    return z * z * noise.sigma2_single() * bracket /
           (13.0 * config.time_pilots * config.freq_pilots);
}

double anmseb(long t_idx, long f_idx, int num_paths, const NoiseModel& noise,
              const SystemConfig& config) {
    return amseb(t_idx, f_idx, num_paths, noise, config) /
           (static_cast<double>(config.rx_antennas) * config.tx_antennas *
            num_paths);
}

} // namespace chanbound

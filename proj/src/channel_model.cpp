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

#include "chanbound/channel_model.hpp"

#include <cmath>
#include <random>

#include "chanbound/errors.hpp"

namespace chanbound {

Eigen::VectorXcd steering_vector(double spatial_freq, int n_elem) {
    if (n_elem < 1)
        throw StructuralError("steering vector needs at least one element");
    Eigen::VectorXcd a(n_elem);
    for (int k = 0; k < n_elem; ++k)
        a(k) = std::polar(1.0, -static_cast<double>(k) * spatial_freq);
    return a;
}

std::complex<double> channel_entry(const ChannelRealization& realization,
                                   int rx, int tx, long t_idx, long f_idx) {
    std::complex<double> h{0.0, 0.0};
    for (const PathParameters& path : realization.paths) {
        const double phase = static_cast<double>(t_idx) * path.doppler_freq -
                             rx * path.rx_spatial_freq -
                             tx * path.tx_spatial_freq -
                             static_cast<double>(f_idx) * path.delay_freq;
        h += path.amplitude * std::polar(1.0, phase);
    }
    return h;
}

Eigen::MatrixXcd channel_matrix(const ChannelRealization& realization,
                                const SystemConfig& config, long t_idx,
                                long f_idx) {
    const int n = config.rx_antennas;
    const int m = config.tx_antennas;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, m);
    for (const PathParameters& path : realization.paths) {
        const Eigen::VectorXcd ar = steering_vector(path.rx_spatial_freq, n);
        const Eigen::VectorXcd at = steering_vector(path.tx_spatial_freq, m);
        const double phase = static_cast<double>(t_idx) * path.doppler_freq -
                             static_cast<double>(f_idx) * path.delay_freq;
        h += (path.amplitude * std::polar(1.0, phase)) *
             (ar * at.transpose());
    }
    return h;
}

PilotObservations observe(const ChannelRealization& realization,
                          const SystemConfig& config, const NoiseModel& noise,
                          std::uint64_t seed) {
    PilotObservations obs;
    obs.rx_antennas = config.rx_antennas;
    obs.tx_antennas = config.tx_antennas;
    obs.time_pilots = config.time_pilots;
    obs.freq_pilots = config.freq_pilots;
    obs.samples.resize(static_cast<std::size_t>(config.rx_antennas) *
                       config.tx_antennas * config.time_pilots *
                       config.freq_pilots);

    const double sigma2 = noise.sigma2(realization.num_paths());
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2 / 2.0));

    std::size_t idx = 0;
    for (int rx = 0; rx < config.rx_antennas; ++rx)
        for (int tx = 0; tx < config.tx_antennas; ++tx)
            for (int p = 0; p < config.time_pilots; ++p)
                for (int q = 0; q < config.freq_pilots; ++q) {
                    const long t = static_cast<long>(p) * config.time_pilot_spacing;
                    const long f = static_cast<long>(q) * config.freq_pilot_spacing;
                    std::complex<double> sample =
                        channel_entry(realization, rx, tx, t, f);
                    if (sigma2 > 0.0)
                        sample += std::complex<double>(gauss(rng), gauss(rng));
                    obs.samples[idx++] = sample;
                }
    return obs;
}

double frobenius_normalizer(int rx_antennas, int tx_antennas, int num_paths) {
    if (rx_antennas < 1 || tx_antennas < 1 || num_paths < 1)
        throw StructuralError("normalizer arguments must be >= 1");
    return static_cast<double>(rx_antennas) * tx_antennas * num_paths;
}

} // namespace chanbound

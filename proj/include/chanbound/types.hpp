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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chanbound {

/// Deterministic geometry of the MIMO-OFDM system: antenna counts, pilot
/// grids and the bandwidth-derived spacings.
///
/// The derived fields (subcarrier_spacing_hz, time_pilot_spacing,
/// freq_pilot_spacing and, when not supplied, symbol_period_s) are filled in
/// by make_system_config(); they satisfy
///
///   subcarrier_spacing_hz = bandwidth_hz / num_subcarriers
///   freq_pilot_spacing    = ceil(num_subcarriers / freq_pilots)
///   time_pilot_spacing    = ceil(training_symbols / time_pilots)
///
/// exactly. Pilot counter (p, q) maps to absolute sample indices
/// t_idx = p * time_pilot_spacing, f_idx = q * freq_pilot_spacing.
struct SystemConfig {
    int rx_antennas = 1;    ///< receive array elements (ULA)
    int tx_antennas = 1;    ///< transmit array elements (ULA)
    int num_subcarriers = 1;///< total used subcarriers
    double bandwidth_hz = 0.0;
    int training_symbols = 1; ///< OFDM symbols in the training segment
    int time_pilots = 1;      ///< pilot symbols available (P)
    int freq_pilots = 1;      ///< pilot subcarriers per symbol (Q)
    double rx_spacing = 0.5;  ///< receive element spacing, wavelengths
    double tx_spacing = 0.5;  ///< transmit element spacing, wavelengths
    double spatial_step = 0.2;///< mobile displacement per symbol, wavelengths

    // derived
    double symbol_period_s = 0.0;
    double subcarrier_spacing_hz = 0.0;
    int time_pilot_spacing = 1; ///< symbols between adjacent pilot symbols
    int freq_pilot_spacing = 1; ///< subcarriers between adjacent pilots
};

/// Builds a SystemConfig, computing the derived spacings and checking the
/// structural invariants. When symbol_period_s is not given it defaults to
/// num_subcarriers / bandwidth_hz (cyclic prefix ignored).
///
/// Throws StructuralError on an invalid combination.
SystemConfig make_system_config(int rx_antennas, int tx_antennas,
                                int num_subcarriers, double bandwidth_hz,
                                int training_symbols, int time_pilots,
                                int freq_pilots, double rx_spacing = 0.5,
                                double tx_spacing = 0.5,
                                double spatial_step = 0.2,
                                std::optional<double> symbol_period_s = {});

/// How the Doppler term of the aliasing constraint interprets its input.
/// The published inequality 2*dt*omega*U_t <= 1 is stated for a "radian"
/// Doppler frequency, but typical parameter choices only satisfy it when
/// omega is measured in cycles. `cycles` (the default) converts the rad/s
/// input to cycles before applying the inequality; `radians` applies it
/// literally and is a factor 2*pi stricter.
enum class DopplerAliasRule { cycles, radians };

/// Outcome of validate_config: the derived spacings plus the two aliasing
/// left-hand sides (each must be <= 1).
struct ValidationReport {
    double subcarrier_spacing_hz = 0.0;
    int freq_pilot_spacing = 1;
    int time_pilot_spacing = 1;
    double freq_aliasing_lhs = 0.0; ///< delta_f * tau_max * U_f
    double time_aliasing_lhs = 0.0; ///< 2 * delta_t * f_max * U_t
};

/// Checks the structural invariants of `config` and the anti-aliasing
/// conditions for a channel with maximum delay tau_max_s (seconds) and
/// maximum Doppler magnitude omega_max_rad_s (rad/s).
///
/// Throws StructuralError or AliasingViolation; returns the derived
/// quantities on success.
ValidationReport validate_config(const SystemConfig& config, double tau_max_s,
                                 double omega_max_rad_s,
                                 DopplerAliasRule rule = DopplerAliasRule::cycles);

/// One propagation path of the ray-based channel model. The four
/// frequencies are phase increments: radians per receive element, per
/// transmit element, per OFDM symbol and per subcarrier.
struct PathParameters {
    std::complex<double> amplitude{0.0, 0.0};
    double rx_spatial_freq = 0.0; ///< 2*pi*rx_spacing*sin(aoa)
    double tx_spatial_freq = 0.0; ///< 2*pi*tx_spacing*sin(aod)
    double doppler_freq = 0.0;    ///< symbol_period * omega
    double delay_freq = 0.0;      ///< 2*pi*subcarrier_spacing*delay
};

/// A multipath channel: the full parameter set of Z >= 1 paths.
struct ChannelRealization {
    std::vector<PathParameters> paths;

    int num_paths() const { return static_cast<int>(paths.size()); }
};

/// White circular complex Gaussian observation noise. The SNR convention
/// keeps comparisons fair across path counts: a Z-path channel at linear
/// SNR s has noise variance Z/s per complex sample.
struct NoiseModel {
    double snr = 1.0; ///< linear signal-to-noise ratio

    static NoiseModel from_snr_db(double snr_db);

    double sigma2_single() const { return 1.0 / snr; }
    double sigma2(int num_paths) const { return static_cast<double>(num_paths) / snr; }
};

/// Wraps an angle to [-pi, pi).
double wrap_angle(double radians);

/// Serializes a SystemConfig to a JSON object (text form); all fields are
/// written, including derived ones.
std::string system_config_to_json(const SystemConfig& config);

/// Parses a SystemConfig from JSON text; derived fields may be omitted and
/// are recomputed, but when present they must match exactly.
SystemConfig system_config_from_json(const std::string& json_text);

} // namespace chanbound

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

#include "chanbound/types.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "chanbound/errors.hpp"
#include "json.hpp"

namespace chanbound {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

AliasingViolation::AliasingViolation(std::string constraint_, double value_,
                                     double limit_)
    : Error("aliasing violation: " + constraint_ + " = " +
            std::to_string(value_) + " exceeds " + std::to_string(limit_)),
      constraint(std::move(constraint_)), value(value_), limit(limit_) {}

SingularFim::SingularFim(double condition_estimate_)
    : Error("singular Fisher information matrix (condition estimate " +
            std::to_string(condition_estimate_) + ")"),
      condition_estimate(condition_estimate_) {}

SystemConfig make_system_config(int rx_antennas, int tx_antennas,
                                int num_subcarriers, double bandwidth_hz,
                                int training_symbols, int time_pilots,
                                int freq_pilots, double rx_spacing,
                                double tx_spacing, double spatial_step,
                                std::optional<double> symbol_period_s) {
    SystemConfig c;
    c.rx_antennas = rx_antennas;
    c.tx_antennas = tx_antennas;
    c.num_subcarriers = num_subcarriers;
    c.bandwidth_hz = bandwidth_hz;
    c.training_symbols = training_symbols;
    c.time_pilots = time_pilots;
    c.freq_pilots = freq_pilots;
    c.rx_spacing = rx_spacing;
    c.tx_spacing = tx_spacing;
    c.spatial_step = spatial_step;

    if (rx_antennas < 1 || tx_antennas < 1)
        throw StructuralError("antenna counts must be >= 1");
    if (time_pilots < 1 || freq_pilots < 1)
        throw StructuralError("pilot counts must be >= 1");
    if (bandwidth_hz <= 0.0)
        throw StructuralError("bandwidth must be positive");
    if (num_subcarriers < freq_pilots)
        throw StructuralError("more pilot subcarriers than subcarriers");
    if (training_symbols < time_pilots)
        throw StructuralError("more pilot symbols than training symbols");

    c.subcarrier_spacing_hz = bandwidth_hz / num_subcarriers;
    c.freq_pilot_spacing = ceil_div(num_subcarriers, freq_pilots);
    c.time_pilot_spacing = ceil_div(training_symbols, time_pilots);
    c.symbol_period_s =
        symbol_period_s.value_or(num_subcarriers / bandwidth_hz);
    if (c.symbol_period_s <= 0.0)
        throw StructuralError("symbol period must be positive");
    return c;
}

ValidationReport validate_config(const SystemConfig& config, double tau_max_s,
                                 double omega_max_rad_s,
                                 DopplerAliasRule rule) {
    // Re-derive through the factory so every structural invariant is checked
    // and the derived spacings are consistent.
    SystemConfig derived = make_system_config(
        config.rx_antennas, config.tx_antennas, config.num_subcarriers,
        config.bandwidth_hz, config.training_symbols, config.time_pilots,
        config.freq_pilots, config.rx_spacing, config.tx_spacing,
        config.spatial_step, config.symbol_period_s);
    if (derived.subcarrier_spacing_hz != config.subcarrier_spacing_hz ||
        derived.freq_pilot_spacing != config.freq_pilot_spacing ||
        derived.time_pilot_spacing != config.time_pilot_spacing)
        throw StructuralError("derived pilot spacings are inconsistent");
    if (tau_max_s < 0.0 || omega_max_rad_s < 0.0)
        throw StructuralError("delay and Doppler magnitudes must be >= 0");

    ValidationReport report;
    report.subcarrier_spacing_hz = derived.subcarrier_spacing_hz;
    report.freq_pilot_spacing = derived.freq_pilot_spacing;
    report.time_pilot_spacing = derived.time_pilot_spacing;

    report.freq_aliasing_lhs = derived.subcarrier_spacing_hz * tau_max_s *
                               derived.freq_pilot_spacing;
    const double doppler = rule == DopplerAliasRule::cycles
                               ? omega_max_rad_s / (2.0 * std::numbers::pi)
                               : omega_max_rad_s;
    report.time_aliasing_lhs =
        2.0 * derived.symbol_period_s * doppler * derived.time_pilot_spacing;

    if (report.freq_aliasing_lhs > 1.0)
        throw AliasingViolation("delta_f * tau_max * U_f",
                                report.freq_aliasing_lhs, 1.0);
    if (report.time_aliasing_lhs > 1.0)
        throw AliasingViolation("2 * delta_t * f_doppler_max * U_t",
                                report.time_aliasing_lhs, 1.0);
    return report;
}

NoiseModel NoiseModel::from_snr_db(double snr_db) {
    return NoiseModel{std::pow(10.0, snr_db / 10.0)};
}

double wrap_angle(double radians) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double wrapped = std::fmod(radians + std::numbers::pi, two_pi);
    if (wrapped < 0.0)
        wrapped += two_pi;
    return wrapped - std::numbers::pi;
}

std::string system_config_to_json(const SystemConfig& config) {
    nlohmann::json j;
    j["rx_antennas"] = config.rx_antennas;
    j["tx_antennas"] = config.tx_antennas;
    j["subcarriers"] = config.num_subcarriers;
    j["bandwidth_hz"] = config.bandwidth_hz;
    j["training_symbols"] = config.training_symbols;
    j["time_pilots"] = config.time_pilots;
    j["freq_pilots"] = config.freq_pilots;
    j["rx_spacing_wavelengths"] = config.rx_spacing;
    j["tx_spacing_wavelengths"] = config.tx_spacing;
    j["spatial_step_wavelengths"] = config.spatial_step;
    j["symbol_period_s"] = config.symbol_period_s;
    j["subcarrier_spacing_hz"] = config.subcarrier_spacing_hz;
    j["time_pilot_spacing"] = config.time_pilot_spacing;
    j["freq_pilot_spacing"] = config.freq_pilot_spacing;
    return j.dump();
}

SystemConfig system_config_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("bad system config JSON: ") +
                              e.what());
    }
    std::optional<double> period;
    if (j.contains("symbol_period_s"))
        period = j.at("symbol_period_s").get<double>();
    SystemConfig c;
    try {
        c = make_system_config(
            j.at("rx_antennas").get<int>(), j.at("tx_antennas").get<int>(),
            j.at("subcarriers").get<int>(), j.at("bandwidth_hz").get<double>(),
            j.at("training_symbols").get<int>(), j.at("time_pilots").get<int>(),
            j.at("freq_pilots").get<int>(),
            j.value("rx_spacing_wavelengths", 0.5),
            j.value("tx_spacing_wavelengths", 0.5),
            j.value("spatial_step_wavelengths", 0.2), period);
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("bad system config JSON: ") +
                              e.what());
    }
    // Redundant derived fields, when present, must agree exactly.
    if (j.contains("subcarrier_spacing_hz") &&
        j.at("subcarrier_spacing_hz").get<double>() != c.subcarrier_spacing_hz)
        throw StructuralError("subcarrier_spacing_hz does not match B/N_sc");
    if (j.contains("freq_pilot_spacing") &&
        j.at("freq_pilot_spacing").get<int>() != c.freq_pilot_spacing)
        throw StructuralError("freq_pilot_spacing does not match ceil(N_sc/Q)");
    if (j.contains("time_pilot_spacing") &&
        j.at("time_pilot_spacing").get<int>() != c.time_pilot_spacing)
        throw StructuralError(
            "time_pilot_spacing does not match ceil(N_pilot/P)");
    return c;
}

} // namespace chanbound

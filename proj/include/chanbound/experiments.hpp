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

#include <array>
#include <string>
#include <vector>

#include "chanbound/montecarlo.hpp"
#include "chanbound/result_table.hpp"
#include "chanbound/types.hpp"

namespace chanbound {

/// Where horizon 0 sits on the absolute symbol axis. `last_pilot` (default)
/// anchors it at the final training pilot, (P-1)*U_t, so positive horizons
/// are genuine extrapolation; `window_start` anchors at symbol 0.
enum class HorizonAnchor { last_pilot, window_start };

/// Inclusive sweep over prediction horizons, in wavelengths.
struct HorizonSweep {
    double start = 0.0;
    double stop = 2.0;
    double step = 0.2;
};

/// Sweep axes for the training-size and path-count experiments.
struct SweepSpec {
    std::vector<int> time_pilot_counts = {25, 50, 75, 100, 125, 150, 175, 200};
    std::vector<std::array<int, 2>> antenna_sets = {{1, 1}, {2, 2}, {4, 4}};
    std::vector<int> path_counts = {1, 2, 3, 4, 5, 6, 7, 8};
    double horizon_lambda = 0.0; ///< fixed horizon for the training-size sweep
    double path_horizon_lambda = 1.0; ///< fixed horizon for the path sweep
};

/// Full description of one experiment run. Serializes to/from JSON; the
/// echo embedded in every output table is a complete copy, so any table can
/// be re-derived from its own header.
struct ExperimentConfig {
    SystemConfig system;
    EnsembleSpec ensemble;
    std::vector<double> snr_db = {15.0};
    HorizonSweep horizon;
    std::vector<long> freq_indices; ///< empty = pilot subcarriers
    SweepSpec sweeps;
    HorizonAnchor anchor = HorizonAnchor::last_pilot;
    FimMode mode = FimMode::full;
    Averaging averaging = Averaging::mean_nmse;
    double discard_threshold = 0.01;
    bool exact_enabled = true;
    bool asymptotic_enabled = true;
};

enum class Figure { fig1, fig2, fig3, fig4 };

/// Built-in defaults for each figure experiment: 20 MHz band, 2048
/// subcarriers, 64 pilot subcarriers, every symbol a pilot, half-wavelength
/// arrays, 0.2-wavelength spatial sampling and the WINNER II UMa delays.
ExperimentConfig default_experiment(Figure figure);

std::string experiment_config_to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const std::string& json_text);

/// Loads an ExperimentConfig from a JSON file; a string-valued
/// "ensemble.delay_profile" is resolved as a profile file path relative to
/// the current directory.
ExperimentConfig load_experiment_config(const std::string& path);

/// Maps a prediction horizon in wavelengths to an absolute symbol index:
/// anchor + round(lambda/spatial_step), rounding half to even. A non-integer
/// multiple beyond 1e-9 sets *rounded when provided. Throws NegativeHorizon.
long horizon_to_index(double lambda_h, const SystemConfig& config,
                      HorizonAnchor anchor = HorizonAnchor::last_pilot,
                      bool* rounded = nullptr);

/// Absolute subcarrier index to baseband frequency in Hz. Indices 0 through
/// num_subcarriers inclusive are in band; others throw OutOfBand.
double subcarrier_to_frequency(long f_idx, const SystemConfig& config);

/// Amplitude ratio to decibels (20*log10) and back.
double to_db(double ratio);
double from_db(double db);

/// Figure datasets. Columns depend on the enabled bound kinds; rows are
/// emitted in deterministic sweep order. Workers only affect wall time.
ResultTable run_fig1(const ExperimentConfig& config, int workers = 1);
ResultTable run_fig2(const ExperimentConfig& config, int workers = 1);
ResultTable run_fig3(const ExperimentConfig& config, int workers = 1);
ResultTable run_fig4(const ExperimentConfig& config, int workers = 1);

/// Grid sweeps of one bound kind.
ResultTable run_bound_exact(const ExperimentConfig& config, int workers = 1);
ResultTable run_bound_asymptotic(const ExperimentConfig& config);

/// Largest discarded-trial fraction across the table's sub-runs, parsed
/// back from its metadata.
double discarded_fraction(const ResultTable& table);

struct VerifyOutcome {
    bool ok = false;
    std::string message;
};

/// Recomputes a previously written table from its embedded config echo and
/// compares byte-for-byte.
VerifyOutcome verify_table_file(const std::string& path, int workers = 1);

/// Dispatches on the "command" metadata key of a config echo.
ResultTable rerun_from_metadata(const std::string& command,
                                const ExperimentConfig& config, int workers);

} // namespace chanbound

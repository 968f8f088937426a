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

#include <cstdint>
#include <string>
#include <vector>

#include "chanbound/crlb_exact.hpp"
#include "chanbound/types.hpp"

namespace chanbound {

/// Named list of path delays in seconds.
struct DelayProfile {
    std::string name;
    std::vector<double> delays_s;
};

/// Parses a delay profile file: one delay in seconds per line, '#' starts a
/// comment, blank lines ignored. The profile name is the file's basename
/// unless a "# name: <label>" comment is present.
DelayProfile load_delay_profile(const std::string& path);

/// The WINNER II urban macro-cell (C2, NLOS) cluster delay line that ships
/// as the default profile.
DelayProfile default_uma_profile();

/// Random channel ensemble: unit circular complex Gaussian amplitudes,
/// angles of arrival/departure/travel uniform on [-pi, pi), Doppler built
/// spatially as 2*pi*spatial_step*sin(theta_v), and delays taken in order
/// from the profile (cyclically reused when Z exceeds its length).
struct EnsembleSpec {
    int num_paths = 1;
    DelayProfile delay_profile;
    std::uint64_t master_seed = 1;
    int trials = 1;
};

/// Draws the realization for one trial. A pure function of
/// (master_seed, trial_index): each trial derives its own counter-based RNG
/// stream, so results do not depend on scheduling or worker count, and the
/// first T trials of a longer run coincide with a shorter run's trials.
ChannelRealization draw_realization(const EnsembleSpec& spec,
                                    const SystemConfig& config,
                                    int trial_index);

struct GridPoint {
    long t_idx = 0;
    long f_idx = 0;
};

/// How ensemble averages are reported. mean_nmse (default) averages the
/// squared-error bound and reports its square root; mean_rnmse averages the
/// per-trial root bounds instead (sensitivity check only).
enum class Averaging { mean_nmse, mean_rnmse };

/// Ensemble-averaged bound values on an evaluation grid.
struct BoundSurface {
    std::vector<GridPoint> grid;
    std::vector<double> mean_nmse; ///< per-point mean of per-trial NMSE
    std::vector<double> rnmse;     ///< per-point RNMSE per the convention
    std::vector<double> std_error; ///< standard error of the NMSE mean
    int trials_used = 0;
    int trials_discarded = 0;
    Averaging averaging = Averaging::mean_nmse;
};

/// Monte Carlo average of the exact bound: per trial, draw a realization,
/// assemble the FIM in the requested mode, invert it and evaluate the NMSE
/// bound on every grid point. Trials with a singular FIM are discarded and
/// counted. The reduction runs in trial-index order regardless of worker
/// count, so the result is bitwise reproducible.
///
/// Throws AllTrialsDiscarded when no trial survives.
BoundSurface average_bound(const EnsembleSpec& spec, const SystemConfig& config,
                           const NoiseModel& noise,
                           const std::vector<GridPoint>& grid, FimMode mode,
                           int workers = 1,
                           Averaging averaging = Averaging::mean_nmse,
                           double cond_limit = 1e12);

enum class Axis { time, frequency };

/// RNMSE curve along one axis after averaging NMSE over the other.
struct MarginalCurve {
    std::vector<long> axis_values;
    std::vector<double> rnmse;
};

/// Collapses a full Cartesian-product surface onto `retained`; the NMSE is
/// averaged over the other axis before the square root (or the RNMSE values
/// are averaged directly under the mean_rnmse convention).
///
/// Throws NonRectangularGrid when the grid is not a full product.
MarginalCurve surface_statistics(const BoundSurface& surface, Axis retained);

} // namespace chanbound

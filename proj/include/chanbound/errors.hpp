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

#include <stdexcept>
#include <string>

namespace chanbound {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A structural invariant of a configuration or data object is violated
/// (e.g. more frequency pilots than subcarriers).
class StructuralError : public Error {
  public:
    using Error::Error;
};

/// A pilot spacing violates the delay or Doppler aliasing constraint.
class AliasingViolation : public Error {
  public:
    AliasingViolation(std::string constraint, double value, double limit);

    std::string constraint; // which inequality failed
    double value;           // left-hand side that was computed
    double limit;           // bound it had to stay below
};

/// The Fisher information matrix is singular or too ill-conditioned to
/// invert; the parameters of the offending realization are not identifiable.
class SingularFim : public Error {
  public:
    explicit SingularFim(double condition_estimate);

    double condition_estimate;
};

/// Every Monte Carlo trial produced a singular information matrix.
class AllTrialsDiscarded : public Error {
  public:
    using Error::Error;
};

/// A marginal statistic was requested on a grid that is not a full
/// Cartesian product of its axes.
class NonRectangularGrid : public Error {
  public:
    using Error::Error;
};

/// A prediction horizon below zero was requested.
class NegativeHorizon : public Error {
  public:
    using Error::Error;
};

/// A subcarrier index outside the configured band was requested.
class OutOfBand : public Error {
  public:
    using Error::Error;
};

/// An internal numerical consistency check failed (signals an assembly bug,
/// not bad user input).
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// A result table file could not be parsed or re-derived.
class TableFormatError : public Error {
  public:
    using Error::Error;
};

} // namespace chanbound

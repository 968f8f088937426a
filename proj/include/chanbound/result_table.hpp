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

#include <string>
#include <utility>
#include <vector>

namespace chanbound {

/// A flat numeric dataset: ordered metadata, a column schema and rows of
/// doubles. Serializes to a comma-separated table with '#'-prefixed
/// metadata header lines; values are written with "%.17g" so files are
/// byte-stable and round-trip exactly.
struct ResultTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    const std::string* find_metadata(const std::string& key) const;
};

std::string to_csv(const ResultTable& table);
void write_csv(const ResultTable& table, const std::string& path);

/// JSON mirror of the same content: {"metadata": {...}, "columns": [...],
/// "rows": [[...], ...]}.
std::string to_json(const ResultTable& table);
void write_json(const ResultTable& table, const std::string& path);

/// Parses a table previously produced by to_csv. Throws TableFormatError on
/// malformed input (wrong arity rows, missing header, ...).
ResultTable parse_csv(const std::string& text);
ResultTable read_csv(const std::string& path);

} // namespace chanbound

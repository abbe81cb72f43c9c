// Copyright 2026 The qfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFACTOR_EXPERIMENT_H
#define QFACTOR_EXPERIMENT_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qfactor/training.h"

namespace qfactor {

struct ExperimentConfig {
    std::vector<std::uint64_t> numbers;
    std::vector<Protocol> protocols;
    TrainSchedule schedule;
    std::filesystem::path out_dir;
    int workers = 1;
    /// Population snapshots are taken at the first depth where some protocol reaches this fidelity.
    double population_threshold = 0.8;

    /// Throws std::invalid_argument on an empty protocol list, invalid numbers,
    /// a bad schedule, or workers < 1.
    void validate() const;
};

struct RunOutcome {
    std::uint64_t number = 0;
    Protocol protocol = Protocol::Standard;
    std::optional<RunRecord> record;
    std::string error;
    double seconds = 0;

    bool ok() const {
        return record.has_value();
    }
};

struct ExperimentSummary {
    /// Ordered by (number, protocol) as configured, regardless of worker count.
    std::vector<RunOutcome> runs;
    std::vector<std::string> errors;

    bool ok() const;
};

/// Smallest depth at which any record reaches `threshold`; nullopt if none does.
std::optional<int> snapshot_depth(const std::vector<const RunRecord *> &records, double threshold);

/// Trains every (number, protocol) pair and writes, under out_dir/N<number>/:
///   run_<protocol>.json, fidelity_vs_depth.csv, fidelity_vs_gates.csv, populations.csv
/// Per-run failures are collected in the summary rather than thrown.
ExperimentSummary run_experiment(const ExperimentConfig &config, std::ostream *log = nullptr);

std::filesystem::path run_json_path(const std::filesystem::path &out_dir, std::uint64_t number, Protocol protocol);

}  // namespace qfactor

#endif

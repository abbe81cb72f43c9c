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

#include "qfactor/experiment.h"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qfactor/analysis.h"
#include "qfactor/report.h"

namespace qfactor {

namespace {

std::filesystem::path instance_dir(const std::filesystem::path &out_dir, std::uint64_t number) {
    return out_dir / ("N" + std::to_string(number));
}

std::ofstream open_for_write(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

void write_shared_csvs(const ExperimentConfig &config, const ProblemInstance &inst, const std::vector<const RunOutcome *> &runs) {
    auto dir = instance_dir(config.out_dir, inst.number);

    {
        auto out = open_for_write(dir / "fidelity_vs_depth.csv");
        out << "protocol,depth,cost,fidelity\n";
        for (const auto *run : runs) {
            const auto &r = *run->record;
            out << to_string(r.protocol) << ",0," << format_double(r.initial_cost) << ',' << format_double(r.initial_fidelity) << '\n';
            for (const auto &d : r.depths) {
                out << to_string(r.protocol) << ',' << d.depth << ',' << format_double(d.cost) << ',' << format_double(d.fidelity) << '\n';
            }
        }
    }

    {
        auto out = open_for_write(dir / "fidelity_vs_gates.csv");
        out << "protocol,depth,two_qubit_gates,fidelity\n";
        for (const auto *run : runs) {
            auto budget = protocol_gate_budget(inst, run->protocol);
            auto points = fidelity_vs_gates(*run->record, budget);
            for (std::size_t k = 0; k < points.size(); k++) {
                out << to_string(run->protocol) << ',' << k << ',' << points[k].first << ',' << format_double(points[k].second) << '\n';
            }
        }
    }

    {
        std::vector<const RunRecord *> records;
        for (const auto *run : runs) {
            records.push_back(&*run->record);
        }
        auto reached = snapshot_depth(records, config.population_threshold);
        int depth = reached.value_or(config.schedule.max_depth);

        std::vector<std::vector<double>> pops;
        for (const auto *run : runs) {
            QaoaModel model(inst, run->protocol);
            pops.push_back(populations(model.state(run->record->depths.at(depth - 1).params)));
        }
        auto out = open_for_write(dir / "populations.csv");
        out << "basis_index,display_string,is_solution,depth,threshold_reached";
        for (const auto *run : runs) {
            out << ',' << to_string(run->protocol);
        }
        out << '\n';
        for (BasisIndex b = 0; b < inst.dimension(); b++) {
            out << b << ',' << state_to_string(b, inst) << ',' << (inst.is_solution(b) ? 1 : 0) << ',' << depth << ','
                << (reached ? 1 : 0);
            for (const auto &p : pops) {
                out << ',' << format_double(p[b]);
            }
            out << '\n';
        }
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    if (numbers.empty()) {
        throw std::invalid_argument("no numbers to factor");
    }
    if (protocols.empty()) {
        throw std::invalid_argument("at least one protocol is required");
    }
    if (workers < 1) {
        throw std::invalid_argument("workers must be at least 1");
    }
    schedule.validate();
    for (auto n : numbers) {
        make_instance(n);
    }
}

bool ExperimentSummary::ok() const {
    if (!errors.empty()) {
        return false;
    }
    for (const auto &r : runs) {
        if (!r.ok()) {
            return false;
        }
    }
    return true;
}

std::optional<int> snapshot_depth(const std::vector<const RunRecord *> &records, double threshold) {
    std::optional<int> best;
    for (const auto *r : records) {
        for (const auto &d : r->depths) {
            if (d.fidelity >= threshold) {
                if (!best || d.depth < *best) {
                    best = d.depth;
                }
                break;
            }
        }
    }
    return best;
}

std::filesystem::path run_json_path(const std::filesystem::path &out_dir, std::uint64_t number, Protocol protocol) {
    return instance_dir(out_dir, number) / ("run_" + std::string(to_string(protocol)) + ".json");
}

ExperimentSummary run_experiment(const ExperimentConfig &config, std::ostream *log) {
    config.validate();

    std::map<std::uint64_t, ProblemInstance> instances;
    for (auto n : config.numbers) {
        instances.emplace(n, make_instance(n));
    }

    ExperimentSummary summary;
    for (auto n : config.numbers) {
        for (auto p : config.protocols) {
            summary.runs.push_back({n, p, std::nullopt, {}, 0.0});
        }
    }

    std::mutex log_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            auto k = next.fetch_add(1);
            if (k >= summary.runs.size()) {
                return;
            }
            auto &run = summary.runs[k];
            auto t0 = std::chrono::steady_clock::now();
            try {
                const auto &inst = instances.at(run.number);
                QaoaModel model(inst, run.protocol);
                auto record = incremental_train(model, config.schedule);
                std::filesystem::create_directories(instance_dir(config.out_dir, run.number));
                auto out = open_for_write(run_json_path(config.out_dir, run.number, run.protocol));
                out << run_record_to_json(record, protocol_gate_budget(inst, run.protocol).two_qubit_per_layer).dump(2) << '\n';
                if (!out) {
                    throw std::runtime_error("write failed for run JSON");
                }
                run.record = std::move(record);
            } catch (const std::exception &e) {
                run.error = e.what();
            }
            run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (log) {
                std::lock_guard lock(log_mutex);
                *log << "N=" << run.number << ' ' << to_string(run.protocol) << ' '
                     << (run.ok() ? "ok" : "FAILED: " + run.error) << " (" << run.seconds << " s)\n";
            }
        }
    };

    auto threads = std::min<std::size_t>(static_cast<std::size_t>(config.workers), summary.runs.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; i++) {
            pool.emplace_back(worker);
        }
    }

    for (auto n : config.numbers) {
        std::vector<const RunOutcome *> done;
        for (const auto &run : summary.runs) {
            if (run.number == n && run.ok()) {
                done.push_back(&run);
            }
        }
        if (done.empty()) {
            continue;
        }
        try {
            write_shared_csvs(config, instances.at(n), done);
        } catch (const std::exception &e) {
            summary.errors.push_back("N=" + std::to_string(n) + ": " + e.what());
        }
    }
    return summary;
}

}  // namespace qfactor

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "osa/scenario.hpp"

namespace osa {

// One evaluated grid point of a sweep (or the scenario's own settings).
struct RunPoint {
    double load = 0.0; // total external packet arrival rate
    double transmission_time = 0.0;
    int n_channels = 0;
    PolicyKind policy_kind = PolicyKind::Nested;
    SensingOrder sensing_order = SensingOrder::RandomPermutation;
};

struct RunResult {
    RunPoint point;
    uint64_t seed = 0;
    SimStats stats;
};

// Replication seeds: base * 10^6 + replication index.
uint64_t replication_seed(uint64_t base_seed, int replication);

RunPoint scenario_point(const Scenario& sc);

// Channel models for a point; for n beyond the scenario's channels, added
// channels clone the base statistics cyclically.
std::vector<ChannelModel> point_models(const Scenario& sc, int n_channels);

SimConfig point_config(const Scenario& sc, const RunPoint& pt, uint64_t seed);

// Run one seeded replication of a point.
RunResult run_point(const Scenario& sc, const RunPoint& pt, int replication);

// Run `replications` seeded replications. The parallel path distributes
// replications over OpenMP threads; results are identical to the serial
// path and ordered by replication index.
std::vector<RunResult> run_replications(const Scenario& sc, const RunPoint& pt,
                                        int replications, bool parallel);

// Expand the sweep grid into run points.
std::vector<RunPoint> sweep_points(const Scenario& sc, SweepAxis axis,
                                   const std::vector<double>& grid);

// CSV contract: UTF-8, header row, '.' decimal separator. One row per run.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const Scenario& sc, const RunResult& r);

uint64_t config_hash(const Scenario& sc, const RunPoint& pt);

struct Summary {
    double mean = 0.0;
    double ci95 = 0.0; // half-width
    int n = 0;
};

Summary summarize_throughput(const std::vector<RunResult>& results);

// Tabular policy dump for the CLI `policy` command.
void write_policy_report(std::ostream& out, const Scenario& sc);

} // namespace osa

// Compares the serial replication driver against the OpenMP one on a
// contention-mode workload and checks they produce identical statistics.

#include <chrono>
#include <cmath>
#include <iostream>

#include "osa/experiments.hpp"

using Clock = std::chrono::steady_clock;

namespace {

osa::Scenario bench_scenario() {
    osa::Scenario sc;
    sc.version = 1;
    sc.name = "bench";
    for (double mean : {2.5, 1.0 / 0.6, 2.0, 1.0 / 0.3, 5.0})
        sc.models.emplace_back(osa::discretize_exponential(mean, 5.0 * mean, 1000));
    sc.config.n_channels = 5;
    sc.config.n_users = 10;
    sc.config.horizon = 30000;
    sc.config.warmup = 3000;
    sc.config.packet_payload = 100;
    sc.config.mode = osa::SimMode::Contention;
    sc.config.seed = 7;
    sc.load = 0.3;
    sc.replications = 16;
    return sc;
}

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

} // namespace

int main() {
    const auto sc = bench_scenario();
    const auto pt = osa::scenario_point(sc);

    auto t0 = Clock::now();
    const auto serial = osa::run_replications(sc, pt, sc.replications, false);
    const double serial_ms = elapsed_ms(t0);

    t0 = Clock::now();
    const auto parallel = osa::run_replications(sc, pt, sc.replications, true);
    const double parallel_ms = elapsed_ms(t0);

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i)
        identical = serial[i].stats.throughput == parallel[i].stats.throughput &&
                    serial[i].stats.packets_generated ==
                        parallel[i].stats.packets_generated;

    std::cout << "replications: " << sc.replications << "\n"
              << "serial:   " << serial_ms << " ms\n"
              << "parallel: " << parallel_ms << " ms\n"
              << "speedup:  " << serial_ms / parallel_ms << "x\n"
              << "results identical: " << (identical ? "yes" : "NO") << "\n";
    return identical ? 0 : 1;
}

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "osa/channel_models.hpp"
#include "osa/policy_iid.hpp"
#include "osa/policy_markov.hpp"

namespace osa {

// IID channels carry a reward distribution resampled at each observation;
// Markov channels evolve one transition per time unit regardless of
// observation.
using ChannelModel = std::variant<DiscreteDistribution, MarkovChannel>;

enum class SimMode { MeanDelay, Contention };
enum class SensingOrder { RandomPermutation, GreedyDescendingMean };
enum class PolicyKind { Nested, Baseline };

struct SimConfig {
    int n_channels = 0;
    int n_users = 0;
    double transmission_time = 40.0; // T, integer time units
    double inv_zeta = 2.0;           // mean backoff
    double arrival_rate = 0.0;       // packets per time unit per user
    double packet_payload = 1024.0;  // bytes
    double horizon = 0.0;            // time units
    double warmup = 0.0;
    uint64_t seed = 1;
    SimMode mode = SimMode::Contention;
    SensingOrder sensing_order = SensingOrder::RandomPermutation;
    PolicyKind policy_kind = PolicyKind::Nested;
    // Per-channel attempt rates assumed when injecting analytic delays in
    // mean-delay mode. Ignored in contention mode.
    std::vector<double> assumed_loads;

    void validate() const;
};

// A user's sensing sequence plus the policy evaluated along it. For nested
// policies exactly one of the two tables is populated, matching the channel
// model family of the scenario.
struct UserPolicy {
    PolicyKind kind = PolicyKind::Nested;
    std::vector<int> sequence; // channel indices (0-based) in sensing order
    PolicyTable iid;
    std::vector<MarkovStagePolicy> markov;
};

struct SimStats {
    double elapsed = 0.0;         // horizon - warmup
    double delivered_bytes = 0.0; // after warmup
    double throughput = 0.0;      // delivered_bytes / elapsed

    std::vector<double> attempt_rate;      // measured G per channel
    std::vector<double> mean_access_delay; // measured access delay per channel

    // Contention-mode diagnostics, per channel.
    std::vector<uint64_t> contention_attempts; // attempts that entered a window
    std::vector<uint64_t> contention_wins;
    std::vector<double> busy_time;

    std::array<uint64_t, 3> decision_counts{}; // indexed by Action

    uint64_t packets_generated = 0; // whole run, including warmup
    uint64_t packets_delivered = 0;
    uint64_t packets_in_queue = 0; // at horizon (partially sent head counts)

    bool exclusivity_ok = true;

    // Per-window attempt counts per channel, for stationarity diagnostics.
    std::vector<std::vector<double>> attempt_rate_windows;
};

// Event-driven simulation of the reservation/transmission cycle. Deterministic
// for a fixed config (including seed).
SimStats run(const SimConfig& config, const std::vector<ChannelModel>& models,
             const std::vector<UserPolicy>& policies);

// Build per-user sensing sequences for the configured order.
std::vector<std::vector<int>> make_sequences(
    const SimConfig& config, const std::vector<ChannelModel>& models);

// Build nested policies for each user from an assumed load vector.
std::vector<UserPolicy> build_policies(const SimConfig& config,
                                       const std::vector<ChannelModel>& models,
                                       const std::vector<double>& loads);

// Degenerate policy: uniformly random channel, decide(.) always STOP.
std::vector<UserPolicy> baseline_policy(const SimConfig& config,
                                        const std::vector<ChannelModel>& models);

struct EquilibriumResult {
    std::vector<double> loads; // converged per-channel G
    std::vector<UserPolicy> policies;
    int rounds = 0;
    bool converged = false;
    SimStats last_stats;
};

// Damped fixed point between the policy (built from G) and the loads induced
// by simulating everyone using it:
//   G <- (1-alpha) G + alpha G_hat, alpha = 0.5, until max |dG| < 1e-3
// or 50 rounds. Every round replays the same seed so the iterated map is
// deterministic.
EquilibriumResult equilibrium_loads(const SimConfig& config,
                                    const std::vector<ChannelModel>& models,
                                    std::vector<double> initial_loads);

double model_mean(const ChannelModel& model);

} // namespace osa

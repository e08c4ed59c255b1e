#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "osa/channel_models.hpp"

namespace osa {

enum class Action { Stop, Stay, Switch };

const char* to_string(Action a);

// Per-stage nested stopping policy for one channel in a user's sequence.
// switch_value is c_i (0 at the last stage), threshold is the unique root
// lambda* of E[max(X,c) - lambda]^+ = lambda t_c / T, and stage_value is
// E[max(X, max(lambda*, c))].
struct StagePolicy {
    int stage = 0; // 1-based position in the sequence
    double switch_value = 0.0;
    double threshold = 0.0;
    double stage_value = 0.0;
    bool switch_branch = false; // lambda* < c_i: continuation means SWITCH
};

struct PolicyTable {
    std::vector<StagePolicy> stages;
    double transmission_time = 0.0;
    std::vector<double> contention_delays; // t_c per stage, as used
    std::vector<double> switching_delays;  // t_s per stage, as used
};

// Unique root of D(lambda) = E[max(max(X,c) - lambda, 0)] - lambda t_c / T.
// Tries the switch-branch closed form first, falls back to the fixed-point
// iteration, and cross-checks both against bisection on D.
double solve_threshold(const DiscreteDistribution& dist, double c, double t_c,
                       double T);

// Backward induction over a user's channel sequence: stage N with c_N = 0,
// then c_i = T/(T + t_s[i+1]) * EV_{i+1} going backward.
PolicyTable backward_induction(std::span<const DiscreteDistribution> dists,
                               std::span<const double> t_c,
                               std::span<const double> t_s, double T);

// Three-way decision at a 1-based stage for observed condition x.
// Ties (x equal to the governing threshold) resolve to Stop.
Action decide(const PolicyTable& policy, int stage, double x);

// Tabular text: one row per stage (stage, c, lambda*, EV, branch).
void write_policy_table(std::ostream& out, const PolicyTable& policy);

} // namespace osa

#pragma once

#include <span>
#include <vector>

#include "osa/channel_models.hpp"
#include "osa/policy_iid.hpp" // Action

namespace osa {

// Discount factor treatment in the Markov Bellman equation. BetaPower uses
// beta^{t_c} with beta = 1/(1 + 1/T); Exact uses T/(T + t_c).
enum class DiscountMode { BetaPower, Exact };

struct ValueIterationResult {
    std::vector<double> values;
    std::vector<bool> stop; // state is in the (meta) stopping set
    int iterations = 0;
};

// Fixed point of V(x) = max{ max(reward(x), c), disc * sum_y P^{t_c}(y|x) V(y) }
// by iteration from V0 = 0 to sup-norm residual < 1e-10.
ValueIterationResult value_iteration(const MarkovChannel& chain, double c,
                                     int t_c, double T,
                                     DiscountMode mode = DiscountMode::BetaPower);

// One application of the Bellman map; exposed for contraction checks.
std::vector<double> bellman_step(const MarkovChannel& chain,
                                 const std::vector<double>& k_step_matrix,
                                 double c, double discount,
                                 const std::vector<double>& v);

struct MarkovStagePolicy {
    int stage = 0;
    double switch_value = 0.0; // c_i
    int contention_steps = 0;  // rounded integer t_c
    double continuation_value = 0.0; // disc * E_pi[ P^{t_c} V ] role; see below
    std::vector<double> values;
    std::vector<Action> decisions; // one per state
    double stage_value = 0.0;      // sum_x pi(x) V(x)
};

// Rounds a real delay to the nearest integer, at least 1.
int round_delay(double d);

// Backward induction across the sequence: stage N with c_N = 0, then
// c_i = T/(T + t_s[i+1]) * EV_{i+1} with EV taken under the stationary
// distribution. Delays are rounded to integers >= 1 internally.
std::vector<MarkovStagePolicy> backward_induction_markov(
    std::span<const MarkovChannel> chains, std::span<const double> t_c,
    std::span<const double> t_s, double T,
    DiscountMode mode = DiscountMode::BetaPower);

// Stop-flagged states: STOP if reward(state) >= c_i, else SWITCH.
// Others STAY. The last stage never returns SWITCH (c_N = 0 <= reward).
Action decide_markov(const MarkovStagePolicy& stage_policy, std::size_t state);

} // namespace osa

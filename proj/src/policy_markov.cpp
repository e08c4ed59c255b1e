#include "osa/policy_markov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace osa {

int round_delay(double d) {
    return std::max(1, static_cast<int>(std::lround(d)));
}

namespace {

double discount_factor(int t_c, double T, DiscountMode mode) {
    if (mode == DiscountMode::Exact) return T / (T + static_cast<double>(t_c));
    const double beta = 1.0 / (1.0 + 1.0 / T);
    return std::pow(beta, static_cast<double>(t_c));
}

} // namespace

std::vector<double> bellman_step(const MarkovChannel& chain,
                                 const std::vector<double>& pk, double c,
                                 double discount,
                                 const std::vector<double>& v) {
    const std::size_t n = chain.n_states;
    std::vector<double> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        double cont = 0.0;
        for (std::size_t y = 0; y < n; ++y) cont += pk[x * n + y] * v[y];
        out[x] = std::max(std::max(chain.rewards[x], c), discount * cont);
    }
    return out;
}

ValueIterationResult value_iteration(const MarkovChannel& chain, double c,
                                     int t_c, double T, DiscountMode mode) {
    if (t_c < 1) throw std::domain_error("t_c must be >= 1");
    if (T <= 0.0) throw std::domain_error("T must be > 0");
    const double disc = discount_factor(t_c, T, mode);
    const auto pk = k_step(chain, static_cast<std::size_t>(t_c));
    const std::size_t n = chain.n_states;

    ValueIterationResult res;
    res.values.assign(n, 0.0);
    constexpr int kMaxIter = 1000000;
    int iter = 0;
    for (; iter < kMaxIter; ++iter) {
        auto next = bellman_step(chain, pk, c, disc, res.values);
        double residual = 0.0;
        for (std::size_t x = 0; x < n; ++x)
            residual = std::max(residual, std::abs(next[x] - res.values[x]));
        res.values = std::move(next);
        if (residual < 1e-10) break;
    }
    if (iter == kMaxIter)
        throw std::runtime_error("value iteration did not converge");
    res.iterations = iter + 1;

    res.stop.assign(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        double cont = 0.0;
        for (std::size_t y = 0; y < n; ++y)
            cont += pk[x * n + y] * res.values[y];
        res.stop[x] = std::max(chain.rewards[x], c) >= disc * cont - 1e-12;
    }
    return res;
}

std::vector<MarkovStagePolicy> backward_induction_markov(
    std::span<const MarkovChannel> chains, std::span<const double> t_c,
    std::span<const double> t_s, double T, DiscountMode mode) {
    const std::size_t n = chains.size();
    if (n == 0) throw std::invalid_argument("empty channel sequence");
    if (t_c.size() != n || t_s.size() != n)
        throw std::invalid_argument("delay vectors must match sequence length");

    std::vector<MarkovStagePolicy> stages(n);
    double ev_next = 0.0;
    for (std::size_t idx = n; idx-- > 0;) {
        MarkovStagePolicy& sp = stages[idx];
        sp.stage = static_cast<int>(idx) + 1;
        sp.contention_steps = round_delay(t_c[idx]);
        sp.switch_value =
            idx + 1 == n
                ? 0.0
                : T / (T + static_cast<double>(round_delay(t_s[idx + 1]))) * ev_next;

        auto vi = value_iteration(chains[idx], sp.switch_value,
                                  sp.contention_steps, T, mode);
        sp.values = std::move(vi.values);

        const auto pi = stationary(chains[idx]);
        const auto pk =
            k_step(chains[idx], static_cast<std::size_t>(sp.contention_steps));
        const double disc = discount_factor(sp.contention_steps, T, mode);
        const std::size_t ns = chains[idx].n_states;

        sp.stage_value = 0.0;
        sp.continuation_value = 0.0;
        sp.decisions.resize(ns);
        for (std::size_t x = 0; x < ns; ++x) {
            sp.stage_value += pi[x] * sp.values[x];
            double cont = 0.0;
            for (std::size_t y = 0; y < ns; ++y)
                cont += pk[x * ns + y] * sp.values[y];
            cont *= disc;
            sp.continuation_value += pi[x] * cont;
            const bool stop_flag =
                std::max(chains[idx].rewards[x], sp.switch_value) >= cont - 1e-12;
            if (!stop_flag)
                sp.decisions[x] = Action::Stay;
            else
                sp.decisions[x] = chains[idx].rewards[x] >= sp.switch_value
                                      ? Action::Stop
                                      : Action::Switch;
        }
        ev_next = sp.stage_value;
    }
    return stages;
}

Action decide_markov(const MarkovStagePolicy& sp, std::size_t state) {
    return sp.decisions.at(state);
}

} // namespace osa

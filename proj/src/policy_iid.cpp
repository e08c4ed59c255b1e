#include "osa/policy_iid.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace osa {

const char* to_string(Action a) {
    switch (a) {
        case Action::Stop: return "STOP";
        case Action::Stay: return "STAY";
        case Action::Switch: return "SWITCH";
    }
    return "?";
}

namespace {

// D(lambda) = E[max(max(X,c) - lambda, 0)] - lambda t_c / T.
// Continuous, strictly decreasing, D(0) > 0.
double rate_gap(const DiscreteDistribution& dist, double c, double t_c,
                double T, double lam) {
    double e = 0.0;
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        const double xh = std::max(dist.support[i], c);
        if (xh > lam) e += (xh - lam) * dist.probs[i];
    }
    return e - lam * t_c / T;
}

double bisect_threshold(const DiscreteDistribution& dist, double c, double t_c,
                        double T) {
    double lo = 0.0, hi = std::max(dist.max_value(), c);
    if (rate_gap(dist, c, t_c, T, hi) > 0.0) return hi; // cannot happen for t_c > 0
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (rate_gap(dist, c, t_c, T, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double solve_threshold(const DiscreteDistribution& dist, double c, double t_c,
                       double T) {
    if (t_c <= 0.0) throw std::domain_error("t_c must be > 0");
    if (T <= 0.0) throw std::domain_error("T must be > 0");
    if (c < 0.0) throw std::domain_error("switch value must be >= 0");

    const double tbar = t_c / T;
    double lam;

    // Switch-branch candidate: lambda = (sum_{x>c} x f + c P(X<=c)) / (1 + t_c/T),
    // valid when the result falls below c.
    const double candidate =
        (dist.upper_partial_mean(std::nextafter(c, 1e300)) + c * dist.cdf(c)) /
        (1.0 + tbar);
    if (candidate < c) {
        lam = candidate;
    } else {
        // Stay-branch fixed point: lambda = sum_{x>=lam} x f / (P(X>=lam) + t_c/T),
        // started from E[max(X,c)].
        lam = dist.expect_max(c);
        for (int i = 0; i < 10000; ++i) {
            const double next =
                dist.upper_partial_mean(lam) / (dist.tail_prob(lam) + tbar);
            if (std::abs(next - lam) < 1e-10) {
                lam = next;
                break;
            }
            lam = next;
        }
    }

    // Independent check: bisection on D is the authority on disagreement.
    const double ref = bisect_threshold(dist, c, t_c, T);
    if (std::abs(ref - lam) > 1e-8) lam = ref;
    if (std::abs(rate_gap(dist, c, t_c, T, lam)) > 1e-9 * std::max(1.0, lam))
        throw std::runtime_error("threshold solver failed to converge");
    return lam;
}

PolicyTable backward_induction(std::span<const DiscreteDistribution> dists,
                               std::span<const double> t_c,
                               std::span<const double> t_s, double T) {
    const std::size_t n = dists.size();
    if (n == 0) throw std::invalid_argument("empty channel sequence");
    if (t_c.size() != n || t_s.size() != n)
        throw std::invalid_argument("delay vectors must match sequence length");
    for (std::size_t i = 0; i < n; ++i)
        if (t_c[i] <= 0.0 || t_s[i] <= 0.0)
            throw std::domain_error("delays must be > 0");

    PolicyTable table;
    table.transmission_time = T;
    table.contention_delays.assign(t_c.begin(), t_c.end());
    table.switching_delays.assign(t_s.begin(), t_s.end());
    table.stages.resize(n);

    double ev_next = 0.0;
    for (std::size_t idx = n; idx-- > 0;) {
        StagePolicy& sp = table.stages[idx];
        sp.stage = static_cast<int>(idx) + 1;
        sp.switch_value =
            idx + 1 == n ? 0.0 : T / (T + t_s[idx + 1]) * ev_next;
        sp.threshold = solve_threshold(dists[idx], sp.switch_value, t_c[idx], T);
        sp.switch_branch = sp.threshold < sp.switch_value;
        sp.stage_value =
            dists[idx].expect_max(std::max(sp.threshold, sp.switch_value));
        ev_next = sp.stage_value;
    }
    return table;
}

Action decide(const PolicyTable& policy, int stage, double x) {
    const auto& sp = policy.stages.at(static_cast<std::size_t>(stage) - 1);
    if (sp.switch_branch)
        return x >= sp.switch_value ? Action::Stop : Action::Switch;
    return x >= sp.threshold ? Action::Stop : Action::Stay;
}

void write_policy_table(std::ostream& out, const PolicyTable& policy) {
    out << "stage\tswitch_value\tthreshold\tstage_value\tcontinuation\n";
    for (const auto& sp : policy.stages) {
        out << sp.stage << '\t' << sp.switch_value << '\t' << sp.threshold
            << '\t' << sp.stage_value << '\t'
            << (sp.switch_branch ? "SWITCH" : "STAY") << '\n';
    }
}

} // namespace osa

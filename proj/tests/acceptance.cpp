// Acceptance suite: end-to-end checks of the policy engine and the MAC
// simulator against hand-derived values and qualitative system behavior.
// Prints one PASS/FAIL line per criterion; exit code is the failure count.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "osa/channel_models.hpp"
#include "osa/congestion.hpp"
#include "osa/experiments.hpp"
#include "osa/policy_iid.hpp"
#include "osa/policy_markov.hpp"
#include "osa/rng.hpp"
#include "osa/scenario.hpp"
#include "osa/simulator.hpp"

using namespace osa;

namespace {

int g_failures = 0;

void report(int idx, const char* title, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", idx, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

// Five exponential-rate channels (means 2.5, 1.667, 2, 3.333, 5), T = 40.
std::vector<DiscreteDistribution> exp_dists() {
    std::vector<DiscreteDistribution> out;
    for (double rate : {0.4, 0.6, 0.5, 0.3, 0.2})
        out.push_back(discretize_exponential(1.0 / rate, 5.0 / rate, 1000));
    return out;
}

// Five birth-death channels, upward drift 0.8, increasing rewards.
std::vector<MarkovChannel> bd_chains() {
    const std::vector<std::vector<double>> rewards{
        {10, 20, 30, 40, 50},
        {15, 20, 45, 60, 75},
        {5, 10, 15, 20, 25},
        {10, 20, 30, 40, 50},
        {5, 10, 15, 20, 25}};
    std::vector<MarkovChannel> out;
    for (const auto& r : rewards) out.push_back(birth_death_chain(5, 0.8, r));
    return out;
}

void delays_at(double g, double T, std::vector<double>& tc,
               std::vector<double>& ts, std::size_t n) {
    tc.assign(n, congestion::contention_delay(g, 2.0));
    ts.assign(n, congestion::switching_delay(g, T, 2.0));
}

DiscreteDistribution random_dist(Rng& rng) {
    const int n = 2 + static_cast<int>(rng.below(20));
    std::vector<double> support, probs;
    double x = 0.0, total = 0.0;
    for (int i = 0; i < n; ++i) {
        x += 0.1 + 10.0 * rng.uniform();
        support.push_back(x);
        probs.push_back(0.05 + rng.uniform());
        total += probs.back();
    }
    for (double& p : probs) p /= total;
    return DiscreteDistribution(std::move(support), std::move(probs));
}

MarkovChannel random_chain(Rng& rng, std::size_t n) {
    std::vector<double> p(n * n), r;
    for (std::size_t i = 0; i < n; ++i) {
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            p[i * n + j] = 0.05 + rng.uniform();
            total += p[i * n + j];
        }
        for (std::size_t j = 0; j < n; ++j) p[i * n + j] /= total;
    }
    double x = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x += 0.2 + 5.0 * rng.uniform();
        r.push_back(x);
    }
    return MarkovChannel(n, std::move(p), std::move(r));
}

double oracle_threshold(const DiscreteDistribution& d, double c, double t_c,
                        double T) {
    auto D = [&](double lam) {
        double e = 0.0;
        for (std::size_t i = 0; i < d.support.size(); ++i)
            e += std::max(std::max(d.support[i], c) - lam, 0.0) * d.probs[i];
        return e - lam * t_c / T;
    };
    double lo = 0.0, hi = std::max(d.max_value(), c) + 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (D(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion1() {
    bool ok = true;
    const DiscreteDistribution single({10.0}, {1.0});
    ok &= std::abs(solve_threshold(single, 0.0, 10.0, 40.0) - 8.0) < 1e-9;
    const DiscreteDistribution tp({5.0, 15.0}, {0.5, 0.5});
    ok &= std::abs(solve_threshold(tp, 0.0, 10.0, 40.0) - 10.0) < 1e-9;
    ok &= std::abs(solve_threshold(tp, 12.0, 10.0, 40.0) - 10.8) < 1e-9;
    report(1, "threshold exactness on hand-derived cases", ok,
           fmt("t=%.2fs", now_seconds()));
}

void criterion2() {
    bool ok = true;
    double worst = 0.0;
    Rng rng(777);
    for (int i = 0; i < 100 && ok; ++i) {
        const auto d = random_dist(rng);
        const double c = rng.uniform() < 0.3 ? 0.0 : d.max_value() * rng.uniform();
        const double t_c = 1.0 + 30.0 * rng.uniform();
        const double T = 10.0 + 100.0 * rng.uniform();
        const double got = solve_threshold(d, c, t_c, T);
        const double ref = oracle_threshold(d, c, t_c, T);
        worst = std::max(worst, std::abs(got - ref));
        ok &= std::abs(got - ref) < 1e-8;

        auto D = [&](double lam) {
            double e = 0.0;
            for (std::size_t k = 0; k < d.support.size(); ++k)
                e += std::max(std::max(d.support[k], c) - lam, 0.0) * d.probs[k];
            return e - lam * t_c / T;
        };
        const double hi = std::max(d.max_value(), c);
        double prev = D(0.0);
        for (int k = 1; k <= 100 && ok; ++k) {
            const double cur = D(hi * k / 100.0);
            ok &= cur < prev;
            prev = cur;
        }
    }
    report(2, "solver cross-validation on 100 random instances", ok,
           fmt("max |solver-bisection| = %.2e, t=%.2fs", worst, now_seconds()));
}

void criterion3() {
    bool ok = true;
    std::string detail;

    // Hand-derived 2-state fixed point: both rows (0.2, 0.8), rewards (2, 10),
    // t_c = 1, T = 40, so V(low) = 8b/(1 - 0.2b) = 320/33 with b = 40/41.
    const MarkovChannel two(2, {0.2, 0.8, 0.2, 0.8}, {2.0, 10.0});
    const auto vi = value_iteration(two, 0.0, 1, 40.0);
    ok &= std::abs(vi.values[0] - 320.0 / 33.0) < 1e-3;
    ok &= std::abs(vi.values[1] - 10.0) < 1e-3;

    // Two initializations of the Bellman iteration reach the same fixed point.
    Rng rng(31);
    double worst = 0.0;
    double worst_margin = 0.0; // contraction ratio minus the modulus bound
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const auto chain = random_chain(rng, 2 + rng.below(6));
        const int t_c = 1 + static_cast<int>(rng.below(8));
        const double c = 4.0 * rng.uniform();
        const double disc = std::pow(1.0 / (1.0 + 1.0 / 40.0), t_c);
        const auto pk = k_step(chain, static_cast<std::size_t>(t_c));
        std::vector<double> a(chain.n_states, 0.0), b(chain.n_states, 100.0);
        double trial_contraction = 0.0;
        for (int it = 0; it < 4000; ++it) {
            double gap = 0.0;
            for (std::size_t x = 0; x < chain.n_states; ++x)
                gap = std::max(gap, std::abs(a[x] - b[x]));
            const auto na = bellman_step(chain, pk, c, disc, a);
            const auto nb = bellman_step(chain, pk, c, disc, b);
            double ngap = 0.0;
            for (std::size_t x = 0; x < chain.n_states; ++x)
                ngap = std::max(ngap, std::abs(na[x] - nb[x]));
            if (gap > 1e-14)
                trial_contraction = std::max(trial_contraction, ngap / gap);
            a = na;
            b = nb;
            if (ngap < 1e-12) break;
        }
        double gap = 0.0;
        for (std::size_t x = 0; x < chain.n_states; ++x)
            gap = std::max(gap, std::abs(a[x] - b[x]));
        worst = std::max(worst, gap);
        worst_margin = std::max(worst_margin, trial_contraction - disc);
        ok &= gap < 1e-8;
        ok &= trial_contraction <= disc + 1e-12;
    }
    report(3, "markov fixed point, uniqueness and contraction", ok,
           fmt("max init gap = %.1e, contraction margin = %.1e, t=%.2fs",
               worst, worst_margin, now_seconds()));
}

void criterion4() {
    // A constant-row chain is the IID model in Markov clothing: decisions and
    // thresholds from both solvers must agree (exact discounting), with the
    // beta-power approximation gap reported on the side.
    bool ok = true;
    double worst_rel = 0.0, worst_beta = 0.0;
    Rng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = random_dist(rng);
        for (int t_c : {1, 2, 4, 8, 16}) {
            const double c = rng.uniform() < 0.4
                                 ? 0.0
                                 : 0.8 * d.max_value() * rng.uniform();
            const double lam = solve_threshold(d, c, t_c, 40.0);
            StagePolicy sp{1, c, lam, 0.0, lam < c};

            const auto chain = iid_as_chain(d);
            const auto exact =
                value_iteration(chain, c, t_c, 40.0, DiscountMode::Exact);
            const auto approx =
                value_iteration(chain, c, t_c, 40.0, DiscountMode::BetaPower);

            // decisions per observable state
            for (std::size_t x = 0; x < d.support.size(); ++x) {
                PolicyTable table;
                table.stages.push_back(sp);
                const Action iid_a = decide(table, 1, d.support[x]);
                Action mk_a;
                if (!exact.stop[x])
                    mk_a = Action::Stay;
                else
                    mk_a = d.support[x] >= c ? Action::Stop : Action::Switch;
                ok &= iid_a == mk_a;
            }

            // the continue value of any non-stop state is the meta threshold
            auto continue_value = [&](const ValueIterationResult& r) {
                for (std::size_t x = 0; x < d.support.size(); ++x)
                    if (!r.stop[x]) return r.values[x];
                return -1.0;
            };
            const double w = continue_value(exact);
            if (w > 0.0) {
                const double rel = std::abs(w - lam) / lam;
                worst_rel = std::max(worst_rel, rel);
                ok &= rel < 0.03;
            }
            const double wb = continue_value(approx);
            if (wb > 0.0)
                worst_beta = std::max(worst_beta, std::abs(wb - lam) / lam);
        }
    }
    report(4, "iid/markov consistency on constant-row chains", ok,
           fmt("exact-mode gap = %.2e, beta-approximation gap = %.1f%%, t=%.2fs",
               worst_rel, 100.0 * worst_beta, now_seconds()));
}

void criterion5() {
    bool ok = true;
    const auto dists = exp_dists();
    const auto chains = bd_chains();
    const std::vector<double> g_grid{0.05, 0.1, 0.2, 0.35, 0.5};
    const std::vector<double> t_grid{10, 20, 40, 80, 160};
    std::vector<double> tc, ts;

    auto iid_ev = [&](double g, double T) {
        delays_at(g, T, tc, ts, dists.size());
        const auto table = backward_induction(dists, tc, ts, T);
        std::vector<double> ev;
        for (const auto& s : table.stages) ev.push_back(s.stage_value);
        return ev;
    };
    auto mk_ev = [&](double g, double T) {
        delays_at(g, T, tc, ts, chains.size());
        const auto stages = backward_induction_markov(chains, tc, ts, T);
        std::vector<double> ev;
        for (const auto& s : stages) ev.push_back(s.stage_value);
        return ev;
    };

    for (int family = 0; family < 2; ++family) {
        auto ev_of = [&](double g, double T) {
            return family == 0 ? iid_ev(g, T) : mk_ev(g, T);
        };
        std::vector<double> prev;
        for (double g : g_grid) { // non-increasing in load
            auto ev = ev_of(g, 40.0);
            if (!prev.empty())
                for (std::size_t i = 0; i < ev.size(); ++i)
                    ok &= ev[i] <= prev[i] + 1e-9;
            prev = ev;
        }
        prev.clear();
        for (double T : t_grid) { // non-decreasing in transmission time
            auto ev = ev_of(0.3, T);
            if (!prev.empty())
                for (std::size_t i = 0; i < ev.size(); ++i)
                    ok &= ev[i] >= prev[i] - 1e-9;
            prev = ev;
        }
    }
    report(5, "stage-value monotonicity in load and in T, both families", ok,
           fmt("t=%.2fs", now_seconds()));
}

// Shared scenario text for the system-level criteria.
Scenario system_scenario(const std::string& extra) {
    return parse_scenario(
        "version = 1\n"
        "name = accept\n"
        "channel = exponential mean=2.5\n"
        "channel = exponential mean=1.6667\n"
        "channel = exponential mean=2\n"
        "channel = exponential mean=3.3333\n"
        "channel = exponential mean=5\n"
        "users = 10\n"
        "T = 40\n"
        "payload = 100\n"
        "horizon = 40000\n"
        "warmup = 4000\n"
        "seed = 9\n"
        "mode = contention\n" +
        extra);
}

std::vector<SimStats>& collected_stats() {
    static std::vector<SimStats> s;
    return s;
}

Summary run_grid_point(const Scenario& sc, RunPoint pt, int reps) {
    const auto results = run_replications(sc, pt, reps, true);
    for (const auto& r : results) collected_stats().push_back(r.stats);
    return summarize_throughput(results);
}

void criterion6() {
    bool ok = true;
    std::string notes;
    const int reps = 10;
    // Payload large enough that every load point saturates the queues: the
    // comparison is then about MAC efficiency, not the offered byte rate.
    const Scenario sc = system_scenario("load = 0.3\npayload = 1024\n");
    const std::vector<double> loads{0.1, 0.2, 0.3, 0.4, 0.5};

    // nested vs baseline across the load grid, paired seeds
    std::vector<Summary> nested, baseline;
    for (double g : loads) {
        RunPoint pt = scenario_point(sc);
        pt.load = g;
        nested.push_back(run_grid_point(sc, pt, reps));
        pt.policy_kind = PolicyKind::Baseline;
        baseline.push_back(run_grid_point(sc, pt, reps));
    }
    for (std::size_t i = 0; i < loads.size(); ++i) {
        const bool ge = nested[i].mean + nested[i].ci95 + baseline[i].ci95 >=
                        baseline[i].mean;
        if (!ge) notes += fmt("nested<baseline@G=%.1f ", loads[i]);
        ok &= ge;
    }

    // The shrinking nested-over-baseline gap is a property of a user facing a
    // given congestion level, so it is checked against an exogenous G axis:
    // a single saturated user with analytic delays at per-channel load G.
    {
        const Scenario md = system_scenario(
            "users = 1\npayload = 1024\nmode = mean-delay\n"
            "horizon = 60000\nwarmup = 6000\nload = 0.5\n");
        double prev_gap = 1e300, prev_slack = 0.0;
        for (double g : {0.5, 1.0, 1.5, 2.0, 2.5}) { // per-channel G 0.1..0.5
            RunPoint pt = scenario_point(md);
            pt.load = g;
            const Summary n = run_grid_point(md, pt, reps);
            pt.policy_kind = PolicyKind::Baseline;
            const Summary b = run_grid_point(md, pt, reps);
            if (n.mean + n.ci95 + b.ci95 < b.mean) {
                notes += fmt("md nested<baseline@G=%.1f ", g / 5.0);
                ok = false;
            }
            const double gap = n.mean - b.mean;
            const double slack = n.ci95 + b.ci95;
            if (gap > prev_gap + prev_slack + slack) {
                notes += fmt("gap up@G=%.1f ", g / 5.0);
                ok = false;
            }
            prev_gap = gap;
            prev_slack = slack;
        }
    }

    // throughput non-decreasing in T
    Summary prev{};
    bool first = true;
    for (double T : {10.0, 20.0, 40.0, 80.0, 160.0}) {
        RunPoint pt = scenario_point(sc);
        pt.transmission_time = T;
        const Summary s = run_grid_point(sc, pt, reps);
        if (!first && s.mean + s.ci95 + prev.ci95 < prev.mean) {
            notes += fmt("T drop@%g ", T);
            ok = false;
        }
        prev = s;
        first = false;
    }

    // throughput non-decreasing in N (fixed total load)
    first = true;
    for (int n : {1, 2, 3, 4, 5}) {
        RunPoint pt = scenario_point(sc);
        pt.n_channels = n;
        const Summary s = run_grid_point(sc, pt, reps);
        if (!first && s.mean + s.ci95 + prev.ci95 < prev.mean) {
            notes += fmt("N drop@%.0f ", static_cast<double>(n));
            ok = false;
        }
        prev = s;
        first = false;
    }

    // random sensing orders beat one shared greedy order at the highest load
    RunPoint pt = scenario_point(sc);
    pt.load = 0.5;
    const Summary rnd = run_grid_point(sc, pt, reps);
    pt.sensing_order = SensingOrder::GreedyDescendingMean;
    const Summary greedy = run_grid_point(sc, pt, reps);
    if (rnd.mean + rnd.ci95 + greedy.ci95 < greedy.mean) {
        notes += "greedy>random@G=0.5 ";
        ok = false;
    }

    report(6, "system throughput shapes under contention", ok,
           notes + fmt("t=%.2fs", now_seconds()));
}

void criterion7() {
    bool ok = true;
    std::string notes;
    const std::vector<double> loads{0.05, 0.1, 0.3, 0.5};
    std::vector<double> tc, ts;

    // Markov family: the STOP set is an upper set of the state index on all
    // five channels at every load.
    const auto chains = bd_chains();
    for (double g : loads) {
        delays_at(g, 40.0, tc, ts, chains.size());
        const auto stages = backward_induction_markov(chains, tc, ts, 40.0);
        for (const auto& sp : stages)
            for (std::size_t x = 1; x < sp.decisions.size(); ++x)
                if (sp.decisions[x - 1] == Action::Stop &&
                    sp.decisions[x] != Action::Stop) {
                    notes += fmt("stop-set gap ch%.0f@G=%.2f ",
                                 static_cast<double>(sp.stage), g);
                    ok = false;
                }
    }

    // IID family: the two lowest-mean channels take the switch branch, the
    // first channel takes the stay branch, and the number of stay branches
    // never falls as the load rises.
    const auto dists = exp_dists();
    int prev_stays = -1;
    for (double g : loads) {
        delays_at(g, 40.0, tc, ts, dists.size());
        const auto table = backward_induction(dists, tc, ts, 40.0);
        if (!table.stages[1].switch_branch || !table.stages[2].switch_branch) {
            notes += fmt("low-mean stages not switch@G=%.2f ", g);
            ok = false;
        }
        if (table.stages[0].switch_branch) {
            notes += fmt("stage 1 not stay@G=%.2f ", g);
            ok = false;
        }
        int stays = 0;
        for (const auto& sp : table.stages)
            if (!sp.switch_branch) ++stays;
        if (prev_stays >= 0 && stays < prev_stays) {
            notes += fmt("stay count fell@G=%.2f ", g);
            ok = false;
        }
        prev_stays = stays;
    }
    report(7, "decision-table structure for both channel families", ok,
           notes + fmt("t=%.2fs", now_seconds()));
}

void criterion8() {
    bool ok = true;
    std::string notes;
    // The fixed point is only meaningful below the stability bound: small
    // packets and a calmer backoff keep every load point inside it.
    const Scenario sc = system_scenario(
        "load = 0.3\npayload = 20\ninv_zeta = 10\nhorizon = 100000\nwarmup = 10000\n");
    const std::vector<double> loads{0.1, 0.2, 0.3, 0.4, 0.5};

    std::vector<std::vector<double>> converged;
    std::vector<SimStats> finals;
    for (double total : loads) {
        RunPoint pt = scenario_point(sc);
        pt.load = total;
        const SimConfig cfg = point_config(sc, pt, sc.config.seed);
        const auto res = equilibrium_loads(cfg, sc.models, cfg.assumed_loads);
        if (!res.converged) {
            notes += fmt("no convergence@load=%.1f ", total);
            ok = false;
        }
        converged.push_back(res.loads);
        finals.push_back(res.last_stats);
        collected_stats().push_back(res.last_stats);
    }

    // per-channel converged loads non-decreasing in the external load, with
    // slack from the window-to-window variability of the attempt rate
    for (std::size_t i = 1; i < loads.size(); ++i) {
        for (std::size_t c = 0; c < converged[i].size(); ++c) {
            const auto& w = finals[i].attempt_rate_windows[c];
            double mean = 0.0, var = 0.0;
            for (double v : w) mean += v;
            mean /= static_cast<double>(w.size());
            for (double v : w) var += (v - mean) * (v - mean);
            var /= static_cast<double>(w.size() - 1);
            const double slack = 3.0 * std::sqrt(var / static_cast<double>(w.size())) + 2e-3;
            if (converged[i][c] + slack < converged[i - 1][c]) {
                notes += fmt("G%.0f fell@load=%.1f ", static_cast<double>(c + 1),
                             loads[i]);
                ok = false;
            }
        }
    }

    // split-half stationarity of the attempt process at the heaviest load
    const auto& stats = finals.back();
    for (std::size_t c = 0; c < stats.attempt_rate_windows.size(); ++c) {
        const auto& w = stats.attempt_rate_windows[c];
        const std::size_t h = w.size() / 2;
        double m1 = 0.0, m2 = 0.0;
        for (std::size_t i = 0; i < h; ++i) m1 += w[i];
        for (std::size_t i = h; i < w.size(); ++i) m2 += w[i];
        m1 /= static_cast<double>(h);
        m2 /= static_cast<double>(w.size() - h);
        double v1 = 0.0, v2 = 0.0;
        for (std::size_t i = 0; i < h; ++i) v1 += (w[i] - m1) * (w[i] - m1);
        for (std::size_t i = h; i < w.size(); ++i) v2 += (w[i] - m2) * (w[i] - m2);
        v1 /= static_cast<double>(h - 1);
        v2 /= static_cast<double>(w.size() - h - 1);
        const double se = std::sqrt(v1 / static_cast<double>(h) +
                                    v2 / static_cast<double>(w.size() - h));
        if (se > 0.0 && std::abs(m1 - m2) > 3.0 * se) {
            notes += fmt("nonstationary ch%.0f ", static_cast<double>(c + 1));
            ok = false;
        }
    }
    report(8, "mean-field load equilibrium and stationarity", ok,
           notes + fmt("t=%.2fs", now_seconds()));
}

void criterion9() {
    bool ok = true;
    std::string notes;

    // conservation on every run collected so far
    for (const auto& s : collected_stats()) {
        if (s.packets_generated != s.packets_delivered + s.packets_in_queue) {
            notes += "conservation violated ";
            ok = false;
            break;
        }
        if (!s.exclusivity_ok) {
            notes += "exclusivity violated ";
            ok = false;
            break;
        }
    }

    // seed determinism
    const Scenario sc = system_scenario("load = 0.3\n");
    const RunPoint pt = scenario_point(sc);
    const auto a = run_point(sc, pt, 0);
    const auto b = run_point(sc, pt, 0);
    if (a.stats.throughput != b.stats.throughput ||
        a.stats.packets_generated != b.stats.packets_generated) {
        notes += "nondeterministic ";
        ok = false;
    }

    // single saturated user, constant-rate channel, analytic handshake delays
    // at zero load: long-run throughput is x0 * 40 / 42, within 1%.
    SimConfig cfg;
    cfg.n_channels = 1;
    cfg.n_users = 1;
    cfg.transmission_time = 40.0;
    cfg.arrival_rate = 0.05;
    cfg.packet_payload = 10000.0;
    cfg.horizon = 10000000.0;
    cfg.warmup = 100000.0;
    cfg.seed = 21;
    cfg.mode = SimMode::MeanDelay;
    cfg.assumed_loads = {0.0};
    const double x0 = 10.0;
    const std::vector<ChannelModel> models{DiscreteDistribution({x0}, {1.0})};
    const auto stats = run(cfg, models, build_policies(cfg, models, {0.0}));
    const double expected = x0 * 40.0 / 42.0;
    const double rel = std::abs(stats.throughput - expected) / expected;
    if (rel >= 0.01) {
        notes += fmt("renewal off by %.2f%% ", 100.0 * rel);
        ok = false;
    }
    report(9, "simulator hygiene and the renewal-rate oracle", ok,
           notes + fmt("renewal error %.3f%%, t=%.2fs", 100.0 * rel,
                       now_seconds()));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d of 9 criteria passed (%.1fs total)\n", 9 - g_failures,
                now_seconds());
    return g_failures;
}

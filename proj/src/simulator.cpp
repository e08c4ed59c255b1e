#include "osa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "osa/congestion.hpp"

namespace osa {

void SimConfig::validate() const {
    if (n_channels <= 0 || n_users <= 0)
        throw std::invalid_argument("need at least one channel and one user");
    if (horizon <= warmup || warmup < 0.0)
        throw std::invalid_argument("need horizon > warmup >= 0");
    if (arrival_rate < 0.0) throw std::invalid_argument("arrival rate must be >= 0");
    if (transmission_time < 1.0) throw std::invalid_argument("T must be >= 1");
    if (packet_payload <= 0.0) throw std::invalid_argument("payload must be > 0");
}

double model_mean(const ChannelModel& model) {
    if (const auto* d = std::get_if<DiscreteDistribution>(&model)) return d->mean();
    const auto& chain = std::get<MarkovChannel>(model);
    const auto pi = stationary(chain);
    double m = 0.0;
    for (std::size_t i = 0; i < chain.n_states; ++i) m += pi[i] * chain.rewards[i];
    return m;
}

std::vector<std::vector<int>> make_sequences(
    const SimConfig& config, const std::vector<ChannelModel>& models) {
    const int n = config.n_channels;
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> seqs(static_cast<std::size_t>(config.n_users));
    if (config.sensing_order == SensingOrder::GreedyDescendingMean) {
        std::vector<double> means(models.size());
        for (std::size_t i = 0; i < models.size(); ++i) means[i] = model_mean(models[i]);
        std::stable_sort(base.begin(), base.end(), [&](int a, int b) {
            return means[static_cast<std::size_t>(a)] > means[static_cast<std::size_t>(b)];
        });
        for (auto& s : seqs) s = base;
    } else {
        Rng root(config.seed);
        for (std::size_t u = 0; u < seqs.size(); ++u) {
            seqs[u] = base;
            Rng r = root.split(0x5eedu + u);
            std::shuffle(seqs[u].begin(), seqs[u].end(), r.engine());
        }
    }
    return seqs;
}

std::vector<UserPolicy> build_policies(const SimConfig& config,
                                       const std::vector<ChannelModel>& models,
                                       const std::vector<double>& loads) {
    if (loads.size() != models.size())
        throw std::invalid_argument("load vector must match channel count");
    const double T = config.transmission_time;

    std::vector<double> tc(models.size()), ts(models.size());
    for (std::size_t i = 0; i < models.size(); ++i) {
        tc[i] = congestion::contention_delay(loads[i], config.inv_zeta);
        ts[i] = congestion::switching_delay(loads[i], T, config.inv_zeta);
    }

    const bool iid = std::holds_alternative<DiscreteDistribution>(models.front());
    for (const auto& m : models)
        if (std::holds_alternative<DiscreteDistribution>(m) != iid)
            throw std::invalid_argument("cannot mix IID and Markov channels");

    auto seqs = make_sequences(config, models);
    std::vector<UserPolicy> out(seqs.size());
    for (std::size_t u = 0; u < seqs.size(); ++u) {
        UserPolicy& p = out[u];
        p.kind = PolicyKind::Nested;
        p.sequence = seqs[u];
        std::vector<double> seq_tc, seq_ts;
        for (int ch : p.sequence) {
            seq_tc.push_back(tc[static_cast<std::size_t>(ch)]);
            seq_ts.push_back(ts[static_cast<std::size_t>(ch)]);
        }
        if (iid) {
            std::vector<DiscreteDistribution> dists;
            for (int ch : p.sequence)
                dists.push_back(std::get<DiscreteDistribution>(models[static_cast<std::size_t>(ch)]));
            p.iid = backward_induction(dists, seq_tc, seq_ts, T);
        } else {
            std::vector<MarkovChannel> chains;
            for (int ch : p.sequence)
                chains.push_back(std::get<MarkovChannel>(models[static_cast<std::size_t>(ch)]));
            p.markov = backward_induction_markov(chains, seq_tc, seq_ts, T);
        }
    }
    return out;
}

std::vector<UserPolicy> baseline_policy(const SimConfig& config,
                                        const std::vector<ChannelModel>& models) {
    auto seqs = make_sequences(config, models);
    std::vector<UserPolicy> out(seqs.size());
    for (std::size_t u = 0; u < seqs.size(); ++u) {
        out[u].kind = PolicyKind::Baseline;
        out[u].sequence = seqs[u];
    }
    return out;
}

namespace {

enum class EventType : uint8_t {
    PacketArrival,
    AttemptStart,
    AttemptResolve,
    AccessGrant,
    Decide,
    TxComplete,
};

struct Event {
    double time = 0.0;
    uint64_t seq = 0;
    EventType type = EventType::PacketArrival;
    int user = -1;
    double aux = 0.0; // attempt start time for AttemptResolve

    bool operator>(const Event& o) const {
        if (time != o.time) return time > o.time;
        return seq > o.seq;
    }
};

enum class Phase : uint8_t {
    Idle,
    Backoff,
    Window,
    WaitingFree,
    Reserved,
    Transmitting,
};

struct UserCtx {
    Rng rng{0};
    Phase phase = Phase::Idle;
    uint64_t packets = 0;       // queued, including the partially sent head
    double head_remaining = 0.0;
    std::size_t stage = 0;      // index into sequence
    int channel = -1;
    bool after_switch = false;  // next analytic delay uses t_s
    int collisions = 0;         // consecutive, drives backoff escalation
    double request_start = 0.0; // access-delay measurement
    double observed = 0.0;      // condition sampled at reservation
};

struct ChannelCtx {
    Rng rng{0};
    double busy_until = 0.0;
    int occupant = -1;
    std::deque<double> attempt_times;
    std::vector<int> waiters;
    // Markov temporal state
    std::size_t state = 0;
    int64_t state_time = 0;
    // measurement
    uint64_t attempts = 0;
    uint64_t window_attempts = 0;
    uint64_t wins = 0;
    double busy_time = 0.0;
    double busy_mark = -1.0;
    double delay_sum = 0.0;
    uint64_t delay_count = 0;
};

class Sim {
public:
    Sim(const SimConfig& cfg, const std::vector<ChannelModel>& models,
        const std::vector<UserPolicy>& policies)
        : cfg_(cfg), models_(models), policies_(policies) {
        cfg_.validate();
        if (static_cast<int>(models.size()) != cfg_.n_channels)
            throw std::invalid_argument("model list size mismatch");
        if (static_cast<int>(policies.size()) != cfg_.n_users)
            throw std::invalid_argument("policy list size mismatch");
        Rng root(cfg_.seed);
        users_.resize(static_cast<std::size_t>(cfg_.n_users));
        for (std::size_t u = 0; u < users_.size(); ++u)
            users_[u].rng = root.split(0x100000u + u);
        channels_.resize(static_cast<std::size_t>(cfg_.n_channels));
        for (std::size_t c = 0; c < channels_.size(); ++c)
            channels_[c].rng = root.split(0x200000u + c);
        window_counts_.assign(channels_.size(),
                              std::vector<uint64_t>(kWindows, 0));
        if (cfg_.mode == SimMode::MeanDelay) {
            if (cfg_.assumed_loads.size() != models.size())
                throw std::invalid_argument(
                    "mean-delay mode needs an assumed load per channel");
            for (double g : cfg_.assumed_loads) {
                tc_.push_back(congestion::contention_delay(g, cfg_.inv_zeta));
                ts_.push_back(congestion::switching_delay(g, cfg_.transmission_time,
                                                          cfg_.inv_zeta));
            }
        }
    }

    SimStats run() {
        for (int u = 0; u < cfg_.n_users; ++u)
            if (cfg_.arrival_rate > 0.0)
                schedule(next_arrival_time(u, 0.0), EventType::PacketArrival, u);

        while (!queue_.empty()) {
            Event ev = queue_.top();
            queue_.pop();
            if (ev.time > cfg_.horizon) break;
            now_ = ev.time;
            dispatch(ev);
        }
        now_ = cfg_.horizon;
        return finalize();
    }

private:
    static constexpr double kControlUnit = 1.0; // control-packet time
    static constexpr int kWindows = 16;

    SimConfig cfg_;
    const std::vector<ChannelModel>& models_;
    const std::vector<UserPolicy>& policies_;
    std::vector<UserCtx> users_;
    std::vector<ChannelCtx> channels_;
    std::vector<double> tc_, ts_; // analytic delays (mean-delay mode)
    std::priority_queue<Event, std::vector<Event>, std::greater<>> queue_;
    uint64_t seq_ = 0;
    double now_ = 0.0;

    uint64_t generated_ = 0, delivered_pkts_ = 0;
    double delivered_bytes_ = 0.0;
    std::array<uint64_t, 3> decisions_{};
    std::vector<std::vector<uint64_t>> window_counts_;
    bool exclusivity_ok_ = true;

    bool measuring() const { return now_ >= cfg_.warmup; }

    void schedule(double t, EventType type, int user, double aux = 0.0) {
        queue_.push(Event{t, seq_++, type, user, aux});
    }

    double next_arrival_time(int u, double from) {
        return from + users_[static_cast<std::size_t>(u)].rng.exponential(
                          1.0 / cfg_.arrival_rate);
    }

    ChannelCtx& ch(int c) { return channels_[static_cast<std::size_t>(c)]; }
    UserCtx& usr(int u) { return users_[static_cast<std::size_t>(u)]; }

    bool channel_busy(int c) { return now_ < ch(c).busy_until; }

    void mark_busy(int c, double until) {
        ChannelCtx& cc = ch(c);
        if (cc.busy_mark < 0.0) cc.busy_mark = std::max(now_, cfg_.warmup);
        cc.busy_until = until;
    }

    void mark_free(int c) {
        ChannelCtx& cc = ch(c);
        cc.busy_until = now_;
        cc.occupant = -1;
        if (cc.busy_mark >= 0.0) {
            cc.busy_time += std::max(0.0, now_ - cc.busy_mark);
            cc.busy_mark = -1.0;
        }
    }

    // --- channel condition ---------------------------------------------

    // Observed condition and (for Markov) the state index behind it.
    std::pair<double, std::size_t> observe(int c) {
        if (const auto* d = std::get_if<DiscreteDistribution>(
                &models_[static_cast<std::size_t>(c)]))
            return {d->sample(ch(c).rng), 0};
        const auto& chain = std::get<MarkovChannel>(models_[static_cast<std::size_t>(c)]);
        ChannelCtx& cc = ch(c);
        const int64_t target = static_cast<int64_t>(std::floor(now_));
        while (cc.state_time < target) {
            cc.state = chain.sample_next(cc.state, cc.rng);
            ++cc.state_time;
        }
        return {chain.rewards[cc.state], cc.state};
    }

    // --- access initiation ----------------------------------------------

    // Begin (or resume) seeking access for user u on its current channel.
    void seek_access(int u, bool fresh_request) {
        UserCtx& uc = usr(u);
        if (fresh_request) {
            uc.request_start = now_;
            uc.collisions = 0;
        }
        if (cfg_.mode == SimMode::Contention) {
            // Escalate the mean backoff on consecutive collisions so a crowd
            // on one channel thins out instead of colliding forever.
            const double mean =
                cfg_.inv_zeta * static_cast<double>(1 << std::min(uc.collisions, 6));
            uc.phase = Phase::Backoff;
            schedule(now_ + uc.rng.exponential(mean), EventType::AttemptStart, u);
        } else {
            const auto c = static_cast<std::size_t>(uc.channel);
            const double mean = uc.after_switch ? ts_[c] : tc_[c];
            uc.phase = Phase::Backoff;
            schedule(now_ + uc.rng.exponential(mean), EventType::AccessGrant, u);
        }
    }

    void start_process(int u) {
        UserCtx& uc = usr(u);
        uc.stage = 0;
        uc.after_switch = false;
        if (policies_[static_cast<std::size_t>(u)].kind == PolicyKind::Baseline)
            uc.channel = static_cast<int>(uc.rng.below(
                static_cast<uint64_t>(cfg_.n_channels)));
        else
            uc.channel = policies_[static_cast<std::size_t>(u)].sequence[0];
        seek_access(u, true);
    }

    void count_attempt(int c) {
        if (!measuring()) return;
        ChannelCtx& cc = ch(c);
        ++cc.attempts;
        const double span = (cfg_.horizon - cfg_.warmup) / kWindows;
        auto w = static_cast<std::size_t>((now_ - cfg_.warmup) / span);
        if (w >= kWindows) w = kWindows - 1;
        ++window_counts_[static_cast<std::size_t>(c)][w];
    }

    // --- event handlers ---------------------------------------------------

    void dispatch(const Event& ev) {
        switch (ev.type) {
            case EventType::PacketArrival: on_arrival(ev.user); break;
            case EventType::AttemptStart: on_attempt(ev.user); break;
            case EventType::AttemptResolve: on_resolve(ev.user, ev.aux); break;
            case EventType::AccessGrant: on_grant(ev.user); break;
            case EventType::Decide: on_decide(ev.user); break;
            case EventType::TxComplete: on_tx_complete(ev.user); break;
        }
    }

    void on_arrival(int u) {
        UserCtx& uc = usr(u);
        ++generated_;
        ++uc.packets;
        if (uc.packets == 1) uc.head_remaining = cfg_.packet_payload;
        schedule(next_arrival_time(u, now_), EventType::PacketArrival, u);
        if (uc.phase == Phase::Idle) start_process(u);
    }

    void on_attempt(int u) {
        UserCtx& uc = usr(u);
        const int c = uc.channel;
        count_attempt(c);
        if (channel_busy(c)) {
            uc.phase = Phase::WaitingFree;
            ch(c).waiters.push_back(u);
            return;
        }
        ChannelCtx& cc = ch(c);
        cc.attempt_times.push_back(now_);
        while (!cc.attempt_times.empty() &&
               cc.attempt_times.front() < now_ - 4.0 * kControlUnit)
            cc.attempt_times.pop_front();
        if (measuring()) ++cc.window_attempts;
        uc.phase = Phase::Window;
        schedule(now_ + kControlUnit, EventType::AttemptResolve, u, now_);
    }

    void on_resolve(int u, double start) {
        UserCtx& uc = usr(u);
        ChannelCtx& cc = ch(uc.channel);
        // Collision iff any other attempt-start fell within one control unit
        // of ours on either side.
        bool collided = false;
        for (double t : cc.attempt_times) {
            if (t == start) continue;
            if (std::abs(t - start) < kControlUnit) {
                collided = true;
                break;
            }
        }
        if (collided || channel_busy(uc.channel)) {
            ++uc.collisions;
            seek_access(u, false); // redraw backoff, escalated
            return;
        }
        uc.collisions = 0;
        if (measuring()) ++cc.wins;
        if (cc.occupant != -1) exclusivity_ok_ = false;
        cc.occupant = u;
        mark_busy(uc.channel, now_ + kControlUnit); // CTS / reservation
        uc.phase = Phase::Reserved;
        schedule(now_ + kControlUnit, EventType::Decide, u);
    }

    void on_grant(int u) {
        UserCtx& uc = usr(u);
        const int c = uc.channel;
        count_attempt(c);
        if (channel_busy(c)) {
            uc.phase = Phase::WaitingFree;
            ch(c).waiters.push_back(u);
            return;
        }
        ChannelCtx& cc = ch(c);
        if (measuring()) ++cc.wins;
        if (cc.occupant != -1) exclusivity_ok_ = false;
        cc.occupant = u;
        uc.phase = Phase::Reserved;
        on_decide(u);
    }

    Action policy_decision(int u, double x, std::size_t state) {
        const UserPolicy& p = policies_[static_cast<std::size_t>(u)];
        if (p.kind == PolicyKind::Baseline) return Action::Stop;
        if (!p.iid.stages.empty())
            return decide(p.iid, static_cast<int>(usr(u).stage) + 1, x);
        return decide_markov(p.markov[usr(u).stage], state);
    }

    void on_decide(int u) {
        UserCtx& uc = usr(u);
        const int c = uc.channel;
        const auto [x, state] = observe(c);
        const Action a = policy_decision(u, x, state);
        if (measuring()) {
            ++decisions_[static_cast<std::size_t>(a)];
            ChannelCtx& cc = ch(c);
            cc.delay_sum += now_ - uc.request_start;
            ++cc.delay_count;
        }
        switch (a) {
            case Action::Stop:
                uc.observed = x;
                uc.phase = Phase::Transmitting;
                mark_busy(c, now_ + cfg_.transmission_time);
                schedule(now_ + cfg_.transmission_time, EventType::TxComplete, u);
                break;
            case Action::Stay:
                mark_free(c);
                release_waiters(c);
                uc.after_switch = false;
                seek_access(u, true);
                break;
            case Action::Switch: {
                mark_free(c);
                release_waiters(c);
                ++uc.stage;
                const auto& seq = policies_[static_cast<std::size_t>(u)].sequence;
                uc.channel = seq.at(uc.stage);
                uc.after_switch = true;
                seek_access(u, true);
                break;
            }
        }
    }

    void on_tx_complete(int u) {
        UserCtx& uc = usr(u);
        const int c = uc.channel;
        double budget = uc.observed * cfg_.transmission_time;
        double sent = 0.0;
        while (budget > 0.0 && uc.packets > 0) {
            const double chunk = std::min(budget, uc.head_remaining);
            uc.head_remaining -= chunk;
            budget -= chunk;
            sent += chunk;
            if (uc.head_remaining == 0.0) {
                --uc.packets;
                ++delivered_pkts_;
                uc.head_remaining = uc.packets > 0 ? cfg_.packet_payload : 0.0;
            }
        }
        if (measuring()) delivered_bytes_ += sent;
        mark_free(c);
        release_waiters(c);
        if (uc.packets > 0)
            start_process(u);
        else
            uc.phase = Phase::Idle;
    }

    void release_waiters(int c) {
        ChannelCtx& cc = ch(c);
        if (cc.waiters.empty()) return;
        if (cfg_.mode == SimMode::Contention) {
            // Everyone redraws a fresh backoff.
            std::vector<int> w;
            w.swap(cc.waiters);
            for (int u : w) seek_access(u, false);
        } else {
            // FIFO grant, one at a time.
            const int u = cc.waiters.front();
            cc.waiters.erase(cc.waiters.begin());
            schedule(now_, EventType::AccessGrant, u);
        }
    }

    SimStats finalize() {
        SimStats s;
        s.elapsed = cfg_.horizon - cfg_.warmup;
        s.delivered_bytes = delivered_bytes_;
        s.throughput = delivered_bytes_ / s.elapsed;
        s.decision_counts = decisions_;
        s.packets_generated = generated_;
        s.packets_delivered = delivered_pkts_;
        s.exclusivity_ok = exclusivity_ok_;
        for (const auto& uc : users_) s.packets_in_queue += uc.packets;

        const double span = s.elapsed / kWindows;
        for (std::size_t c = 0; c < channels_.size(); ++c) {
            ChannelCtx& cc = channels_[c];
            if (cc.busy_mark >= 0.0) {
                cc.busy_time += std::max(0.0, cfg_.horizon - cc.busy_mark);
                cc.busy_mark = -1.0;
            }
            s.attempt_rate.push_back(static_cast<double>(cc.attempts) / s.elapsed);
            s.mean_access_delay.push_back(
                cc.delay_count > 0 ? cc.delay_sum / static_cast<double>(cc.delay_count)
                                   : 0.0);
            s.contention_attempts.push_back(cc.window_attempts);
            s.contention_wins.push_back(cc.wins);
            s.busy_time.push_back(cc.busy_time);
            std::vector<double> win;
            for (uint64_t k : window_counts_[c])
                win.push_back(static_cast<double>(k) / span);
            s.attempt_rate_windows.push_back(std::move(win));
        }
        return s;
    }
};

} // namespace

SimStats run(const SimConfig& config, const std::vector<ChannelModel>& models,
             const std::vector<UserPolicy>& policies) {
    Sim sim(config, models, policies);
    return sim.run();
}

EquilibriumResult equilibrium_loads(const SimConfig& config,
                                    const std::vector<ChannelModel>& models,
                                    std::vector<double> initial_loads) {
    if (initial_loads.size() != models.size())
        throw std::invalid_argument("initial load vector must match channel count");
    constexpr double kAlpha = 0.5;
    constexpr double kTol = 1e-3;
    constexpr int kMaxRounds = 50;

    EquilibriumResult res;
    res.loads = std::move(initial_loads);
    for (int round = 0; round < kMaxRounds; ++round) {
        res.policies = config.policy_kind == PolicyKind::Baseline
                           ? baseline_policy(config, models)
                           : build_policies(config, models, res.loads);
        SimConfig cfg = config;
        cfg.assumed_loads = res.loads;
        res.last_stats = run(cfg, models, res.policies);
        res.rounds = round + 1;
        double max_delta = 0.0;
        for (std::size_t i = 0; i < res.loads.size(); ++i) {
            const double next =
                (1.0 - kAlpha) * res.loads[i] + kAlpha * res.last_stats.attempt_rate[i];
            max_delta = std::max(max_delta, std::abs(next - res.loads[i]));
            res.loads[i] = next;
        }
        if (max_delta < kTol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

} // namespace osa

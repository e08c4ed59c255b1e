#include "osa/experiments.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace osa {

uint64_t replication_seed(uint64_t base_seed, int replication) {
    return base_seed * 1000000ULL + static_cast<uint64_t>(replication);
}

RunPoint scenario_point(const Scenario& sc) {
    RunPoint pt;
    pt.load = sc.load;
    pt.transmission_time = sc.config.transmission_time;
    pt.n_channels = static_cast<int>(sc.models.size());
    pt.policy_kind = sc.config.policy_kind;
    pt.sensing_order = sc.config.sensing_order;
    return pt;
}

std::vector<ChannelModel> point_models(const Scenario& sc, int n_channels) {
    if (n_channels < 1) throw std::invalid_argument("need at least one channel");
    std::vector<ChannelModel> models;
    for (int i = 0; i < n_channels; ++i)
        models.push_back(sc.models[static_cast<std::size_t>(i) % sc.models.size()]);
    return models;
}

SimConfig point_config(const Scenario& sc, const RunPoint& pt, uint64_t seed) {
    SimConfig cfg = sc.config;
    cfg.n_channels = pt.n_channels;
    cfg.transmission_time = pt.transmission_time;
    cfg.policy_kind = pt.policy_kind;
    cfg.sensing_order = pt.sensing_order;
    cfg.arrival_rate = pt.load / cfg.n_users;
    cfg.seed = seed;
    cfg.assumed_loads.assign(static_cast<std::size_t>(pt.n_channels),
                             pt.load / pt.n_channels);
    return cfg;
}

RunResult run_point(const Scenario& sc, const RunPoint& pt, int replication) {
    RunResult r;
    r.point = pt;
    r.seed = replication_seed(sc.config.seed, replication);
    const auto models = point_models(sc, pt.n_channels);
    const SimConfig cfg = point_config(sc, pt, r.seed);
    const auto policies = pt.policy_kind == PolicyKind::Baseline
                              ? baseline_policy(cfg, models)
                              : build_policies(cfg, models, cfg.assumed_loads);
    r.stats = run(cfg, models, policies);
    return r;
}

std::vector<RunResult> run_replications(const Scenario& sc, const RunPoint& pt,
                                        int replications, bool parallel) {
    std::vector<RunResult> out(static_cast<std::size_t>(replications));
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int rep = 0; rep < replications; ++rep)
            out[static_cast<std::size_t>(rep)] = run_point(sc, pt, rep);
    } else {
        for (int rep = 0; rep < replications; ++rep)
            out[static_cast<std::size_t>(rep)] = run_point(sc, pt, rep);
    }
    return out;
}

std::vector<RunPoint> sweep_points(const Scenario& sc, SweepAxis axis,
                                   const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("empty sweep grid");
    std::vector<RunPoint> pts;
    for (double v : grid) {
        RunPoint pt = scenario_point(sc);
        switch (axis) {
            case SweepAxis::Load: pt.load = v; break;
            case SweepAxis::Time: pt.transmission_time = v; break;
            case SweepAxis::Channels: pt.n_channels = static_cast<int>(v); break;
            case SweepAxis::None:
                throw std::invalid_argument("sweep needs an axis");
        }
        pts.push_back(pt);
    }
    return pts;
}

namespace {

const char* kind_name(PolicyKind k) {
    return k == PolicyKind::Baseline ? "baseline" : "nested";
}
const char* mode_name(SimMode m) {
    return m == SimMode::MeanDelay ? "mean-delay" : "contention";
}
const char* order_name(SensingOrder o) {
    return o == SensingOrder::GreedyDescendingMean ? "greedy" : "random";
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

uint64_t config_hash(const Scenario& sc, const RunPoint& pt) {
    std::ostringstream os;
    os << sc.name << '|' << sc.config.n_users << '|' << sc.config.inv_zeta << '|'
       << sc.config.packet_payload << '|' << sc.config.horizon << '|'
       << sc.config.warmup << '|' << mode_name(sc.config.mode) << '|'
       << pt.load << '|' << pt.transmission_time << '|' << pt.n_channels << '|'
       << kind_name(pt.policy_kind) << '|' << order_name(pt.sensing_order);
    return fnv1a(os.str());
}

void write_csv_header(std::ostream& out) {
    out << "config_hash,seed,load,T,N,policy,mode,sensing_order,throughput,"
           "g_hat,stop,stay,switch,generated,delivered,in_queue\n";
}

void write_csv_row(std::ostream& out, const Scenario& sc, const RunResult& r) {
    out << std::hex << config_hash(sc, r.point) << std::dec << ',' << r.seed
        << ',' << r.point.load << ',' << r.point.transmission_time << ','
        << r.point.n_channels << ',' << kind_name(r.point.policy_kind) << ','
        << mode_name(sc.config.mode) << ',' << order_name(r.point.sensing_order)
        << ',' << r.stats.throughput << ',';
    for (std::size_t i = 0; i < r.stats.attempt_rate.size(); ++i) {
        if (i) out << ';';
        out << r.stats.attempt_rate[i];
    }
    out << ',' << r.stats.decision_counts[0] << ',' << r.stats.decision_counts[1]
        << ',' << r.stats.decision_counts[2] << ',' << r.stats.packets_generated
        << ',' << r.stats.packets_delivered << ',' << r.stats.packets_in_queue
        << '\n';
}

Summary summarize_throughput(const std::vector<RunResult>& results) {
    Summary s;
    s.n = static_cast<int>(results.size());
    if (s.n == 0) return s;
    for (const auto& r : results) s.mean += r.stats.throughput;
    s.mean /= s.n;
    if (s.n > 1) {
        double var = 0.0;
        for (const auto& r : results) {
            const double d = r.stats.throughput - s.mean;
            var += d * d;
        }
        var /= (s.n - 1);
        s.ci95 = 1.96 * std::sqrt(var / s.n);
    }
    return s;
}

void write_policy_report(std::ostream& out, const Scenario& sc) {
    const RunPoint pt = scenario_point(sc);
    const SimConfig cfg = point_config(sc, pt, sc.config.seed);
    const auto models = point_models(sc, pt.n_channels);
    const auto policies = pt.policy_kind == PolicyKind::Baseline
                              ? baseline_policy(cfg, models)
                              : build_policies(cfg, models, cfg.assumed_loads);
    const UserPolicy& p = policies.front();
    out << "# scenario " << sc.name << ", user 1 sequence:";
    for (int c : p.sequence) out << ' ' << (c + 1);
    out << '\n';
    if (p.kind == PolicyKind::Baseline) {
        out << "baseline policy: always STOP on a uniformly random channel\n";
        return;
    }
    if (!p.iid.stages.empty()) {
        write_policy_table(out, p.iid);
        return;
    }
    out << "stage\tchannel\tstate\tswitch_value\tvalue\tdecision\n";
    for (std::size_t s = 0; s < p.markov.size(); ++s) {
        const auto& sp = p.markov[s];
        for (std::size_t x = 0; x < sp.values.size(); ++x)
            out << sp.stage << '\t' << (p.sequence[s] + 1) << '\t' << (x + 1)
                << '\t' << sp.switch_value << '\t' << sp.values[x] << '\t'
                << to_string(sp.decisions[x]) << '\n';
    }
}

} // namespace osa

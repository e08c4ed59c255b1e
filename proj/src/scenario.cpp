#include "osa/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace osa {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("scenario line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<double> parse_list(const std::string& s, int line) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stod(trim(item)));
        } catch (const std::exception&) {
            fail(line, "bad number '" + item + "'");
        }
    }
    return out;
}

double parse_num(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) fail(line, "bad number '" + s + "'");
        return v;
    } catch (const std::exception&) {
        fail(line, "bad number '" + s + "'");
    }
}

// channel = <kind> key=value ...
ChannelModel parse_channel(const std::string& value, int line) {
    auto toks = split_ws(value);
    if (toks.empty()) fail(line, "empty channel spec");
    const std::string kind = toks[0];
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            fail(line, "channel parameter '" + toks[i] + "' is not key=value");
        kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    auto take = [&](const std::string& key, double fallback,
                    bool required) -> double {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (required) fail(line, "channel kind '" + kind + "' needs " + key);
            return fallback;
        }
        const double v = parse_num(it->second, line);
        kv.erase(it);
        return v;
    };
    ChannelModel model;
    if (kind == "exponential") {
        const double mean = take("mean", 0, true);
        const double xmax = take("xmax", 5.0 * mean, false);
        const auto pts = static_cast<std::size_t>(take("points", 1000, false));
        model = discretize_exponential(mean, xmax, pts);
    } else if (kind == "awgn") {
        const double rho = take("rho", 0, true);
        const double rmax = take("rmax", awgn_default_rmax(rho), false);
        const auto pts = static_cast<std::size_t>(take("points", 1000, false));
        model = discretize_awgn(rho, rmax, pts);
    } else if (kind == "two-point") {
        const double lo = take("lo", 0, true);
        const double hi = take("hi", 0, true);
        const double p_lo = take("p", 0.5, false);
        model = DiscreteDistribution({lo, hi}, {p_lo, 1.0 - p_lo});
    } else if (kind == "markov") {
        const auto states = static_cast<std::size_t>(take("states", 0, true));
        const double up = take("up", 0, true);
        auto it = kv.find("rewards");
        if (it == kv.end()) fail(line, "markov channel needs rewards=...");
        auto rewards = parse_list(it->second, line);
        kv.erase(it);
        if (rewards.size() != states)
            fail(line, "markov channel needs one reward per state");
        model = birth_death_chain(states, up, std::move(rewards));
    } else {
        fail(line, "unknown channel kind '" + kind + "'");
    }
    if (!kv.empty())
        fail(line, "unknown channel parameter '" + kv.begin()->first + "'");
    return model;
}

} // namespace

const char* to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::None: return "none";
        case SweepAxis::Load: return "G";
        case SweepAxis::Time: return "T";
        case SweepAxis::Channels: return "N";
    }
    return "?";
}

SweepAxis parse_axis(const std::string& s) {
    if (s == "G" || s == "none" || s == "T" || s == "N") {
        if (s == "G") return SweepAxis::Load;
        if (s == "T") return SweepAxis::Time;
        if (s == "N") return SweepAxis::Channels;
        return SweepAxis::None;
    }
    throw std::runtime_error("unknown sweep axis '" + s + "' (use G, T or N)");
}

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool saw_version = false;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) fail(line, "expected key = value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (value.empty()) fail(line, "missing value for '" + key + "'");

        if (key == "version") {
            sc.version = static_cast<int>(parse_num(value, line));
            if (sc.version != 1) fail(line, "unsupported scenario version");
            saw_version = true;
        } else if (key == "name") {
            sc.name = value;
        } else if (key == "channel") {
            sc.models.push_back(parse_channel(value, line));
        } else if (key == "users") {
            sc.config.n_users = static_cast<int>(parse_num(value, line));
        } else if (key == "T") {
            sc.config.transmission_time = parse_num(value, line);
        } else if (key == "inv_zeta") {
            sc.config.inv_zeta = parse_num(value, line);
        } else if (key == "load") {
            sc.load = parse_num(value, line);
        } else if (key == "payload") {
            sc.config.packet_payload = parse_num(value, line);
        } else if (key == "horizon") {
            sc.config.horizon = parse_num(value, line);
        } else if (key == "warmup") {
            sc.config.warmup = parse_num(value, line);
        } else if (key == "seed") {
            sc.config.seed = static_cast<uint64_t>(parse_num(value, line));
        } else if (key == "mode") {
            if (value == "mean-delay") sc.config.mode = SimMode::MeanDelay;
            else if (value == "contention") sc.config.mode = SimMode::Contention;
            else fail(line, "mode must be mean-delay or contention");
        } else if (key == "sensing_order") {
            if (value == "random") sc.config.sensing_order = SensingOrder::RandomPermutation;
            else if (value == "greedy") sc.config.sensing_order = SensingOrder::GreedyDescendingMean;
            else fail(line, "sensing_order must be random or greedy");
        } else if (key == "policy") {
            if (value == "nested") sc.config.policy_kind = PolicyKind::Nested;
            else if (value == "baseline") sc.config.policy_kind = PolicyKind::Baseline;
            else fail(line, "policy must be nested or baseline");
        } else if (key == "sweep_axis") {
            try {
                sc.sweep_axis = parse_axis(value);
            } catch (const std::exception& e) {
                fail(line, e.what());
            }
        } else if (key == "sweep_grid") {
            std::istringstream vs(value);
            double v;
            while (vs >> v) sc.sweep_grid.push_back(v);
            if (sc.sweep_grid.empty()) fail(line, "empty sweep grid");
        } else if (key == "replications") {
            sc.replications = static_cast<int>(parse_num(value, line));
            if (sc.replications < 1) fail(line, "replications must be >= 1");
        } else {
            fail(line, "unknown key '" + key + "'");
        }
    }
    if (!saw_version) throw std::runtime_error("scenario missing 'version = 1'");
    if (sc.models.empty()) throw std::runtime_error("scenario has no channels");
    sc.config.n_channels = static_cast<int>(sc.models.size());
    if (sc.config.n_users <= 0) throw std::runtime_error("scenario needs users >= 1");
    if (sc.sweep_axis != SweepAxis::None && sc.sweep_grid.empty())
        throw std::runtime_error("sweep axis given without a grid");
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

} // namespace osa

#pragma once

#include <string>
#include <vector>

#include "osa/simulator.hpp"

namespace osa {

enum class SweepAxis { None, Load, Time, Channels };

// Declarative experiment description parsed from a scenario file.
struct Scenario {
    int version = 0;
    std::string name;
    std::vector<ChannelModel> models;
    SimConfig config;
    // Total external packet arrival rate across all users; split evenly.
    double load = 0.0;
    SweepAxis sweep_axis = SweepAxis::None;
    std::vector<double> sweep_grid;
    int replications = 1;
};

// Parse the versioned key-value scenario format. Unknown keys are errors;
// diagnostics carry the line number.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

const char* to_string(SweepAxis axis);
SweepAxis parse_axis(const std::string& s);

} // namespace osa

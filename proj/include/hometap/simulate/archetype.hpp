#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hometap/core/types.hpp"

namespace hometap::simulate {

struct LengthDist {
    enum class Kind { Constant, UniformRange, Categorical };
    Kind kind = Kind::Constant;
    int constant_bytes = 64;
    int min_bytes = 64, max_bytes = 64;                 // UniformRange, inclusive
    std::vector<std::pair<int, double>> categories;     // (bytes, weight)

    int draw(std::mt19937_64& rng) const;
    int min_support() const;
};

struct BurstModel {
    double duration_s = 10.0;
    int count_mean = 30;      // packets per burst
    int count_spread = 5;     // uniform in [mean-spread, mean+spread], floor 1
    LengthDist length;
    double incoming_fraction = 0.5;

    int draw_count(std::mt19937_64& rng) const;
};

struct HeartbeatModel {
    double period_s = 5.0;
    double jitter_s = 0.5;    // uniform in [-jitter, +jitter]
    LengthDist length;
};

struct QuirkSet {
    std::optional<double> zigbee_repeater_period_s;  // hub-broadcast repeats
    std::optional<double> ble_advertising_hz;        // pre-connection advertising
};

struct DeviceArchetype {
    core::DeviceIdentity identity;
    core::Protocol protocol = core::Protocol::WiFi;
    HeartbeatModel heartbeat;
    std::map<std::string, BurstModel> actions;  // action label -> burst shape
    QuirkSet quirks;
    std::string initial_state = "idle";
    // Documented lower bound on (packet rate inside activity) / (rate outside);
    // the simulator's rate-signature property test asserts against it.
    double min_burst_rate_ratio = 3.0;
};

// Archetype catalogs are human-editable JSON documents.
std::string archetype_to_json(const DeviceArchetype& a);
DeviceArchetype archetype_from_json(const std::string& json_text);
std::vector<DeviceArchetype> catalog_from_json(const std::string& json_text);
std::string catalog_to_json(const std::vector<DeviceArchetype>& catalog);
std::vector<DeviceArchetype> load_catalog_file(const std::string& path);

}  // namespace hometap::simulate

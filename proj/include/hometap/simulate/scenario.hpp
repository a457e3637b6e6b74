#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hometap/simulate/archetype.hpp"

namespace hometap::simulate {

// Which snapshot slot a flow feeds: sensor bit (S), device bit (D), the
// controller-active bit (M), or none (hubs and background flows).
enum class SlotGroup { Sensor, Device, Controller, None };

std::string to_string(SlotGroup g);
SlotGroup slot_group_from_string(const std::string& s);

struct ScriptedDevice {
    std::string archetype;   // identity slug "brand/device_type" or catalog index name
    std::string placement;   // becomes the flow_id (e.g. "M1", "Li2", "0x0000")
    SlotGroup group = SlotGroup::None;
};

struct ScriptedEvent {
    double time_s = 0.0;
    int device = 0;                         // index into devices
    std::string action;
    std::optional<std::string> activity;    // user-activity label, if part of one
};

struct ScenarioScript {
    double duration_s = 0.0;
    std::vector<ScriptedDevice> devices;
    std::vector<ScriptedEvent> events;                   // time-ordered
    std::vector<std::pair<double, double>> home_intervals;  // controller-at-home spans

    void validate(std::size_t catalog_size = 0) const;
};

std::string scenario_to_json(const ScenarioScript& s);
ScenarioScript scenario_from_json(const std::string& json_text);
ScenarioScript load_scenario_file(const std::string& path);

// Resolve device references against a catalog (by "brand/device_type" slug).
const DeviceArchetype& resolve_archetype(const std::vector<DeviceArchetype>& catalog,
                                         const std::string& ref);

}  // namespace hometap::simulate

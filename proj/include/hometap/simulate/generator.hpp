#pragma once

#include <cstdint>
#include <vector>

#include "hometap/simulate/archetype.hpp"
#include "hometap/simulate/scenario.hpp"
#include "hometap/traceio/trace_format.hpp"

namespace hometap::simulate {

struct DeviceEvent {
    double time_s = 0.0;
    std::string action;
};

// Deterministic labeled trace for one device. Same (archetype, events,
// duration, seed, flow_id) gives a bit-identical trace: draws come from a
// per-device stream derived from (seed, flow_id), so adding a device to a
// scenario never perturbs the others.
//
// Emits: heartbeats at period +/- jitter (suppressed while a burst is
// running), one burst per event, and protocol quirk packets (ZigBee
// repeater broadcasts on an exact grid, BLE advertising). Annotations:
// one DeviceActivity interval per event and DeviceState intervals between
// them.
core::Trace generate_device_trace(const DeviceArchetype& a, const std::vector<DeviceEvent>& events,
                                  double duration_s, std::uint64_t seed,
                                  const std::string& flow_id = "");

// Expand a scenario: one trace per scripted device, plus capture-level
// UserActivity annotations covering each scripted activity span.
traceio::Capture generate_scenario(const ScenarioScript& s, const std::vector<DeviceArchetype>& catalog,
                                   std::uint64_t seed);

// Stable 64-bit stream id for (seed, name); used for all per-device RNGs.
std::uint64_t stream_seed(std::uint64_t seed, const std::string& name);

}  // namespace hometap::simulate

#pragma once

#include <vector>

#include "hometap/simulate/archetype.hpp"

namespace hometap::simulate {

// Built-in device archetypes spanning WiFi, ZigBee, and BLE, with pairwise
// distinct heartbeat and burst parameterizations. Parameter values are an
// artifact convention (documented in the catalog JSON this function also
// serializes to), tuned so the attack stages reach their benchmark targets.
std::vector<DeviceArchetype> builtin_catalog();

}  // namespace hometap::simulate

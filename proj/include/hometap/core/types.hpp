#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hometap::core {

// Raised for malformed input files, bad records, broken invariants in data.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for model misuse: untrained models, dimension or window mismatches.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Direction { Incoming, Outgoing };

enum class Protocol { WiFi, ZigBee, BLE };

std::string to_string(Protocol p);
Protocol protocol_from_string(const std::string& s);

// One observed packet's metadata. The `spoofed` flag marks defense-injected
// packets; it is evaluation bookkeeping only and must never feed a classifier.
struct PacketRecord {
    double timestamp = 0.0;  // seconds since trace start
    Direction direction = Direction::Outgoing;
    int length = 1;  // bytes, >= 1
    std::string flow_id;
    Protocol protocol = Protocol::WiFi;
    bool spoofed = false;
};

enum class IntervalKind { DeviceActivity, DeviceState, UserActivity };

std::string to_string(IntervalKind k);
IntervalKind interval_kind_from_string(const std::string& s);

struct LabeledInterval {
    double start = 0.0;
    double end = 0.0;  // end > start
    IntervalKind kind = IntervalKind::DeviceActivity;
    std::string label;

    bool contains(double t) const { return t >= start && t < end; }
    bool overlaps(double s, double e) const { return start < e && end > s; }
};

struct DeviceIdentity {
    std::string brand;
    std::string device_type;

    std::string str() const { return brand + "/" + device_type; }
    bool operator==(const DeviceIdentity&) const = default;
    bool operator<(const DeviceIdentity& o) const {
        return brand != o.brand ? brand < o.brand : device_type < o.device_type;
    }
};

struct DeviceMeta {
    std::string brand;
    std::string device_type;
    Protocol protocol = Protocol::WiFi;

    DeviceIdentity identity() const { return {brand, device_type}; }
};

// Time-ordered packet sequence for one flow, with ground-truth annotations.
struct Trace {
    std::string flow_id;
    std::vector<PacketRecord> records;  // sorted by timestamp, stable on ties
    DeviceMeta meta;
    std::vector<LabeledInterval> annotations;

    double end_time() const { return records.empty() ? 0.0 : records.back().timestamp; }
};

}  // namespace hometap::core

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hometap/core/types.hpp"

namespace hometap::traceio {

struct CaptureMeta {
    double duration_s = 0.0;
    std::int64_t total_packets = 0;
    std::int64_t total_bytes = 0;
    int sort_warnings = 0;  // lines that arrived out of timestamp order
};

// A parsed capture: one Trace per flow plus capture-level annotations
// (user activities, controller-location bookkeeping).
struct Capture {
    std::map<std::string, core::Trace> traces;
    CaptureMeta capture_meta;
    std::vector<core::LabeledInterval> annotations;

    double duration() const { return capture_meta.duration_s; }
};

// Line format, one packet per line:
//   <timestamp_s> <direction:I|O> <length_bytes> <flow_id> <protocol:wifi|zigbee|ble> [spoofed]
// Out-of-order timestamps are normalized by stable sort and counted in
// capture_meta.sort_warnings. Malformed lines raise DataError with the line
// number.
Capture parse_capture(std::istream& in);
Capture parse_capture_file(const std::string& path);

// JSONL equivalent: one object per line, same field names as the line format.
Capture parse_capture_jsonl(std::istream& in);

void serialize_capture(const Capture& c, std::ostream& out);
void serialize_capture_jsonl(const Capture& c, std::ostream& out);
void write_capture_file(const Capture& c, const std::string& path);

// Annotation sidecar, one interval per line:
//   <start_s> <end_s> <kind> <label>
// The label is the remainder of the line and may contain spaces.
std::vector<core::LabeledInterval> parse_annotations(std::istream& in);
std::vector<core::LabeledInterval> parse_annotations_file(const std::string& path);
std::vector<core::LabeledInterval> parse_annotations_jsonl(std::istream& in);
void serialize_annotations(const std::vector<core::LabeledInterval>& anns, std::ostream& out);
void write_annotations_file(const std::vector<core::LabeledInterval>& anns, const std::string& path);

enum class SplitBy { FlowId, Protocol };

// Partition a capture's records into traces. FlowId returns the per-flow
// traces; Protocol merges all flows of one protocol into a single
// time-ordered trace keyed by the protocol name. Empty groups are omitted.
std::vector<core::Trace> split_flows(const Capture& c, SplitBy by);

// Rebuild a capture from traces (recomputes capture_meta).
Capture capture_from_traces(std::vector<core::Trace> traces);

}  // namespace hometap::traceio

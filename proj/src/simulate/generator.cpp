#include "hometap/simulate/generator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hometap::simulate {

using core::DataError;
using core::Direction;
using core::LabeledInterval;
using core::IntervalKind;
using core::PacketRecord;
using core::Trace;

namespace {

constexpr int kRepeaterBytes = 50;
constexpr int kAdvertisingBytes = 38;

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::string identity_slug(const core::DeviceIdentity& id) { return id.brand + "-" + id.device_type; }

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
    return splitmix64(seed ^ fnv1a64(name));
}

Trace generate_device_trace(const DeviceArchetype& a, const std::vector<DeviceEvent>& events,
                            double duration_s, std::uint64_t seed, const std::string& flow_id) {
    if (duration_s <= 0.0) throw DataError("trace duration must be positive");
    const std::string flow = flow_id.empty() ? identity_slug(a.identity) : flow_id;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& e = events[i];
        if (!a.actions.count(e.action))
            throw DataError("unknown action '" + e.action + "' for " + a.identity.str());
        if (e.time_s < 0.0 || e.time_s + a.actions.at(e.action).duration_s > duration_s)
            throw DataError("event burst does not fit in [0, duration]");
        if (i > 0 && e.time_s < events[i - 1].time_s) throw DataError("events not time-ordered");
    }

    std::mt19937_64 rng(stream_seed(seed, flow));
    Trace t;
    t.flow_id = flow;
    t.meta.brand = a.identity.brand;
    t.meta.device_type = a.identity.device_type;
    t.meta.protocol = a.protocol;

    std::vector<LabeledInterval> activity;
    for (const auto& e : events) {
        const auto& b = a.actions.at(e.action);
        activity.push_back({e.time_s, e.time_s + b.duration_s, IntervalKind::DeviceActivity, e.action});
    }

    auto emit = [&](double ts, Direction dir, int len) {
        t.records.push_back({ts, dir, len, flow, a.protocol, false});
    };

    // Heartbeats on the nominal grid i*period. Every grid point consumes its
    // draws even when suppressed, so the heartbeat stream is independent of
    // the event schedule. A heartbeat is suppressed while its nominal time
    // falls inside a burst; jitter can still push an emitted one across an
    // interval edge, which is the tolerance the soundness property allows.
    {
        std::uniform_real_distribution<double> jitter(-a.heartbeat.jitter_s, a.heartbeat.jitter_s);
        for (int i = 1;; ++i) {
            const double nominal = i * a.heartbeat.period_s;
            if (nominal > duration_s) break;
            const double ts = nominal + (a.heartbeat.jitter_s > 0.0 ? jitter(rng) : 0.0);
            const int len = a.heartbeat.length.draw(rng);
            const bool suppressed = std::any_of(activity.begin(), activity.end(), [&](const LabeledInterval& iv) {
                return iv.contains(nominal);
            });
            if (!suppressed && ts >= 0.0 && ts <= duration_s) emit(ts, Direction::Outgoing, len);
        }
    }

    // One burst per event: times uniform over the burst span.
    for (const auto& e : events) {
        const auto& b = a.actions.at(e.action);
        const int count = b.draw_count(rng);
        std::uniform_real_distribution<double> when(e.time_s, e.time_s + b.duration_s);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int p = 0; p < count; ++p) {
            const double ts = when(rng);
            const int len = b.length.draw(rng);
            const Direction dir = coin(rng) < b.incoming_fraction ? Direction::Incoming : Direction::Outgoing;
            emit(ts, dir, len);
        }
    }

    // Protocol quirks run on exact grids (no jitter).
    if (a.quirks.zigbee_repeater_period_s) {
        const double p = *a.quirks.zigbee_repeater_period_s;
        for (int i = 1; i * p <= duration_s; ++i) emit(i * p, Direction::Outgoing, kRepeaterBytes);
    }
    if (a.quirks.ble_advertising_hz && *a.quirks.ble_advertising_hz > 0.0) {
        const double p = 1.0 / *a.quirks.ble_advertising_hz;
        for (int i = 1; i * p <= duration_s; ++i) emit(i * p, Direction::Outgoing, kAdvertisingBytes);
    }

    std::stable_sort(t.records.begin(), t.records.end(),
                     [](const PacketRecord& x, const PacketRecord& y) { return x.timestamp < y.timestamp; });

    // DeviceState intervals fill the gaps between bursts.
    std::vector<LabeledInterval> states;
    std::string state = a.initial_state;
    double cursor = 0.0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (cursor < activity[i].start)
            states.push_back({cursor, activity[i].start, IntervalKind::DeviceState, state});
        state = events[i].action;
        cursor = std::max(cursor, activity[i].end);
    }
    if (cursor < duration_s) states.push_back({cursor, duration_s, IntervalKind::DeviceState, state});

    t.annotations = std::move(activity);
    t.annotations.insert(t.annotations.end(), states.begin(), states.end());

    // Annotations must not outlive the packet record.
    const double end = t.end_time();
    std::erase_if(t.annotations, [&](LabeledInterval& iv) {
        iv.end = std::min(iv.end, end);
        return !(iv.start < iv.end);
    });
    std::stable_sort(t.annotations.begin(), t.annotations.end(),
                     [](const LabeledInterval& x, const LabeledInterval& y) { return x.start < y.start; });
    return t;
}

namespace {

// Maximal runs of equal activity labels over the time-ordered labeled events;
// unlabeled events in between do not break a run.
std::vector<LabeledInterval> activity_annotations(const ScenarioScript& s,
                                                  const std::vector<DeviceArchetype>& archetypes) {
    std::vector<LabeledInterval> out;
    std::string run_label;
    double run_start = 0.0, run_end = 0.0;
    auto flush = [&]() {
        if (!run_label.empty()) out.push_back({run_start, run_end, IntervalKind::UserActivity, run_label});
        run_label.clear();
    };
    for (const auto& e : s.events) {
        if (!e.activity) continue;
        const auto& burst = archetypes[static_cast<std::size_t>(e.device)].actions.at(e.action);
        const double span_end = e.time_s + burst.duration_s;
        if (*e.activity != run_label) {
            flush();
            run_label = *e.activity;
            run_start = e.time_s;
            run_end = span_end;
        } else {
            run_end = std::max(run_end, span_end);
        }
    }
    flush();
    return out;
}

}  // namespace

traceio::Capture generate_scenario(const ScenarioScript& s, const std::vector<DeviceArchetype>& catalog,
                                   std::uint64_t seed) {
    s.validate();

    std::vector<DeviceArchetype> archetypes;
    archetypes.reserve(s.devices.size());
    for (const auto& d : s.devices) archetypes.push_back(resolve_archetype(catalog, d.archetype));

    std::vector<Trace> traces;
    for (std::size_t i = 0; i < s.devices.size(); ++i) {
        std::vector<DeviceEvent> evs;
        for (const auto& e : s.events)
            if (e.device == static_cast<int>(i)) evs.push_back({e.time_s, e.action});
        traces.push_back(generate_device_trace(archetypes[i], evs, s.duration_s, seed, s.devices[i].placement));
    }

    auto cap = traceio::capture_from_traces(std::move(traces));
    cap.annotations = activity_annotations(s, archetypes);
    return cap;
}

// --- scenario json -------------------------------------------------------

using nlohmann::json;

std::string to_string(SlotGroup g) {
    switch (g) {
        case SlotGroup::Sensor: return "S";
        case SlotGroup::Device: return "D";
        case SlotGroup::Controller: return "M";
        case SlotGroup::None: return "none";
    }
    throw std::logic_error("bad slot group");
}

SlotGroup slot_group_from_string(const std::string& s) {
    if (s == "S") return SlotGroup::Sensor;
    if (s == "D") return SlotGroup::Device;
    if (s == "M") return SlotGroup::Controller;
    if (s == "none") return SlotGroup::None;
    throw DataError("unknown slot group: " + s);
}

void ScenarioScript::validate(std::size_t) const {
    if (duration_s <= 0.0) throw DataError("scenario duration must be positive");
    if (devices.empty()) throw DataError("scenario has no devices");
    double last = 0.0;
    for (const auto& e : events) {
        if (e.device < 0 || e.device >= static_cast<int>(devices.size()))
            throw DataError("event references device index " + std::to_string(e.device));
        if (e.time_s < 0.0 || e.time_s > duration_s) throw DataError("event outside [0, duration]");
        if (e.time_s < last) throw DataError("events not time-ordered");
        last = e.time_s;
    }
    for (const auto& [h0, h1] : home_intervals)
        if (!(h0 < h1) || h0 < 0.0) throw DataError("bad home interval");
}

std::string scenario_to_json(const ScenarioScript& s) {
    json j;
    j["duration_s"] = s.duration_s;
    j["devices"] = json::array();
    for (const auto& d : s.devices)
        j["devices"].push_back({{"archetype", d.archetype}, {"placement", d.placement}, {"group", to_string(d.group)}});
    j["events"] = json::array();
    for (const auto& e : s.events) {
        json ev = {{"time_s", e.time_s}, {"device", e.device}, {"action", e.action}};
        if (e.activity) ev["activity"] = *e.activity;
        j["events"].push_back(ev);
    }
    j["home_intervals"] = json::array();
    for (const auto& [a, b] : s.home_intervals) j["home_intervals"].push_back({a, b});
    return j.dump(2);
}

ScenarioScript scenario_from_json(const std::string& json_text) {
    ScenarioScript s;
    try {
        auto j = json::parse(json_text);
        s.duration_s = j.at("duration_s").get<double>();
        for (const auto& d : j.at("devices")) {
            ScriptedDevice sd;
            sd.archetype = d.at("archetype").get<std::string>();
            sd.placement = d.at("placement").get<std::string>();
            sd.group = slot_group_from_string(d.value("group", std::string("none")));
            s.devices.push_back(std::move(sd));
        }
        for (const auto& e : j.value("events", json::array())) {
            ScriptedEvent ev;
            ev.time_s = e.at("time_s").get<double>();
            ev.device = e.at("device").get<int>();
            ev.action = e.at("action").get<std::string>();
            if (e.contains("activity")) ev.activity = e.at("activity").get<std::string>();
            s.events.push_back(std::move(ev));
        }
        for (const auto& h : j.value("home_intervals", json::array()))
            s.home_intervals.emplace_back(h.at(0).get<double>(), h.at(1).get<double>());
    } catch (const json::exception& e) {
        throw DataError(std::string("bad scenario json: ") + e.what());
    }
    s.validate();
    return s;
}

ScenarioScript load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return scenario_from_json(ss.str());
}

const DeviceArchetype& resolve_archetype(const std::vector<DeviceArchetype>& catalog, const std::string& ref) {
    for (const auto& a : catalog) {
        if (a.identity.str() == ref || a.identity.brand + "-" + a.identity.device_type == ref) return a;
    }
    throw DataError("archetype not in catalog: " + ref);
}

}  // namespace hometap::simulate

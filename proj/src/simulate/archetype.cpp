#include "hometap/simulate/archetype.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hometap::simulate {

using nlohmann::json;

int LengthDist::draw(std::mt19937_64& rng) const {
    switch (kind) {
        case Kind::Constant:
            return constant_bytes;
        case Kind::UniformRange: {
            std::uniform_int_distribution<int> d(min_bytes, max_bytes);
            return d(rng);
        }
        case Kind::Categorical: {
            double total = 0.0;
            for (const auto& [bytes, w] : categories) total += w;
            std::uniform_real_distribution<double> d(0.0, total);
            double x = d(rng);
            for (const auto& [bytes, w] : categories) {
                x -= w;
                if (x <= 0.0) return bytes;
            }
            return categories.back().first;
        }
    }
    throw std::logic_error("bad length dist kind");
}

int LengthDist::min_support() const {
    switch (kind) {
        case Kind::Constant: return constant_bytes;
        case Kind::UniformRange: return min_bytes;
        case Kind::Categorical: {
            int m = categories.front().first;
            for (const auto& [bytes, w] : categories) m = std::min(m, bytes);
            return m;
        }
    }
    throw std::logic_error("bad length dist kind");
}

int BurstModel::draw_count(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> d(count_mean - count_spread, count_mean + count_spread);
    return std::max(1, d(rng));
}

namespace {

json length_to_json(const LengthDist& d) {
    json j;
    switch (d.kind) {
        case LengthDist::Kind::Constant:
            j["kind"] = "constant";
            j["bytes"] = d.constant_bytes;
            break;
        case LengthDist::Kind::UniformRange:
            j["kind"] = "uniform";
            j["min_bytes"] = d.min_bytes;
            j["max_bytes"] = d.max_bytes;
            break;
        case LengthDist::Kind::Categorical: {
            j["kind"] = "categorical";
            json cats = json::array();
            for (const auto& [bytes, w] : d.categories) cats.push_back({{"bytes", bytes}, {"weight", w}});
            j["categories"] = cats;
            break;
        }
    }
    return j;
}

LengthDist length_from_json(const json& j) {
    LengthDist d;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        d.kind = LengthDist::Kind::Constant;
        d.constant_bytes = j.at("bytes").get<int>();
        if (d.constant_bytes < 1) throw core::DataError("length dist support below 1 byte");
    } else if (kind == "uniform") {
        d.kind = LengthDist::Kind::UniformRange;
        d.min_bytes = j.at("min_bytes").get<int>();
        d.max_bytes = j.at("max_bytes").get<int>();
        if (d.min_bytes < 1 || d.max_bytes < d.min_bytes) throw core::DataError("bad uniform length range");
    } else if (kind == "categorical") {
        d.kind = LengthDist::Kind::Categorical;
        for (const auto& c : j.at("categories")) {
            int bytes = c.at("bytes").get<int>();
            double w = c.at("weight").get<double>();
            if (bytes < 1 || w <= 0.0) throw core::DataError("bad categorical length entry");
            d.categories.emplace_back(bytes, w);
        }
        if (d.categories.empty()) throw core::DataError("empty categorical length dist");
    } else {
        throw core::DataError("unknown length dist kind: " + kind);
    }
    return d;
}

json burst_to_json(const BurstModel& b) {
    json j;
    j["duration_s"] = b.duration_s;
    j["count_mean"] = b.count_mean;
    j["count_spread"] = b.count_spread;
    j["length"] = length_to_json(b.length);
    j["incoming_fraction"] = b.incoming_fraction;
    return j;
}

BurstModel burst_from_json(const json& j) {
    BurstModel b;
    b.duration_s = j.at("duration_s").get<double>();
    b.count_mean = j.at("count_mean").get<int>();
    b.count_spread = j.value("count_spread", 0);
    b.length = length_from_json(j.at("length"));
    b.incoming_fraction = j.value("incoming_fraction", 0.5);
    if (b.duration_s <= 0.0 || b.count_mean < 1) throw core::DataError("bad burst model parameters");
    if (b.incoming_fraction < 0.0 || b.incoming_fraction > 1.0)
        throw core::DataError("incoming_fraction outside [0,1]");
    return b;
}

json archetype_to_json_obj(const DeviceArchetype& a) {
    json j;
    j["brand"] = a.identity.brand;
    j["device_type"] = a.identity.device_type;
    j["protocol"] = core::to_string(a.protocol);
    j["heartbeat"] = {{"period_s", a.heartbeat.period_s},
                      {"jitter_s", a.heartbeat.jitter_s},
                      {"length", length_to_json(a.heartbeat.length)}};
    json actions;
    for (const auto& [name, b] : a.actions) actions[name] = burst_to_json(b);
    j["actions"] = actions;
    if (a.quirks.zigbee_repeater_period_s)
        j["quirks"]["zigbee_repeater_period_s"] = *a.quirks.zigbee_repeater_period_s;
    if (a.quirks.ble_advertising_hz) j["quirks"]["ble_advertising_hz"] = *a.quirks.ble_advertising_hz;
    j["initial_state"] = a.initial_state;
    j["min_burst_rate_ratio"] = a.min_burst_rate_ratio;
    return j;
}

DeviceArchetype archetype_from_json_obj(const json& j) {
    DeviceArchetype a;
    a.identity.brand = j.at("brand").get<std::string>();
    a.identity.device_type = j.at("device_type").get<std::string>();
    a.protocol = core::protocol_from_string(j.at("protocol").get<std::string>());
    const auto& hb = j.at("heartbeat");
    a.heartbeat.period_s = hb.at("period_s").get<double>();
    a.heartbeat.jitter_s = hb.value("jitter_s", 0.0);
    a.heartbeat.length = length_from_json(hb.at("length"));
    if (a.heartbeat.period_s <= 0.0) throw core::DataError("heartbeat period must be positive");
    for (const auto& [name, b] : j.at("actions").items()) a.actions[name] = burst_from_json(b);
    if (j.contains("quirks")) {
        const auto& q = j.at("quirks");
        if (q.contains("zigbee_repeater_period_s"))
            a.quirks.zigbee_repeater_period_s = q.at("zigbee_repeater_period_s").get<double>();
        if (q.contains("ble_advertising_hz"))
            a.quirks.ble_advertising_hz = q.at("ble_advertising_hz").get<double>();
    }
    a.initial_state = j.value("initial_state", std::string("idle"));
    a.min_burst_rate_ratio = j.value("min_burst_rate_ratio", 3.0);
    return a;
}

}  // namespace

std::string archetype_to_json(const DeviceArchetype& a) { return archetype_to_json_obj(a).dump(2); }

DeviceArchetype archetype_from_json(const std::string& json_text) {
    try {
        return archetype_from_json_obj(json::parse(json_text));
    } catch (const json::exception& e) {
        throw core::DataError(std::string("bad archetype json: ") + e.what());
    }
}

std::string catalog_to_json(const std::vector<DeviceArchetype>& catalog) {
    json arr = json::array();
    for (const auto& a : catalog) arr.push_back(archetype_to_json_obj(a));
    return arr.dump(2);
}

std::vector<DeviceArchetype> catalog_from_json(const std::string& json_text) {
    std::vector<DeviceArchetype> out;
    try {
        for (const auto& j : json::parse(json_text)) out.push_back(archetype_from_json_obj(j));
    } catch (const json::exception& e) {
        throw core::DataError(std::string("bad catalog json: ") + e.what());
    }
    return out;
}

std::vector<DeviceArchetype> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw core::DataError("cannot open catalog file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return catalog_from_json(ss.str());
}

}  // namespace hometap::simulate

#include "hometap/core/metrics.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hometap/core/types.hpp"

namespace hometap::core {

std::string to_string(Protocol p) {
    switch (p) {
        case Protocol::WiFi: return "wifi";
        case Protocol::ZigBee: return "zigbee";
        case Protocol::BLE: return "ble";
    }
    throw std::logic_error("bad protocol value");
}

Protocol protocol_from_string(const std::string& s) {
    if (s == "wifi") return Protocol::WiFi;
    if (s == "zigbee") return Protocol::ZigBee;
    if (s == "ble") return Protocol::BLE;
    throw DataError("unknown protocol token: " + s);
}

std::string to_string(IntervalKind k) {
    switch (k) {
        case IntervalKind::DeviceActivity: return "DeviceActivity";
        case IntervalKind::DeviceState: return "DeviceState";
        case IntervalKind::UserActivity: return "UserActivity";
    }
    throw std::logic_error("bad interval kind value");
}

IntervalKind interval_kind_from_string(const std::string& s) {
    if (s == "DeviceActivity") return IntervalKind::DeviceActivity;
    if (s == "DeviceState") return IntervalKind::DeviceState;
    if (s == "UserActivity") return IntervalKind::UserActivity;
    throw DataError("unknown interval kind token: " + s);
}

namespace {

std::optional<double> ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

MetricReport compute_metrics(const ConfusionCounts& c) {
    if (c.tp < 0 || c.fp < 0 || c.tn < 0 || c.fn < 0)
        throw std::invalid_argument("confusion counts must be non-negative");
    if (c.total() < 1)
        throw std::invalid_argument("confusion counts are all zero");

    MetricReport r;
    r.tpr = ratio(c.tp, c.tp + c.fn);
    r.fnr = ratio(c.fn, c.tp + c.fn);
    r.tnr = ratio(c.tn, c.tn + c.fp);
    r.fpr = ratio(c.fp, c.tn + c.fp);
    r.precision = ratio(c.tp, c.tp + c.fp);
    r.accuracy = ratio(c.tp + c.tn, c.total());
    if (r.precision && r.tpr && (*r.precision + *r.tpr) > 0.0)
        r.f1 = 2.0 * *r.precision * *r.tpr / (*r.precision + *r.tpr);
    r.support = c.tp + c.fn;
    return r;
}

namespace {

struct FieldRef {
    const char* name;
    std::optional<double> MetricReport::* field;
};

constexpr FieldRef kFields[] = {
    {"tpr", &MetricReport::tpr},       {"fnr", &MetricReport::fnr},
    {"tnr", &MetricReport::tnr},       {"fpr", &MetricReport::fpr},
    {"precision", &MetricReport::precision},
    {"accuracy", &MetricReport::accuracy},
    {"f1", &MetricReport::f1},
};

}  // namespace

MetricReport macro_average(const std::vector<MetricReport>& reports) {
    if (reports.empty())
        throw std::invalid_argument("macro_average of empty report list");

    MetricReport out;
    for (const auto& f : kFields) {
        double sum = 0.0;
        int n = 0;
        for (const auto& r : reports) {
            if (const auto& v = r.*(f.field)) {
                sum += *v;
                ++n;
            }
        }
        if (n > 0) out.*(f.field) = sum / n;
    }
    for (const auto& r : reports) out.support += r.support;
    return out;
}

std::string MetricReport::to_text() const {
    std::ostringstream os;
    os.precision(6);
    for (const auto& f : kFields) {
        os << f.name << " ";
        if (const auto& v = this->*(f.field))
            os << *v;
        else
            os << "undefined";
        os << "\n";
    }
    os << "support " << support << "\n";
    return os.str();
}

std::string MetricReport::to_json() const {
    nlohmann::json metrics;
    nlohmann::json defined;
    for (const auto& f : kFields) {
        const auto& v = this->*(f.field);
        metrics[f.name] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
        defined[f.name] = v.has_value();
    }
    nlohmann::json j;
    j["metrics"] = metrics;
    j["defined"] = defined;
    j["support"] = support;
    return j.dump();
}

}  // namespace hometap::core

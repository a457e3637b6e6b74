#include "hometap/traceio/trace_format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hometap::traceio {

using core::DataError;
using core::Direction;
using core::LabeledInterval;
using core::PacketRecord;
using core::Protocol;
using core::Trace;

namespace {

void validate_record(const PacketRecord& r, std::size_t line_no) {
    auto fail = [&](const std::string& what) {
        throw DataError("line " + std::to_string(line_no) + ": " + what);
    };
    if (!std::isfinite(r.timestamp) || r.timestamp < 0.0) fail("timestamp must be finite and non-negative");
    if (r.length < 1) fail("length must be >= 1");
    if (r.flow_id.empty()) fail("empty flow_id");
}

Direction direction_from_token(const std::string& tok, std::size_t line_no) {
    if (tok == "I") return Direction::Incoming;
    if (tok == "O") return Direction::Outgoing;
    throw DataError("line " + std::to_string(line_no) + ": bad direction token '" + tok + "'");
}

Capture assemble(std::vector<PacketRecord> records, int parse_order_warnings) {
    Capture c;
    c.capture_meta.sort_warnings = parse_order_warnings;
    // Stable sort keeps file order on timestamp ties.
    std::stable_sort(records.begin(), records.end(),
                     [](const PacketRecord& a, const PacketRecord& b) { return a.timestamp < b.timestamp; });
    for (auto& r : records) {
        auto& tr = c.traces[r.flow_id];
        if (tr.records.empty()) {
            tr.flow_id = r.flow_id;
            tr.meta.protocol = r.protocol;
        }
        c.capture_meta.total_packets += 1;
        c.capture_meta.total_bytes += r.length;
        c.capture_meta.duration_s = std::max(c.capture_meta.duration_s, r.timestamp);
        tr.records.push_back(std::move(r));
    }
    return c;
}

}  // namespace

Capture parse_capture(std::istream& in) {
    std::vector<PacketRecord> records;
    int order_warnings = 0;
    double last_t = 0.0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        PacketRecord r;
        std::string dir_tok, proto_tok, flag_tok;
        if (!(ls >> r.timestamp >> dir_tok >> r.length >> r.flow_id >> proto_tok))
            throw DataError("line " + std::to_string(line_no) + ": malformed packet line");
        r.direction = direction_from_token(dir_tok, line_no);
        r.protocol = core::protocol_from_string(proto_tok);
        if (ls >> flag_tok) {
            if (flag_tok != "spoofed")
                throw DataError("line " + std::to_string(line_no) + ": unexpected trailing token '" + flag_tok + "'");
            r.spoofed = true;
        }
        validate_record(r, line_no);
        if (r.timestamp < last_t) ++order_warnings;
        last_t = r.timestamp;
        records.push_back(std::move(r));
    }
    return assemble(std::move(records), order_warnings);
}

Capture parse_capture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open trace file: " + path);
    return parse_capture(in);
}

Capture parse_capture_jsonl(std::istream& in) {
    std::vector<PacketRecord> records;
    int order_warnings = 0;
    double last_t = 0.0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError("line " + std::to_string(line_no) + ": " + e.what());
        }
        PacketRecord r;
        try {
            r.timestamp = j.at("timestamp_s").get<double>();
            r.direction = direction_from_token(j.at("direction").get<std::string>(), line_no);
            r.length = j.at("length_bytes").get<int>();
            r.flow_id = j.at("flow_id").get<std::string>();
            r.protocol = core::protocol_from_string(j.at("protocol").get<std::string>());
            r.spoofed = j.value("spoofed", false);
        } catch (const nlohmann::json::exception& e) {
            throw DataError("line " + std::to_string(line_no) + ": " + e.what());
        }
        validate_record(r, line_no);
        if (r.timestamp < last_t) ++order_warnings;
        last_t = r.timestamp;
        records.push_back(std::move(r));
    }
    return assemble(std::move(records), order_warnings);
}

namespace {

void write_record(const PacketRecord& r, std::ostream& out) {
    out << r.timestamp << ' ' << (r.direction == Direction::Incoming ? 'I' : 'O') << ' ' << r.length << ' '
        << r.flow_id << ' ' << core::to_string(r.protocol);
    if (r.spoofed) out << " spoofed";
    out << '\n';
}

// Capture-wide time order with deterministic flow interleaving.
std::vector<const PacketRecord*> ordered_records(const Capture& c) {
    std::vector<const PacketRecord*> all;
    all.reserve(static_cast<std::size_t>(c.capture_meta.total_packets));
    for (const auto& [flow, tr] : c.traces)
        for (const auto& r : tr.records) all.push_back(&r);
    std::stable_sort(all.begin(), all.end(),
                     [](const PacketRecord* a, const PacketRecord* b) { return a->timestamp < b->timestamp; });
    return all;
}

}  // namespace

void serialize_capture(const Capture& c, std::ostream& out) {
    out.precision(17);
    for (const PacketRecord* r : ordered_records(c)) write_record(*r, out);
}

void serialize_capture_jsonl(const Capture& c, std::ostream& out) {
    for (const PacketRecord* r : ordered_records(c)) {
        nlohmann::json j;
        j["timestamp_s"] = r->timestamp;
        j["direction"] = r->direction == Direction::Incoming ? "I" : "O";
        j["length_bytes"] = r->length;
        j["flow_id"] = r->flow_id;
        j["protocol"] = core::to_string(r->protocol);
        if (r->spoofed) j["spoofed"] = true;
        out << j.dump() << '\n';
    }
}

void write_capture_file(const Capture& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write trace file: " + path);
    serialize_capture(c, out);
}

std::vector<LabeledInterval> parse_annotations(std::istream& in) {
    std::vector<LabeledInterval> anns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        LabeledInterval a;
        std::string kind_tok;
        if (!(ls >> a.start >> a.end >> kind_tok))
            throw DataError("line " + std::to_string(line_no) + ": malformed annotation line");
        a.kind = core::interval_kind_from_string(kind_tok);
        std::getline(ls, a.label);
        const auto first = a.label.find_first_not_of(' ');
        a.label = first == std::string::npos ? "" : a.label.substr(first);
        if (a.label.empty()) throw DataError("line " + std::to_string(line_no) + ": empty label");
        if (!(a.start < a.end)) throw DataError("line " + std::to_string(line_no) + ": interval start must precede end");
        anns.push_back(std::move(a));
    }
    return anns;
}

std::vector<LabeledInterval> parse_annotations_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open annotation file: " + path);
    return parse_annotations(in);
}

std::vector<LabeledInterval> parse_annotations_jsonl(std::istream& in) {
    std::vector<LabeledInterval> anns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        LabeledInterval a;
        try {
            auto j = nlohmann::json::parse(line);
            a.start = j.at("start_s").get<double>();
            a.end = j.at("end_s").get<double>();
            a.kind = core::interval_kind_from_string(j.at("kind").get<std::string>());
            a.label = j.at("label").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw DataError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (a.label.empty() || !(a.start < a.end))
            throw DataError("line " + std::to_string(line_no) + ": invalid annotation");
        anns.push_back(std::move(a));
    }
    return anns;
}

void serialize_annotations(const std::vector<LabeledInterval>& anns, std::ostream& out) {
    out.precision(17);
    for (const auto& a : anns)
        out << a.start << ' ' << a.end << ' ' << core::to_string(a.kind) << ' ' << a.label << '\n';
}

void write_annotations_file(const std::vector<LabeledInterval>& anns, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write annotation file: " + path);
    serialize_annotations(anns, out);
}

std::vector<Trace> split_flows(const Capture& c, SplitBy by) {
    if (c.traces.empty()) throw DataError("split_flows on empty capture");
    std::vector<Trace> out;
    if (by == SplitBy::FlowId) {
        for (const auto& [flow, tr] : c.traces) out.push_back(tr);
        return out;
    }
    std::map<Protocol, Trace> groups;
    for (const auto& [flow, tr] : c.traces) {
        auto& g = groups[tr.meta.protocol];
        g.records.insert(g.records.end(), tr.records.begin(), tr.records.end());
    }
    for (auto& [proto, g] : groups) {
        g.flow_id = core::to_string(proto);
        g.meta.protocol = proto;
        std::stable_sort(g.records.begin(), g.records.end(),
                         [](const PacketRecord& a, const PacketRecord& b) { return a.timestamp < b.timestamp; });
        out.push_back(std::move(g));
    }
    return out;
}

Capture capture_from_traces(std::vector<Trace> traces) {
    Capture c;
    for (auto& tr : traces) {
        auto& slot = c.traces[tr.flow_id];
        slot = std::move(tr);
        for (const auto& r : slot.records) {
            c.capture_meta.total_packets += 1;
            c.capture_meta.total_bytes += r.length;
            c.capture_meta.duration_s = std::max(c.capture_meta.duration_s, r.timestamp);
        }
    }
    return c;
}

}  // namespace hometap::traceio

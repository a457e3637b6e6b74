#include "hometap/traceio/splt.hpp"

namespace hometap::traceio {

SpltMatrix to_splt(const core::Trace& t) {
    if (t.records.empty()) throw core::DataError("to_splt on empty trace: " + t.flow_id);
    SpltMatrix m;
    m.flow_id = t.flow_id;
    m.rows.resize(static_cast<Eigen::Index>(t.records.size()), 3);
    for (Eigen::Index i = 0; i < m.rows.rows(); ++i) {
        const auto& r = t.records[static_cast<std::size_t>(i)];
        m.rows(i, 0) = r.timestamp;
        m.rows(i, 1) = r.direction == core::Direction::Incoming ? 1.0 : 0.0;
        m.rows(i, 2) = static_cast<double>(r.length);
    }
    return m;
}

SpltMatrix SpltMatrix::slice(double start_s, double end_s) const {
    SpltMatrix out;
    out.flow_id = flow_id;
    Eigen::Index lo = 0;
    while (lo < rows.rows() && rows(lo, 0) < start_s) ++lo;
    Eigen::Index hi = lo;
    while (hi < rows.rows() && rows(hi, 0) < end_s) ++hi;
    out.rows = rows.middleRows(lo, hi - lo);
    return out;
}

}  // namespace hometap::traceio

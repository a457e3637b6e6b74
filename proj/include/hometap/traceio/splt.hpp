#pragma once

#include <string>

#include <Eigen/Core>

#include "hometap/core/types.hpp"

namespace hometap::traceio {

// Sequence of Packet Lengths and Times: one row per packet, columns
// [timestamp_s, direction, length_bytes] with direction 1 = incoming,
// 0 = outgoing. This matrix is the attack's only view of a flow; the
// spoofed flag is deliberately absent.
struct SpltMatrix {
    Eigen::MatrixX3d rows;  // time-ordered
    std::string flow_id;

    Eigen::Index packet_count() const { return rows.rows(); }
    double start_time() const { return rows.rows() ? rows(0, 0) : 0.0; }
    double end_time() const { return rows.rows() ? rows(rows.rows() - 1, 0) : 0.0; }
    double total_bytes() const { return rows.rows() ? rows.col(2).sum() : 0.0; }

    // Rows with timestamp in [start_s, end_s), in order.
    SpltMatrix slice(double start_s, double end_s) const;
};

SpltMatrix to_splt(const core::Trace& t);

}  // namespace hometap::traceio

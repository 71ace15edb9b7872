#pragma once

#include <string>

#include "gndb/balance.hpp"
#include "gndb/enumerate.hpp"

namespace gndb {

inline constexpr int kReportSchemaVersion = 1;

// Machine documents: JSON with fixed field order, byte-deterministic given
// the same inputs (no timestamps, no wall times). `with_edges` adds the
// per-edge W sizes and D tables.
std::string report_serialize(const BalanceClass& cls, bool with_edges = false);
std::string report_serialize(const ScanReport& report);

// One-screen human summaries (these do include elapsed wall time).
std::string render_summary(const BalanceClass& cls, bool with_edges = false);
std::string render_summary(const ScanReport& report);

}  // namespace gndb

#pragma once

#include <vector>

#include "fieldbound/campaigns.hpp"

/// One default-configuration campaign per test binary.
inline const std::vector<fieldbound::ScanReport>& campaign() {
  static const std::vector<fieldbound::ScanReport> reports = fieldbound::run_all();
  return reports;
}

inline const fieldbound::ScanReport& report(fieldbound::FamilyId id) {
  for (const auto& r : campaign()) {
    if (r.family == id) return r;
  }
  throw std::out_of_range("no report");
}

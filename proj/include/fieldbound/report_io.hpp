#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fieldbound/campaigns.hpp"

namespace fieldbound {

enum class OutputFormat { Json, Csv, Text };

nlohmann::json to_json(const ScanReport& report);
/// Inverse of to_json; throws InvalidArgument on a malformed document.
ScanReport scan_report_from_json(const nlohmann::json& doc);

/// {"reports": [...], "aggregate": {...}} for a full campaign.
nlohmann::json campaign_to_json(const std::vector<ScanReport>& reports);

/// One row per candidate, header first.
std::string to_csv(const std::vector<ScanReport>& reports);
std::string to_text(const std::vector<ScanReport>& reports, bool with_aggregate);

/// Serialized output with a trailing newline. The aggregate section is
/// included when with_aggregate is set (scan --family all).
std::string render(const std::vector<ScanReport>& reports, OutputFormat format, bool with_aggregate);

/// %.17g
std::string format_real(double v);

}  // namespace fieldbound

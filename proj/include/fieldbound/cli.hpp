#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "fieldbound/campaigns.hpp"
#include "fieldbound/report_io.hpp"

namespace fieldbound {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBorderline = 2;
inline constexpr int kExitUsage = 64;

/// Default output directory for report files.
inline constexpr const char* kOutputDirEnv = "FIELDBOUND_OUTPUT_DIR";

struct RunConfig {
  NumericPolicy numeric;
  std::uint64_t method_a_cap = 1'000'000;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
  unsigned threads = 1;

  /// Throws InvalidArgument on a bad epsilon, digit count, cap or thread count.
  void validate() const;
  ScanConfig scan_config() const;
};

std::optional<OutputFormat> parse_format(std::string_view name);

/// family is a family name or "all".
int cmd_scan(std::string_view family, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

struct FieldQuery {
  std::optional<std::int64_t> l;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> s;
};
int cmd_field_info(const FieldQuery& query, std::ostream& out, std::ostream& err);
int cmd_takeuchi(std::int64_t g, std::int64_t t, std::ostream& out, std::ostream& err);
int cmd_verify_lemma(std::string_view name, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fieldbound

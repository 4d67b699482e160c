#pragma once

// Per-family scans over the candidate parameters of the pentagon graph
// families, plus the fixed side computations that enter the aggregate
// degree bound.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fieldbound/degree_bounds.hpp"

namespace fieldbound {

enum class FamilyId { Gamma6_1, Gamma6_2, Gamma6_3, Gamma7_1, Gamma7_2, FuchsianPentagon };

/// "gamma6_1", ..., "gamma7_2", "fuchsian_pentagon".
std::string family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// The five graph families in report order.
const std::array<FamilyId, 5>& graph_families();

/// Interval data for a graph family; gamma7_2 shares gamma6_3's.
CaseParams family_params(FamilyId id);

struct ScanConfig {
  EvaluationOptions evaluation;
  unsigned threads = 1;
};

struct StaircaseStep {
  std::uint64_t s_from = 0;
  std::uint64_t k_max = 0;

  bool operator==(const StaircaseStep&) const = default;
};

struct CandidateWindow {
  /// Upper end of the scanned range: [s0, K1]^2 or [3, L1].
  std::uint64_t scan_limit = 0;
  /// Largest s among non-exceptional pair candidates (0 in Case 1).
  std::uint64_t max_s = 0;
  /// Largest k, or l in Case 1.
  std::uint64_t max_k = 0;
  /// k_max = max k over non-exceptional candidates with s >= s_from,
  /// listed where that suffix maximum changes. Empty in Case 1.
  std::vector<StaircaseStep> staircase;

  /// Max k over candidates with s >= s (0 when there are none).
  std::uint64_t k_max_from(std::uint64_t s) const;

  bool operator==(const CandidateWindow&) const = default;
};

/// Candidates for which Method A was needed: exceptional ones and those
/// whose Method B bound exceeds the family target.
struct TriggerZone {
  std::uint64_t count = 0;
  std::uint64_t max_s = 0;
  std::uint64_t max_k = 0;

  bool operator==(const TriggerZone&) const = default;
};

struct ScanReport {
  FamilyId family = FamilyId::Gamma6_1;
  CaseParams params;
  double gamma0 = 0.0;
  std::vector<std::uint64_t> exceptional_ls;
  /// (k, s) with k >= s.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> exceptional_pairs;
  /// (L0, L1, delta) or (K0, K1, delta1).
  std::uint64_t threshold0 = 0;
  std::uint64_t threshold1 = 0;
  double delta = 0.0;
  CandidateWindow window;
  /// Sorted by (s, k), or by l.
  std::vector<BoundResult> results;
  std::uint64_t max_field_degree = 0;
  std::vector<FieldSpec> max_degree_fields;
  /// Method A escalation threshold; equals max_field_degree.
  std::uint64_t target = 0;
  TriggerZone trigger_zone;
  std::uint64_t max_total_bound = 0;
  std::uint64_t borderline_count = 0;
  std::optional<std::uint64_t> special_s3;
  /// Set for a family whose bound is taken from another family's scan;
  /// such a report carries the summary but no per-candidate results.
  std::optional<FamilyId> delegated_to;

  bool operator==(const ScanReport&) const = default;
};

/// Throws InvalidArgument for FuchsianPentagon. Threshold window failures
/// are rethrown as WindowAssertion naming the family.
ScanReport run_family(FamilyId id, const ScanConfig& config = {});

/// The five graph families in report order; gamma7_2 is built from the
/// gamma6_3 scan.
std::vector<ScanReport> run_all(const ScanConfig& config = {});

/// M = 1, R = sqrt(3)/2, B = 2, S = 2e * 14^2 / 3 through method_a_least_n.
std::uint64_t gamma63_special_s3();

/// floor((b + ln C) / ln(a / (2 pi)^(4/3))), a = 29.099, b = 8.3185,
/// C = 2^(2g+t-2) (2g+t-2)^(2/3). Throws InvalidSignature when 2g+t-2 < 1.
std::uint64_t takeuchi_degree_bound(std::uint64_t g, std::uint64_t t);

struct PriorBound {
  std::string_view name;
  std::uint64_t degree;
};

/// Degree bounds for ground-field sets established earlier and carried here
/// as constants.
const std::array<PriorBound, 8>& prior_bounds();
std::uint64_t prior_bound_max();

/// Max over the given reports, the s = 3 special case, the Fuchsian pentagon
/// bound and the prior constants.
std::uint64_t aggregate_bound(const std::vector<ScanReport>& reports);

/// As aggregate_bound, but throws IncompleteCampaign unless every graph
/// family has a report.
std::uint64_t aggregate_theorem_bound(const std::vector<ScanReport>& reports);

}  // namespace fieldbound

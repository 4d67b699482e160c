#pragma once

// Degree bounds for a totally real field K = Q(alpha) containing F_l (Case 1)
// or F_{k,s} (Case 2), where alpha is an algebraic integer whose
// non-identity conjugates lie in (0, a * sin^2 ...) and whose identity
// embedding lies in (b1, b2).
//
// Method B bounds [K : F] through |N(alpha)| >= 1. Method A bounds it as the
// least natural solution n of
//
//   n M ln(1/R) - M ln(n + 1) - ln B >= ln S.

#include <cstdint>
#include <optional>

#include "fieldbound/cyclotomic.hpp"
#include "fieldbound/numeric_policy.hpp"

namespace fieldbound {

enum class CaseKind { Case1, Case2 };

/// Interval data bounding the conjugates of the witness alpha.
struct CaseParams {
  CaseKind kind = CaseKind::Case1;
  double a = 0.0;
  /// When nonzero, a == a_gamma0_units * gamma0 and the high-precision
  /// evaluator rebuilds a from gamma0 instead of the rounded double.
  double a_gamma0_units = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  std::uint64_t s0 = 3;

  double b() const;

  /// 0 < a < 4, b1 < b2, a <= b.
  static CaseParams case1(double a, double b1, double b2);
  static CaseParams case1_gamma0(double units, double b1, double b2);
  /// 0 < a < 16, b1 < b2, a <= b, s0 >= 3.
  static CaseParams case2(double a, double b1, double b2, std::uint64_t s0);
  static CaseParams case2_gamma0(double units, double b1, double b2, std::uint64_t s0);

  bool operator==(const CaseParams&) const = default;
};

struct MethodAInputs {
  std::uint64_t M = 1;
  double ln_r = 0.0;
  double ln_b = 0.0;
  double ln_s = 0.0;
};

/// Left side minus right side of the Method A inequality at n.
double method_a_slack(const MethodAInputs& inputs, std::uint64_t n);

/// Least n >= 1 with method_a_slack(inputs, n) >= 0. Throws InvalidArgument
/// unless ln_r < 0 and cap >= 1, and CappedSearch when n would exceed cap.
std::uint64_t method_a_least_n(const MethodAInputs& inputs, std::uint64_t cap);

MethodAInputs case1_method_a_inputs(std::uint64_t l, const CaseParams& p);
MethodAInputs case2_method_a_inputs(std::uint64_t k, std::uint64_t s, const CaseParams& p);

/// ln(2/sqrt a) - ln gamma(l)/phi(l); l is exceptional when this is <= 0.
double case1_exceptional_margin(std::uint64_t l, double a);
bool case1_is_exceptional(std::uint64_t l, double a, double epsilon = 1e-9);

/// ln(4/sqrt a) - ln gamma(l)/phi(l).
double case2_exceptional_margin_l(std::uint64_t l, double a);
bool case2_is_exceptional_l(std::uint64_t l, double a, double epsilon = 1e-9);

/// ln(4/sqrt a) - ln gamma(k)/phi(k) - ln gamma(s)/phi(s).
double case2_pair_margin(std::uint64_t k, std::uint64_t s, double a);
bool case2_is_exceptional_pair(std::uint64_t k, std::uint64_t s, double a, double epsilon = 1e-9);

/// Right side minus left side of the candidate inequality
/// (phi(l)/2) * margin < ln sqrt(b/a) - ln sin(pi/l); positive means l is a
/// candidate.
double case1_inclusion_slack(std::uint64_t l, const CaseParams& p);
double case2_inclusion_slack(std::uint64_t k, std::uint64_t s, const CaseParams& p);

struct MethodBBound {
  std::uint64_t n0 = 0;  // [K : F]
  std::uint64_t n = 0;   // [K : Q] = n0 * [F : Q]
  double ratio = 0.0;
  bool rechecked = false;
  bool disagreed = false;
};

/// Throws InapplicableMethod for an exceptional parameter or one that fails
/// the candidate inequality.
MethodBBound case1_method_b(std::uint64_t l, const CaseParams& p, const NumericPolicy& policy = {});
MethodBBound case2_method_b(std::uint64_t k, std::uint64_t s, const CaseParams& p,
                            const NumericPolicy& policy = {});

/// phi(6) ln(ln 6) / 6.
double constant_C();

/// (C/2) coefficient L - (ln L + ln(sqrt(b/a)/pi)) ln ln L.
double threshold_slack_case1(const CaseParams& p, std::uint64_t L, double coefficient);
/// (C/2) coefficient K - (2 ln K + ln(sqrt(b/a)/pi^2)) ln ln K.
double threshold_slack_case2(const CaseParams& p, std::uint64_t K, double coefficient);

struct ThresholdsCase1 {
  std::uint64_t L0 = 0;
  std::uint64_t L1 = 0;
  double delta = 0.0;
};

struct ThresholdsCase2 {
  std::uint64_t K0 = 0;
  std::uint64_t K1 = 0;
  double delta1 = 0.0;
};

/// Least thresholds. The infinite minimisation defining delta is truncated
/// to [threshold, 10 * threshold]; WindowAssertion is thrown when the
/// analytic tail bound 2 ln W / W cannot certify the truncation.
ThresholdsCase1 solve_threshold_case1(const CaseParams& p);
ThresholdsCase2 solve_threshold_case2(const CaseParams& p);

/// Per-candidate outcome of both methods.
struct BoundResult {
  FieldSpec candidate;
  bool exceptional = false;
  std::optional<std::uint64_t> method_b_n0;
  std::optional<std::uint64_t> method_b_n;
  std::optional<std::uint64_t> method_a_n0;
  std::optional<std::uint64_t> method_a_n;
  std::uint64_t final_n = 0;
  /// Candidate-inequality slack, or the (non-positive) exceptionality margin
  /// for exceptional candidates.
  double margin = 0.0;
  /// |margin| < epsilon, or a high-precision recheck changed an integer.
  bool borderline = false;
  bool precision_rechecked = false;
  /// Method A was needed: exceptional, or Method B exceeded the family target.
  bool method_a_triggered = false;

  bool operator==(const BoundResult&) const = default;
};

struct EvaluationOptions {
  NumericPolicy numeric;
  std::uint64_t method_a_cap = 1'000'000;
};

BoundResult evaluate_case1(std::uint64_t l, const CaseParams& p, const EvaluationOptions& options = {});
BoundResult evaluate_case2(std::uint64_t k, std::uint64_t s, const CaseParams& p,
                           const EvaluationOptions& options = {});

}  // namespace fieldbound

#include "fieldbound/degree_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "fieldbound/constants.hpp"
#include "fieldbound/errors.hpp"
#include "fieldbound/precise.hpp"

namespace fieldbound {

namespace {

constexpr std::uint64_t kThresholdSearchCap = 100'000'000;

void require_l(std::uint64_t l, const char* what) {
  if (l < 3) throw InvalidArgument(std::string(what) + ": l must be >= 3");
}

void require_pair(std::uint64_t k, std::uint64_t s, const char* what) {
  if (s < 3 || k < s) throw InvalidArgument(std::string(what) + ": expected k >= s >= 3");
}

void require_kind(const CaseParams& p, CaseKind kind, const char* what) {
  if (p.kind != kind) throw InvalidArgument(std::string(what) + ": wrong case kind");
}

void validate_common(double a, double b1, double b2) {
  if (!(a > 0.0)) throw InvalidArgument("CaseParams: a must be positive");
  if (!(b1 < b2)) throw InvalidArgument("CaseParams: expected b1 < b2");
  if (a > std::max(std::fabs(b1), std::fabs(b2))) throw InvalidArgument("CaseParams: expected a <= b");
}

double log_gamma_ratio(std::uint64_t l) {
  return std::log(static_cast<double>(gamma_norm(l))) / static_cast<double>(euler_phi(l));
}

double ln_sin_pi_over(std::uint64_t l) { return std::log(std::sin(std::numbers::pi / static_cast<double>(l))); }

double ln_s_numerator(const CaseParams& p) {
  const double widest = std::max({p.a, p.b2, p.a - p.b1});
  return std::log(2.0 * std::numbers::e * widest) - std::log(p.a);
}

std::uint64_t least_threshold(std::uint64_t start, const std::function<double(std::uint64_t)>& slack,
                              const char* what) {
  for (std::uint64_t t = start; t < kThresholdSearchCap; ++t) {
    if (slack(t) >= 0.0) return t;
  }
  throw WindowAssertion(std::string(what) + ": no threshold below search cap");
}

/// max ln gamma(l)/phi(l) over l >= from, certified against the tail
/// l > 10 * from, where ln gamma(l)/phi(l) <= 2 ln l / l <= 2 ln W / W
/// because phi(p^t) >= p^t / 2.
double certified_sup_log_gamma_ratio(const CyclotomicTable& table, std::uint64_t from, const char* what) {
  const std::uint64_t window_end = table.limit();
  double best = 0.0;
  std::uint64_t argbest = 0;
  for (std::uint64_t l = from; l <= window_end; ++l) {
    if (table.log_gamma_ratio(l) > best) {
      best = table.log_gamma_ratio(l);
      argbest = l;
    }
  }
  const double w = static_cast<double>(window_end);
  const double tail = 2.0 * std::log(w) / w;
  if (argbest == 0 || argbest == window_end || !(tail < best)) {
    throw WindowAssertion(std::string(what) + ": window [" + std::to_string(from) + ", " +
                          std::to_string(window_end) + "] does not certify the minimum");
  }
  return best;
}

}  // namespace

double CaseParams::b() const { return std::max(std::fabs(b1), std::fabs(b2)); }

CaseParams CaseParams::case1(double a, double b1, double b2) {
  validate_common(a, b1, b2);
  if (!(a < 4.0)) throw InvalidArgument("CaseParams: Case 1 needs 0 < a < 4");
  CaseParams p;
  p.kind = CaseKind::Case1;
  p.a = a;
  p.b1 = b1;
  p.b2 = b2;
  return p;
}

CaseParams CaseParams::case1_gamma0(double units, double b1, double b2) {
  CaseParams p = case1(units * gamma0(), b1, b2);
  p.a_gamma0_units = units;
  return p;
}

CaseParams CaseParams::case2(double a, double b1, double b2, std::uint64_t s0) {
  validate_common(a, b1, b2);
  if (!(a < 16.0)) throw InvalidArgument("CaseParams: Case 2 needs 0 < a < 16");
  if (s0 < 3) throw InvalidArgument("CaseParams: s0 must be >= 3");
  CaseParams p;
  p.kind = CaseKind::Case2;
  p.a = a;
  p.b1 = b1;
  p.b2 = b2;
  p.s0 = s0;
  return p;
}

CaseParams CaseParams::case2_gamma0(double units, double b1, double b2, std::uint64_t s0) {
  CaseParams p = case2(units * gamma0(), b1, b2, s0);
  p.a_gamma0_units = units;
  return p;
}

// ---------------------------------------------------------------------------
// Method A

double method_a_slack(const MethodAInputs& in, std::uint64_t n) {
  const auto M = static_cast<double>(in.M);
  const auto nn = static_cast<double>(n);
  return nn * M * (-in.ln_r) - M * std::log(nn + 1.0) - in.ln_b - in.ln_s;
}

std::uint64_t method_a_least_n(const MethodAInputs& in, std::uint64_t cap) {
  if (!(in.ln_r < 0.0)) throw InvalidArgument("method_a_least_n: requires ln R < 0");
  if (in.M == 0) throw InvalidArgument("method_a_least_n: requires M >= 1");
  if (cap == 0) throw InvalidArgument("method_a_least_n: cap must be >= 1");
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (method_a_slack(in, n) >= 0.0) return n;
  }
  throw CappedSearch(cap);
}

MethodAInputs case1_method_a_inputs(std::uint64_t l, const CaseParams& p) {
  require_l(l, "case1_method_a_inputs");
  require_kind(p, CaseKind::Case1, "case1_method_a_inputs");
  MethodAInputs in;
  in.M = euler_phi(l) / 2;
  in.ln_r = static_cast<double>(in.M) * (log_gamma_ratio(l) + std::log(std::sqrt(p.a) / 4.0));
  if (!(in.ln_r < 0.0)) {
    throw InapplicableMethod("Method A (Case 1): R >= 1 at l = " + std::to_string(l));
  }
  in.ln_b = std::numbers::ln2 + ln_discr_real_subfield(l) / 2.0;
  in.ln_s = ln_s_numerator(p) - 2.0 * ln_sin_pi_over(l);
  return in;
}

MethodAInputs case2_method_a_inputs(std::uint64_t k, std::uint64_t s, const CaseParams& p) {
  require_pair(k, s, "case2_method_a_inputs");
  require_kind(p, CaseKind::Case2, "case2_method_a_inputs");
  MethodAInputs in;
  in.M = degree_fks(k, s);
  in.ln_r = static_cast<double>(in.M) *
            (log_gamma_ratio(k) + log_gamma_ratio(s) + std::log(std::sqrt(p.a) / 8.0));
  if (!(in.ln_r < 0.0)) {
    throw InapplicableMethod("Method A (Case 2): R >= 1 at (k, s) = (" + std::to_string(k) + ", " +
                             std::to_string(s) + ")");
  }
  in.ln_b = std::numbers::ln2 + ln_discr_fks(k, s) / 2.0;
  in.ln_s = ln_s_numerator(p) - 2.0 * ln_sin_pi_over(s) - 2.0 * ln_sin_pi_over(k);
  return in;
}

// ---------------------------------------------------------------------------
// Exceptionality and the candidate inequality

double case1_exceptional_margin(std::uint64_t l, double a) {
  require_l(l, "case1_exceptional_margin");
  return std::log(2.0 / std::sqrt(a)) - log_gamma_ratio(l);
}

bool case1_is_exceptional(std::uint64_t l, double a, double epsilon) {
  if (!(a > 0.0 && a < 4.0)) throw InvalidArgument("case1_is_exceptional: needs 0 < a < 4");
  return at_most_zero_guarded(case1_exceptional_margin(l, a), epsilon);
}

double case2_exceptional_margin_l(std::uint64_t l, double a) {
  require_l(l, "case2_exceptional_margin_l");
  return std::log(4.0 / std::sqrt(a)) - log_gamma_ratio(l);
}

bool case2_is_exceptional_l(std::uint64_t l, double a, double epsilon) {
  if (!(a > 0.0 && a < 16.0)) throw InvalidArgument("case2_is_exceptional_l: needs 0 < a < 16");
  return at_most_zero_guarded(case2_exceptional_margin_l(l, a), epsilon);
}

double case2_pair_margin(std::uint64_t k, std::uint64_t s, double a) {
  require_pair(k, s, "case2_pair_margin");
  return std::log(4.0 / std::sqrt(a)) - log_gamma_ratio(k) - log_gamma_ratio(s);
}

bool case2_is_exceptional_pair(std::uint64_t k, std::uint64_t s, double a, double epsilon) {
  return at_most_zero_guarded(case2_pair_margin(k, s, a), epsilon);
}

double case1_inclusion_slack(std::uint64_t l, const CaseParams& p) {
  const double rhs = std::log(std::sqrt(p.b() / p.a)) - ln_sin_pi_over(l);
  const double lhs = static_cast<double>(euler_phi(l)) / 2.0 * case1_exceptional_margin(l, p.a);
  return rhs - lhs;
}

double case2_inclusion_slack(std::uint64_t k, std::uint64_t s, const CaseParams& p) {
  const double rhs = std::log(std::sqrt(p.b() / p.a)) - ln_sin_pi_over(k) - ln_sin_pi_over(s);
  const double lhs = static_cast<double>(degree_fks(k, s)) * case2_pair_margin(k, s, p.a);
  return rhs - lhs;
}

// ---------------------------------------------------------------------------
// Method B

MethodBBound case1_method_b(std::uint64_t l, const CaseParams& p, const NumericPolicy& policy) {
  require_kind(p, CaseKind::Case1, "case1_method_b");
  const double margin = case1_exceptional_margin(l, p.a);
  if (at_most_zero_guarded(margin, policy.epsilon)) {
    throw InapplicableMethod("Method B (Case 1): l = " + std::to_string(l) + " is exceptional");
  }
  if (!above_zero_guarded(case1_inclusion_slack(l, p), policy.epsilon)) {
    throw InapplicableMethod("Method B (Case 1): l = " + std::to_string(l) + " is not a candidate");
  }
  const std::uint64_t degree = euler_phi(l) / 2;
  MethodBBound out;
  out.ratio = (std::log(std::sqrt(p.b() / p.a)) - ln_sin_pi_over(l)) / (static_cast<double>(degree) * margin);
  const auto floor = guarded_floor(out.ratio, policy, [&] {
    return precise::floor_with_resolution(precise::case1_method_b_ratio(l, p), policy.high_precision_digits);
  });
  // A borderline candidate can have ratio just below 1; F_l is in K, so n0 >= 1.
  out.n0 = static_cast<std::uint64_t>(std::max<std::int64_t>(floor.value, 1));
  out.n = out.n0 * degree;
  out.rechecked = floor.rechecked;
  out.disagreed = floor.disagreed;
  return out;
}

MethodBBound case2_method_b(std::uint64_t k, std::uint64_t s, const CaseParams& p, const NumericPolicy& policy) {
  require_kind(p, CaseKind::Case2, "case2_method_b");
  const double margin = case2_pair_margin(k, s, p.a);
  if (at_most_zero_guarded(margin, policy.epsilon)) {
    throw InapplicableMethod("Method B (Case 2): (" + std::to_string(k) + ", " + std::to_string(s) +
                             ") is an exceptional pair");
  }
  if (!above_zero_guarded(case2_inclusion_slack(k, s, p), policy.epsilon)) {
    throw InapplicableMethod("Method B (Case 2): (" + std::to_string(k) + ", " + std::to_string(s) +
                             ") is not a candidate");
  }
  const std::uint64_t degree = degree_fks(k, s);
  MethodBBound out;
  out.ratio = (std::log(std::sqrt(p.b() / p.a)) - ln_sin_pi_over(k) - ln_sin_pi_over(s)) /
              (static_cast<double>(degree) * margin);
  const auto floor = guarded_floor(out.ratio, policy, [&] {
    return precise::floor_with_resolution(precise::case2_method_b_ratio(k, s, p), policy.high_precision_digits);
  });
  out.n0 = static_cast<std::uint64_t>(std::max<std::int64_t>(floor.value, 1));
  out.n = out.n0 * degree;
  out.rechecked = floor.rechecked;
  out.disagreed = floor.disagreed;
  return out;
}

// ---------------------------------------------------------------------------
// Thresholds

double constant_C() { return 2.0 * std::log(std::log(6.0)) / 6.0; }

double threshold_slack_case1(const CaseParams& p, std::uint64_t L, double coefficient) {
  const auto x = static_cast<double>(L);
  const double offset = std::log(std::sqrt(p.b() / p.a) / std::numbers::pi);
  return constant_C() / 2.0 * coefficient * x - (std::log(x) + offset) * std::log(std::log(x));
}

double threshold_slack_case2(const CaseParams& p, std::uint64_t K, double coefficient) {
  const auto x = static_cast<double>(K);
  const double offset = std::log(std::sqrt(p.b() / p.a) / (std::numbers::pi * std::numbers::pi));
  return constant_C() / 2.0 * coefficient * x - (2.0 * std::log(x) + offset) * std::log(std::log(x));
}

ThresholdsCase1 solve_threshold_case1(const CaseParams& p) {
  require_kind(p, CaseKind::Case1, "solve_threshold_case1");
  const double base = std::log(2.0 / std::sqrt(p.a));
  if (!(base > 0.0)) throw WindowAssertion("solve_threshold_case1: ln(2/sqrt a) must be positive");

  ThresholdsCase1 out;
  out.L0 = least_threshold(4, [&](std::uint64_t L) { return threshold_slack_case1(p, L, base); },
                           "solve_threshold_case1 (L0)");
  const CyclotomicTable table(10 * out.L0);
  out.delta = base - certified_sup_log_gamma_ratio(table, out.L0, "solve_threshold_case1");
  if (!(out.delta > 0.0)) throw WindowAssertion("solve_threshold_case1: delta is not positive");
  out.L1 = least_threshold(out.L0, [&](std::uint64_t L) { return threshold_slack_case1(p, L, out.delta); },
                           "solve_threshold_case1 (L1)");
  return out;
}

ThresholdsCase2 solve_threshold_case2(const CaseParams& p) {
  require_kind(p, CaseKind::Case2, "solve_threshold_case2");
  const double base = std::log(4.0 / std::sqrt(p.a));

  ThresholdsCase2 out;
  out.K0 = least_threshold(4, [&](std::uint64_t K) { return threshold_slack_case2(p, K, base); },
                           "solve_threshold_case2 (K0)");
  const CyclotomicTable table(10 * out.K0);
  const double sup_k = certified_sup_log_gamma_ratio(table, out.K0, "solve_threshold_case2");

  // s ranges over [s0, inf). An s with base - ratio(s) <= 0 only yields
  // non-positive values and drops out; any s in between would make the
  // positive-part minimum depend on k, which this solver does not handle.
  double sup_s = 0.0;
  for (std::uint64_t s = p.s0; s <= table.limit(); ++s) {
    const double rest = base - table.log_gamma_ratio(s);
    if (rest <= 0.0) continue;
    if (rest - sup_k <= 0.0) {
      throw WindowAssertion("solve_threshold_case2: s = " + std::to_string(s) +
                            " straddles the positivity constraint");
    }
    sup_s = std::max(sup_s, table.log_gamma_ratio(s));
  }
  out.delta1 = base - sup_s - sup_k;
  if (!(out.delta1 > 0.0)) throw WindowAssertion("solve_threshold_case2: delta1 is not positive");
  out.K1 = least_threshold(out.K0, [&](std::uint64_t K) { return threshold_slack_case2(p, K, out.delta1); },
                           "solve_threshold_case2 (K1)");
  return out;
}

// ---------------------------------------------------------------------------
// Per-candidate evaluation

namespace {

template <typename DoubleInputs, typename PreciseInputs>
void apply_method_a(BoundResult& r, const EvaluationOptions& opt, DoubleInputs&& make_inputs,
                    PreciseInputs&& make_precise) {
  MethodAInputs in;
  try {
    in = make_inputs();
  } catch (const InapplicableMethod&) {
    if (r.exceptional) throw;
    return;
  }
  std::uint64_t n = method_a_least_n(in, opt.method_a_cap);
  const double eps = opt.numeric.epsilon;
  const bool near = method_a_slack(in, n) < eps || (n > 1 && method_a_slack(in, n - 1) > -eps);
  if (near) {
    const auto hp = precise::method_a_least_n(make_precise(), opt.method_a_cap, opt.numeric.high_precision_digits);
    r.precision_rechecked = true;
    if (hp.unresolved || hp.n != n) r.borderline = true;
    n = hp.n;
  }
  r.method_a_n0 = n;
  r.method_a_n = n * in.M;
}

void finish(BoundResult& r, double epsilon) {
  std::uint64_t best = 0;
  if (r.method_b_n) best = *r.method_b_n;
  if (r.method_a_n && (best == 0 || *r.method_a_n < best)) best = *r.method_a_n;
  if (best == 0) throw InapplicableMethod("no bounding method applies to this candidate");
  r.final_n = best;
  if (is_borderline(r.margin, epsilon)) r.borderline = true;
}

}  // namespace

BoundResult evaluate_case1(std::uint64_t l, const CaseParams& p, const EvaluationOptions& opt) {
  require_kind(p, CaseKind::Case1, "evaluate_case1");
  BoundResult r;
  r.candidate = FieldSpec::single(l);
  const double margin = case1_exceptional_margin(l, p.a);
  r.exceptional = at_most_zero_guarded(margin, opt.numeric.epsilon);
  r.method_a_triggered = r.exceptional;
  if (r.exceptional) {
    r.margin = margin;
  } else {
    r.margin = case1_inclusion_slack(l, p);
    const MethodBBound b = case1_method_b(l, p, opt.numeric);
    r.method_b_n0 = b.n0;
    r.method_b_n = b.n;
    r.precision_rechecked = b.rechecked;
    r.borderline = b.disagreed;
  }
  apply_method_a(
      r, opt, [&] { return case1_method_a_inputs(l, p); }, [&] { return precise::case1_method_a_inputs(l, p); });
  finish(r, opt.numeric.epsilon);
  return r;
}

BoundResult evaluate_case2(std::uint64_t k, std::uint64_t s, const CaseParams& p, const EvaluationOptions& opt) {
  require_kind(p, CaseKind::Case2, "evaluate_case2");
  BoundResult r;
  r.candidate = FieldSpec::pair(k, s);
  const double margin = case2_pair_margin(k, s, p.a);
  r.exceptional = at_most_zero_guarded(margin, opt.numeric.epsilon);
  r.method_a_triggered = r.exceptional;
  if (r.exceptional) {
    r.margin = margin;
  } else {
    r.margin = case2_inclusion_slack(k, s, p);
    const MethodBBound b = case2_method_b(k, s, p, opt.numeric);
    r.method_b_n0 = b.n0;
    r.method_b_n = b.n;
    r.precision_rechecked = b.rechecked;
    r.borderline = b.disagreed;
  }
  apply_method_a(
      r, opt, [&] { return case2_method_a_inputs(k, s, p); },
      [&] { return precise::case2_method_a_inputs(k, s, p); });
  finish(r, opt.numeric.epsilon);
  return r;
}

}  // namespace fieldbound

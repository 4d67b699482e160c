#include "fieldbound/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "fieldbound/constants.hpp"
#include "fieldbound/errors.hpp"

namespace fieldbound {

namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 6> kNames{{
    {FamilyId::Gamma6_1, "gamma6_1"},
    {FamilyId::Gamma6_2, "gamma6_2"},
    {FamilyId::Gamma6_3, "gamma6_3"},
    {FamilyId::Gamma7_1, "gamma7_1"},
    {FamilyId::Gamma7_2, "gamma7_2"},
    {FamilyId::FuchsianPentagon, "fuchsian_pentagon"},
}};

constexpr std::array<PriorBound, 8> kPriorBounds{{
    {"edge_polyhedra_type1", 22},
    {"edge_polyhedra_type2", 39},
    {"edge_polyhedra_type3", 53},
    {"edge_polyhedra_type4", 56},
    {"edge_polyhedra_type5", 54},
    {"plane_quadrangles", 11},
    {"plane_triangles", 5},
    {"lanner_diagrams", 2},
}};

// The table filter runs first with a loose tolerance; the exact decision is
// then made by the same free functions that evaluate the candidate.
constexpr double kPrefilterSlack = 1e-6;

struct RowOutput {
  std::vector<BoundResult> results;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> exceptional_pairs;
};

template <typename RowFn>
std::vector<RowOutput> run_rows(std::uint64_t first, std::uint64_t last, unsigned threads, RowFn&& fn) {
  std::vector<RowOutput> rows(last >= first ? last - first + 1 : 0);
  const unsigned workers = std::max(1U, threads);
  if (workers == 1) {
    for (std::uint64_t i = 0; i < rows.size(); ++i) rows[i] = fn(first + i);
    return rows;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < rows.size(); i += workers) rows[i] = fn(first + i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void scan_case2(ScanReport& report, const ScanConfig& config) {
  const CaseParams& p = report.params;
  const double eps = config.evaluation.numeric.epsilon;
  const CyclotomicTable table(report.threshold1);
  const std::uint64_t limit = report.threshold1;

  for (std::uint64_t l = 3; l <= limit; ++l) {
    if (case2_is_exceptional_l(l, p.a, eps)) report.exceptional_ls.push_back(l);
  }
  std::vector<bool> skip(limit + 1, false);
  for (auto l : report.exceptional_ls) skip[l] = true;

  const double base = std::log(4.0 / std::sqrt(p.a));
  const double ln_sqrt_ba = std::log(std::sqrt(p.b() / p.a));

  auto rows = run_rows(p.s0, limit, config.threads, [&](std::uint64_t s) {
    RowOutput out;
    if (skip[s]) return out;
    for (std::uint64_t k = s; k <= limit; ++k) {
      if (skip[k]) continue;
      const double margin = base - table.log_gamma_ratio(k) - table.log_gamma_ratio(s);
      if (margin < eps) {
        if (case2_is_exceptional_pair(k, s, p.a, eps)) {
          out.exceptional_pairs.emplace_back(k, s);
          out.results.push_back(evaluate_case2(k, s, p, config.evaluation));
          continue;
        }
      }
      const double rhs = ln_sqrt_ba - table.ln_sin_pi_over(k) - table.ln_sin_pi_over(s);
      const double slack = rhs - static_cast<double>(table.degree_fks(k, s)) * margin;
      if (slack <= -eps - kPrefilterSlack * (1.0 + std::fabs(rhs))) continue;
      if (!above_zero_guarded(case2_inclusion_slack(k, s, p), eps)) continue;
      out.results.push_back(evaluate_case2(k, s, p, config.evaluation));
    }
    return out;
  });

  for (auto& row : rows) {
    for (auto& r : row.results) report.results.push_back(std::move(r));
    for (auto& e : row.exceptional_pairs) report.exceptional_pairs.push_back(e);
  }
  std::sort(report.exceptional_pairs.begin(), report.exceptional_pairs.end(),
            [](const auto& x, const auto& y) { return std::pair(x.second, x.first) < std::pair(y.second, y.first); });

  // Window over non-exceptional candidates.
  std::vector<std::uint64_t> row_max(limit + 2, 0);
  for (const auto& r : report.results) {
    if (r.exceptional) continue;
    report.window.max_s = std::max(report.window.max_s, r.candidate.s);
    report.window.max_k = std::max(report.window.max_k, r.candidate.k);
    row_max[r.candidate.s] = std::max(row_max[r.candidate.s], r.candidate.k);
  }
  std::vector<std::uint64_t> suffix(limit + 2, 0);
  for (std::uint64_t s = report.window.max_s; s >= p.s0 && s > 0; --s) suffix[s] = std::max(row_max[s], suffix[s + 1]);
  for (std::uint64_t s = p.s0; s <= report.window.max_s; ++s) {
    if (s == p.s0 || suffix[s] != suffix[s - 1]) report.window.staircase.push_back({s, suffix[s]});
  }
}

void scan_case1(ScanReport& report, const ScanConfig& config) {
  const CaseParams& p = report.params;
  const double eps = config.evaluation.numeric.epsilon;
  const CyclotomicTable table(report.threshold1);
  const double base = std::log(2.0 / std::sqrt(p.a));
  const double ln_sqrt_ba = std::log(std::sqrt(p.b() / p.a));

  for (std::uint64_t l = 3; l <= report.threshold1; ++l) {
    const double margin = base - table.log_gamma_ratio(l);
    if (margin < eps && case1_is_exceptional(l, p.a, eps)) {
      report.exceptional_ls.push_back(l);
      report.results.push_back(evaluate_case1(l, p, config.evaluation));
      continue;
    }
    const double rhs = ln_sqrt_ba - table.ln_sin_pi_over(l);
    const double slack = rhs - static_cast<double>(table.phi(l)) / 2.0 * margin;
    if (slack <= -eps - kPrefilterSlack * (1.0 + std::fabs(rhs))) continue;
    if (!above_zero_guarded(case1_inclusion_slack(l, p), eps)) continue;
    report.results.push_back(evaluate_case1(l, p, config.evaluation));
    report.window.max_k = std::max(report.window.max_k, l);
  }
}

void summarize(ScanReport& report) {
  for (const auto& r : report.results) report.max_field_degree = std::max(report.max_field_degree, r.candidate.degree);
  report.target = report.max_field_degree;
  for (auto& r : report.results) {
    if (r.candidate.degree == report.max_field_degree) report.max_degree_fields.push_back(r.candidate);
    if (r.method_b_n && *r.method_b_n > report.target) r.method_a_triggered = true;
    if (r.method_a_triggered) {
      ++report.trigger_zone.count;
      const bool pair = r.candidate.kind == FieldKind::PairKS;
      report.trigger_zone.max_s = std::max(report.trigger_zone.max_s, pair ? r.candidate.s : 0);
      report.trigger_zone.max_k = std::max(report.trigger_zone.max_k, pair ? r.candidate.k : r.candidate.l);
    }
    if (r.borderline) ++report.borderline_count;
    report.max_total_bound = std::max(report.max_total_bound, r.final_n);
  }
  if (report.special_s3) report.max_total_bound = std::max(report.max_total_bound, *report.special_s3);
}

}  // namespace

std::uint64_t CandidateWindow::k_max_from(std::uint64_t s) const {
  if (staircase.empty() || s > max_s) return 0;
  std::uint64_t value = staircase.front().k_max;
  for (const auto& step : staircase) {
    if (step.s_from > s) break;
    value = step.k_max;
  }
  return value;
}

std::string family_name(FamilyId id) {
  for (const auto& [f, name] : kNames) {
    if (f == id) return std::string(name);
  }
  throw InvalidArgument("family_name: unknown family id");
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

const std::array<FamilyId, 5>& graph_families() {
  static const std::array<FamilyId, 5> families{FamilyId::Gamma6_1, FamilyId::Gamma6_2, FamilyId::Gamma6_3,
                                                FamilyId::Gamma7_1, FamilyId::Gamma7_2};
  return families;
}

CaseParams family_params(FamilyId id) {
  const double p14_4 = std::pow(14.0, 4);
  const double p14_5 = std::pow(14.0, 5);
  switch (id) {
    case FamilyId::Gamma6_1:
      return CaseParams::case2(4.0, 12.0, 28.0 * 28.0, 3);
    case FamilyId::Gamma6_2:
      return CaseParams::case1_gamma0(1.0, -p14_5, -32.0);
    case FamilyId::Gamma6_3:
    case FamilyId::Gamma7_2:
      return CaseParams::case2_gamma0(2.0, -32.0 * p14_4, -64.0, 4);
    case FamilyId::Gamma7_1:
      return CaseParams::case2_gamma0(1.0, -p14_5, -32.0, 3);
    case FamilyId::FuchsianPentagon:
      break;
  }
  throw InvalidArgument("family_params: " + family_name(id) + " has no interval data");
}

ScanReport run_family(FamilyId id, const ScanConfig& config) {
  if (id == FamilyId::FuchsianPentagon) {
    throw InvalidArgument("run_family: fuchsian_pentagon is bounded by takeuchi_degree_bound");
  }
  if (id == FamilyId::Gamma7_2) {
    ScanReport delegated = run_family(FamilyId::Gamma6_3, config);
    delegated.family = FamilyId::Gamma7_2;
    delegated.delegated_to = FamilyId::Gamma6_3;
    delegated.results.clear();
    return delegated;
  }

  ScanReport report;
  report.family = id;
  report.params = family_params(id);
  report.gamma0 = gamma0();
  try {
    if (report.params.kind == CaseKind::Case1) {
      const auto t = solve_threshold_case1(report.params);
      report.threshold0 = t.L0;
      report.threshold1 = t.L1;
      report.delta = t.delta;
    } else {
      const auto t = solve_threshold_case2(report.params);
      report.threshold0 = t.K0;
      report.threshold1 = t.K1;
      report.delta = t.delta1;
    }
  } catch (const WindowAssertion& e) {
    throw WindowAssertion(family_name(id) + ": " + e.what());
  }
  report.window.scan_limit = report.threshold1;

  if (report.params.kind == CaseKind::Case1) {
    scan_case1(report, config);
  } else {
    scan_case2(report, config);
  }
  if (id == FamilyId::Gamma6_3) report.special_s3 = gamma63_special_s3();
  summarize(report);
  return report;
}

std::vector<ScanReport> run_all(const ScanConfig& config) {
  std::vector<ScanReport> out;
  for (FamilyId id : graph_families()) {
    if (id == FamilyId::Gamma7_2) {
      ScanReport delegated = out.at(2);
      delegated.family = FamilyId::Gamma7_2;
      delegated.delegated_to = FamilyId::Gamma6_3;
      delegated.results.clear();
      out.push_back(std::move(delegated));
    } else {
      out.push_back(run_family(id, config));
    }
  }
  return out;
}

std::uint64_t gamma63_special_s3() {
  MethodAInputs in;
  in.M = 1;
  in.ln_r = std::log(std::sqrt(3.0) / 2.0);
  in.ln_b = std::numbers::ln2;
  in.ln_s = std::log(2.0 * std::numbers::e * 196.0 / 3.0);
  return method_a_least_n(in, EvaluationOptions{}.method_a_cap);
}

std::uint64_t takeuchi_degree_bound(std::uint64_t g, std::uint64_t t) {
  const auto chi = static_cast<std::int64_t>(2 * g + t) - 2;
  if (chi < 1) throw InvalidSignature("takeuchi_degree_bound: need 2g + t - 2 >= 1");
  const double a = 29.099;
  const double b = 8.3185;
  const double ln_c = static_cast<double>(chi) * std::numbers::ln2 + 2.0 / 3.0 * std::log(static_cast<double>(chi));
  const double denom = std::log(a) - 4.0 / 3.0 * std::log(2.0 * std::numbers::pi);
  return static_cast<std::uint64_t>(std::floor((b + ln_c) / denom));
}

const std::array<PriorBound, 8>& prior_bounds() { return kPriorBounds; }

std::uint64_t prior_bound_max() {
  std::uint64_t best = 0;
  for (const auto& p : kPriorBounds) best = std::max(best, p.degree);
  return best;
}

std::uint64_t aggregate_bound(const std::vector<ScanReport>& reports) {
  std::uint64_t best = std::max({prior_bound_max(), gamma63_special_s3(), takeuchi_degree_bound(0, 5)});
  for (const auto& r : reports) best = std::max(best, r.max_total_bound);
  return best;
}

std::uint64_t aggregate_theorem_bound(const std::vector<ScanReport>& reports) {
  for (FamilyId id : graph_families()) {
    const bool present =
        std::any_of(reports.begin(), reports.end(), [id](const ScanReport& r) { return r.family == id; });
    if (!present) throw IncompleteCampaign("aggregate: missing report for " + family_name(id));
  }
  return aggregate_bound(reports);
}

}  // namespace fieldbound

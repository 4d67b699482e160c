#include "fieldbound/expectations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fieldbound/constants.hpp"
#include "fieldbound/pentagon.hpp"
#include "fieldbound/report_io.hpp"

namespace fieldbound {

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }
std::string str(double v) { return format_real(v); }

std::string pairs_str(const std::vector<Pair>& ps) {
  std::string out;
  for (const auto& [k, s] : ps) out += (out.empty() ? "" : " ") + ("(" + str(k) + "," + str(s) + ")");
  return out.empty() ? "none" : out;
}

std::string ls_str(const std::vector<std::uint64_t>& ls) {
  std::string out;
  for (auto l : ls) out += (out.empty() ? "" : " ") + str(l);
  return out.empty() ? "none" : out;
}

class Table {
 public:
  explicit Table(double epsilon) : epsilon_(epsilon) {}

  void check(std::string id, std::string expected, std::string observed, bool ok, std::string note = {}) {
    items_.push_back({std::move(id), std::move(expected), std::move(observed),
                      ok ? ItemStatus::Pass : ItemStatus::Fail, std::move(note)});
  }

  template <typename T>
  void equal(std::string id, const T& expected, const T& observed) {
    check(std::move(id), str(expected), str(observed), expected == observed);
  }

  /// Pass/fail decided by the sign of one margin.
  void margin(std::string id, bool expected, bool observed, double m) {
    ExpectationItem item{std::move(id), str(expected), str(observed),
                         expected == observed ? ItemStatus::Pass : ItemStatus::Fail, "margin " + str(m)};
    if (item.status == ItemStatus::Pass && std::fabs(m) < epsilon_) {
      item.status = ItemStatus::BorderlinePass;
      item.note += " is within epsilon";
    }
    items_.push_back(std::move(item));
  }

  void guarded(std::string id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(std::move(id), "no error", e.what(), false);
    }
  }

  std::vector<ExpectationItem> take() { return std::move(items_); }

 private:
  double epsilon_;
  std::vector<ExpectationItem> items_;
};

std::vector<Pair> pairs_with_s(std::uint64_t s, std::initializer_list<std::uint64_t> ks) {
  std::vector<Pair> out;
  for (auto k : ks) out.emplace_back(k, s);
  return out;
}

std::vector<Pair> concat(std::initializer_list<std::vector<Pair>> parts) {
  std::vector<Pair> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

struct WindowExpectation {
  std::uint64_t max_s = 0;
  std::uint64_t max_k = 0;
  std::uint64_t step_s = 0;
  std::uint64_t step_k = 0;
};

/// Window over candidates that are neither exceptional nor borderline.
WindowExpectation settled_window(const ScanReport& r, std::uint64_t step_s) {
  WindowExpectation w{0, 0, step_s, 0};
  for (const auto& c : r.results) {
    if (c.exceptional || c.borderline) continue;
    const bool pair = c.candidate.kind == FieldKind::PairKS;
    w.max_s = std::max(w.max_s, pair ? c.candidate.s : 0);
    w.max_k = std::max(w.max_k, pair ? c.candidate.k : c.candidate.l);
    if (pair && c.candidate.s >= step_s) w.step_k = std::max(w.step_k, c.candidate.k);
  }
  return w;
}

void check_window(Table& t, const std::string& fam, const ScanReport& r, const WindowExpectation& want) {
  const std::string expected = "s<=" + str(want.max_s) + " k<=" + str(want.max_k) + " k<=" + str(want.step_k) +
                               " for s>=" + str(want.step_s);
  WindowExpectation full{r.window.max_s, r.window.max_k, want.step_s, r.window.k_max_from(want.step_s)};
  const std::string observed = "s<=" + str(full.max_s) + " k<=" + str(full.max_k) + " k<=" + str(full.step_k) +
                               " for s>=" + str(want.step_s);
  auto same = [&](const WindowExpectation& w) {
    return w.max_s == want.max_s && w.max_k == want.max_k && w.step_k == want.step_k;
  };
  ExpectationItem item{fam + ".window", expected, observed, ItemStatus::Fail, {}};
  if (same(full)) {
    item.status = ItemStatus::Pass;
  } else if (same(settled_window(r, want.step_s))) {
    item.status = ItemStatus::BorderlinePass;
    item.note = "matches after dropping borderline candidates";
  }
  t.check(item.id, item.expected, item.observed, item.status != ItemStatus::Fail, item.note);
}

void check_exceptional_pairs(Table& t, const std::string& fam, const ScanReport& r, std::vector<Pair> want) {
  auto key = [](const Pair& p) { return std::pair(p.second, p.first); };
  std::sort(want.begin(), want.end(), [&](const Pair& x, const Pair& y) { return key(x) < key(y); });
  std::string note;
  for (const auto& c : r.results) {
    if (c.exceptional && c.borderline) {
      note += (note.empty() ? "borderline members:" : "") + (" (" + str(c.candidate.k) + "," + str(c.candidate.s) + ")");
    }
  }
  t.check(fam + ".exceptional_pairs", pairs_str(want), pairs_str(r.exceptional_pairs), want == r.exceptional_pairs,
          note);
}

void check_zone(Table& t, const std::string& fam, const ScanReport& r, std::uint64_t max_s, std::uint64_t max_k) {
  const std::string expected = "within s<=" + str(max_s) + " k<=" + str(max_k);
  const std::string observed = "s<=" + str(r.trigger_zone.max_s) + " k<=" + str(r.trigger_zone.max_k);
  t.check(fam + ".method_a_zone", expected, observed, r.trigger_zone.max_s <= max_s && r.trigger_zone.max_k <= max_k);
}

void check_max_degree(Table& t, const std::string& fam, const ScanReport& r, std::uint64_t degree,
                      const FieldSpec& where) {
  const bool at = std::find(r.max_degree_fields.begin(), r.max_degree_fields.end(), where) != r.max_degree_fields.end();
  std::string observed = str(r.max_field_degree) + " at";
  for (const auto& f : r.max_degree_fields) {
    observed += f.kind == FieldKind::SingleL ? " l=" + str(f.l) : " (" + str(f.k) + "," + str(f.s) + ")";
  }
  const std::string expected =
      str(degree) + " at " +
      (where.kind == FieldKind::SingleL ? "l=" + str(where.l) : "(" + str(where.k) + "," + str(where.s) + ")");
  t.check(fam + ".max_field_degree", expected, observed, r.max_field_degree == degree && at);
}

struct PublishedThresholds {
  std::uint64_t t0;
  std::uint64_t t1;
  double delta;
};

void check_thresholds(Table& t, const std::string& fam, const ScanReport& r, const PublishedThresholds& published,
                      double epsilon) {
  const CaseParams& p = r.params;
  const bool case1 = p.kind == CaseKind::Case1;
  const double base = case1 ? std::log(2.0 / std::sqrt(p.a)) : std::log(4.0 / std::sqrt(p.a));
  auto slack = [&](std::uint64_t x, double coef) {
    return case1 ? threshold_slack_case1(p, x, coef) : threshold_slack_case2(p, x, coef);
  };
  const std::string n0 = case1 ? "L0" : "K0";
  const std::string n1 = case1 ? "L1" : "K1";
  t.check(fam + ".published_" + n0 + "_valid", ">= 0", str(slack(published.t0, base)), slack(published.t0, base) >= -epsilon);
  t.check(fam + ".published_" + n1 + "_valid", ">= 0", str(slack(published.t1, published.delta)),
          slack(published.t1, published.delta) >= -epsilon);
  t.check(fam + "." + n0, "<= " + str(published.t0), str(r.threshold0), r.threshold0 <= published.t0);
  t.check(fam + "." + n1, "<= " + str(published.t1), str(r.threshold1), r.threshold1 <= published.t1);
  t.check(fam + ".delta", ">= " + str(published.delta), str(r.delta), r.delta >= published.delta);
}

}  // namespace

std::string status_label(ItemStatus status) {
  switch (status) {
    case ItemStatus::Pass:
      return "PASS";
    case ItemStatus::BorderlinePass:
      return "BORDERLINE-PASS";
    case ItemStatus::Fail:
      return "FAIL";
  }
  return "FAIL";
}

std::vector<ExpectationItem> run_expectations(const ScanConfig& config) {
  const double eps = config.evaluation.numeric.epsilon;
  const double g0 = gamma0();
  Table t(eps);

  // cyclotomic fields
  t.equal<std::uint64_t>("gamma(9)", 3, gamma_norm(9));
  t.equal<std::uint64_t>("gamma(6)", 1, gamma_norm(6));
  t.equal<std::uint64_t>("gamma_tilde(4)", 4, gamma_tilde(4));
  t.equal<std::uint64_t>("gamma_tilde(10)", 5, gamma_tilde(10));
  t.equal<std::uint64_t>("gamma_tilde(16)", 4, gamma_tilde(16));
  t.check("norm_oracle(4,2)", "4", str(norm_oracle(4, 2)), std::fabs(norm_oracle(4, 2) - 4.0) < 1e-9);
  t.equal<std::uint64_t>("degree F(113,3)", 56, degree_fks(113, 3));
  t.equal<std::uint64_t>("degree F(139,5)", 138, degree_fks(139, 5));
  t.check("ln discr F(6,9) = ln discr F_18", str(ln_discr_real_subfield(18)), str(ln_discr_fks(6, 9)),
          ln_discr_fks(6, 9) == ln_discr_real_subfield(18));

  // degree bounds
  t.check("C", ">= 0.194399", str(constant_C()), constant_C() >= 0.194399);
  t.equal<std::uint64_t>("special s=3 bound", 76, gamma63_special_s3());
  t.guarded("Method A M at l=151", [&] {
    t.equal<std::uint64_t>("Method A M at l=151", 75,
                           case1_method_a_inputs(151, family_params(FamilyId::Gamma6_2)).M);
  });
  {
    // R < 1 for every pair when a = 4.
    const CyclotomicTable table(2760);
    double worst = -1e300;
    for (std::uint64_t s = 3; s <= 2760; ++s) {
      for (std::uint64_t k = s; k <= 2760; ++k) {
        worst = std::max(worst, table.log_gamma_ratio(k) + table.log_gamma_ratio(s) + std::log(2.0 / 8.0));
      }
    }
    t.check("Method A applies to all pairs, a=4", "ln R/M < 0", str(worst), worst < 0.0);
    double worst1 = -1e300;
    for (std::uint64_t l = 3; l <= 2000; ++l) {
      worst1 = std::max(worst1, table.log_gamma_ratio(l) + std::log(std::sqrt(g0) / 4.0));
    }
    t.check("Method A applies to all l, a=gamma0", "ln R/M < 0", str(worst1), worst1 < 0.0);
  }
  t.margin("l=19 exceptional, a=gamma0", true, case1_is_exceptional(19, g0, eps), case1_exceptional_margin(19, g0));
  t.margin("l=3 exceptional, a=2gamma0", true, case2_is_exceptional_l(3, 2 * g0, eps),
           case2_exceptional_margin_l(3, 2 * g0));
  t.margin("l=4 not exceptional, a=2gamma0", false, case2_is_exceptional_l(4, 2 * g0, eps),
           case2_exceptional_margin_l(4, 2 * g0));
  t.margin("l=3 not exceptional, a=gamma0", false, case2_is_exceptional_l(3, g0, eps),
           case2_exceptional_margin_l(3, g0));
  t.margin("(19,3) exceptional, a=4", true, case2_is_exceptional_pair(19, 3, 4.0, eps),
           case2_pair_margin(19, 3, 4.0));
  t.margin("(7,5) exceptional, a=4", true, case2_is_exceptional_pair(7, 5, 4.0, eps), case2_pair_margin(7, 5, 4.0));
  t.margin("(5,4) exceptional, a=2gamma0", true, case2_is_exceptional_pair(5, 4, 2 * g0, eps),
           case2_pair_margin(5, 4, 2 * g0));
  t.guarded("Method B at l=151", [&] {
    const auto b = case1_method_b(151, family_params(FamilyId::Gamma6_2), config.evaluation.numeric);
    t.equal<std::uint64_t>("Method B at l=151", 75, b.n);
  });
  t.guarded("Method B at (139,5)", [&] {
    const auto b = case2_method_b(139, 5, family_params(FamilyId::Gamma6_3), config.evaluation.numeric);
    t.check("Method B at (139,5)", "n0 >= 1, degree 138", "n0 " + str(b.n0) + ", n " + str(b.n),
            b.n0 >= 1 && b.n == b.n0 * 138);
  });

  // pentagon
  t.check("gamma0", "2.885438199983", str(g0), std::fabs(g0 - 2.885438199983) < 1e-12);
  {
    const auto ext = minimize_gamma();
    const double x0 = 2.0 * (std::sqrt(5.0) - 1.0);
    t.check("pentagon min gamma", "-2.885438199983", str(ext.min_value),
            std::fabs(ext.min_value - closed_form_min_gamma()) < 1e-9);
    t.check("pentagon argmin", str(x0), str(ext.x) + ", " + str(ext.y),
            std::fabs(ext.x - x0) < 1e-6 && std::fabs(ext.y - x0) < 1e-6);
  }
  t.check("alpha(2,2,k=3)", "12", str(gamma61_alpha(2, 2, 3)), std::fabs(gamma61_alpha(2, 2, 3) - 12.0) < 1e-12);
  t.check("alpha(14,14,k->inf)", "784", str(gamma61_alpha(14, 14, 1'000'000'000)),
          std::fabs(gamma61_alpha(14, 14, 1'000'000'000) - 784.0) < 1e-9);
  t.check("face bound n=4", "6", str(average_face_bound(4)), average_face_bound(4) == 6.0);
  t.check("face bound n=5", "6", str(average_face_bound(5)), average_face_bound(5) == 6.0);

  // campaigns
  t.equal<std::uint64_t>("takeuchi(0,5)", 12, takeuchi_degree_bound(0, 5));
  t.equal<std::uint64_t>("takeuchi(0,4)", 11, takeuchi_degree_bound(0, 4));
  t.equal<std::uint64_t>("prior bound max", 56, prior_bound_max());

  std::vector<ScanReport> reports;
  try {
    reports = run_all(config);
  } catch (const std::exception& e) {
    t.check("campaign", "completes", e.what(), false);
    return t.take();
  }
  const auto& r61 = reports[0];
  const auto& r62 = reports[1];
  const auto& r63 = reports[2];
  const auto& r71 = reports[3];
  const auto& r72 = reports[4];

  check_exceptional_pairs(t, "gamma6_1", r61,
                          concat({pairs_with_s(3, {3, 4, 5, 7, 8, 9, 11, 13, 17, 19}), pairs_with_s(4, {4, 5}),
                                  pairs_with_s(5, {5, 7})}));
  t.check("gamma6_2.exceptional_l", "3 4 5 7 8 9 11 13 17 19", ls_str(r62.exceptional_ls),
          r62.exceptional_ls == std::vector<std::uint64_t>{3, 4, 5, 7, 8, 9, 11, 13, 17, 19});
  t.check("gamma6_3.exceptional_l", "3", ls_str(r63.exceptional_ls),
          r63.exceptional_ls == std::vector<std::uint64_t>{3});
  check_exceptional_pairs(t, "gamma6_3", r63,
                          concat({pairs_with_s(4, {4, 5, 7, 8, 9, 11, 13, 17, 19}),
                                  pairs_with_s(5, {5, 7, 8, 9, 11, 13, 17, 19, 23, 29, 31}),
                                  pairs_with_s(7, {7, 11, 13})}));
  t.check("gamma7_1.exceptional_l", "none", ls_str(r71.exceptional_ls), r71.exceptional_ls.empty());
  check_exceptional_pairs(t, "gamma7_1", r71, pairs_with_s(3, {3, 4, 5, 7}));

  check_thresholds(t, "gamma6_1", r61, {306, 2760, 0.1251}, eps);
  check_thresholds(t, "gamma6_2", r62, {1540, 1595, 0.1585}, eps);
  check_thresholds(t, "gamma6_3", r63, {630, 4684, 0.097289}, eps);
  check_thresholds(t, "gamma7_1", r71, {324, 1262, 0.28956765}, eps);

  check_window(t, "gamma6_1", r61, {90, 420, 11, 90});
  check_window(t, "gamma6_2", r62, {0, 510, 0, 0});
  check_window(t, "gamma6_3", r63, {210, 870, 14, 210});
  check_window(t, "gamma7_1", r71, {90, 240, 6, 126});
  t.check("gamma6_1 (90,11) inside window", "k_max(s>=11) >= 90", str(r61.window.k_max_from(11)),
          r61.window.k_max_from(11) >= 90);

  check_max_degree(t, "gamma6_1", r61, 56, FieldSpec::pair(113, 3));
  check_max_degree(t, "gamma6_2", r62, 75, FieldSpec::single(151));
  check_max_degree(t, "gamma6_3", r63, 138, FieldSpec::pair(139, 5));
  check_max_degree(t, "gamma7_1", r71, 36, FieldSpec::pair(73, 3));

  check_zone(t, "gamma6_1", r61, 7, 420);
  check_zone(t, "gamma6_2", r62, 0, 83);
  check_zone(t, "gamma6_3", r63, 11, 870);
  check_zone(t, "gamma7_1", r71, 5, 240);

  t.equal<std::uint64_t>("gamma6_1.bound", 56, r61.max_total_bound);
  t.equal<std::uint64_t>("gamma6_2.bound", 75, r62.max_total_bound);
  t.equal<std::uint64_t>("gamma6_3.bound", 138, r63.max_total_bound);
  t.equal<std::uint64_t>("gamma7_1.bound", 42, r71.max_total_bound);
  t.equal<std::uint64_t>("gamma7_2.bound", 138, r72.max_total_bound);
  t.guarded("aggregate", [&] { t.equal<std::uint64_t>("aggregate", 138, aggregate_theorem_bound(reports)); });

  auto items = t.take();
  // Window items that only match after dropping borderline candidates.
  for (auto& item : items) {
    if (item.note == "matches after dropping borderline candidates") item.status = ItemStatus::BorderlinePass;
  }
  return items;
}

}  // namespace fieldbound

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "campaign_fixture.hpp"
#include "fieldbound/campaigns.hpp"
#include "fieldbound/errors.hpp"
#include "oracle.hpp"

using namespace fieldbound;
using Pair = std::pair<std::uint64_t, std::uint64_t>;

namespace {

std::vector<Pair> with_s(std::uint64_t s, std::initializer_list<std::uint64_t> ks) {
  std::vector<Pair> out;
  for (auto k : ks) out.emplace_back(k, s);
  return out;
}

std::vector<Pair> join(std::initializer_list<std::vector<Pair>> parts) {
  std::vector<Pair> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

oracle::Real oracle_a(const CaseParams& p) {
  return p.a_gamma0_units != 0.0 ? oracle::Real(p.a_gamma0_units) * oracle::gamma0() : oracle::Real(p.a);
}

}  // namespace

TEST_CASE("family names") {
  for (FamilyId id : {FamilyId::Gamma6_1, FamilyId::Gamma6_2, FamilyId::Gamma6_3, FamilyId::Gamma7_1,
                      FamilyId::Gamma7_2, FamilyId::FuchsianPentagon}) {
    CHECK(parse_family(family_name(id)) == id);
  }
  CHECK(family_name(FamilyId::Gamma6_1) == "gamma6_1");
  CHECK_FALSE(parse_family("bogus").has_value());
  CHECK_THROWS_AS(run_family(FamilyId::FuchsianPentagon), InvalidArgument);
  CHECK_THROWS_AS(family_params(FamilyId::FuchsianPentagon), InvalidArgument);
}

TEST_CASE("family parameters") {
  const auto p61 = family_params(FamilyId::Gamma6_1);
  CHECK(p61.kind == CaseKind::Case2);
  CHECK(p61.a == 4.0);
  CHECK(p61.b1 == 12.0);
  CHECK(p61.b2 == 784.0);
  CHECK(p61.s0 == 3);
  const auto p62 = family_params(FamilyId::Gamma6_2);
  CHECK(p62.kind == CaseKind::Case1);
  CHECK(p62.b1 == -537824.0);
  CHECK(p62.b2 == -32.0);
  const auto p63 = family_params(FamilyId::Gamma6_3);
  CHECK(p63.b1 == -32.0 * 38416.0);
  CHECK(p63.b2 == -64.0);
  CHECK(p63.s0 == 4);
  CHECK(family_params(FamilyId::Gamma7_2) == p63);
  const auto p71 = family_params(FamilyId::Gamma7_1);
  CHECK(p71.kind == CaseKind::Case2);
  CHECK(p71.a == p62.a);
}

TEST_CASE("reports carry gamma0") {
  for (const auto& r : campaign()) CHECK(std::fabs(r.gamma0 - 2.885438199983) < 1e-12);
}

TEST_CASE("exceptional sets") {
  CHECK(report(FamilyId::Gamma6_1).exceptional_ls.empty());
  CHECK(report(FamilyId::Gamma6_1).exceptional_pairs ==
        join({with_s(3, {3, 4, 5, 7, 8, 9, 11, 13, 17, 19}), with_s(4, {4, 5}), with_s(5, {5, 7})}));
  CHECK(report(FamilyId::Gamma6_2).exceptional_ls == std::vector<std::uint64_t>{3, 4, 5, 7, 8, 9, 11, 13, 17, 19});
  CHECK(report(FamilyId::Gamma6_3).exceptional_ls == std::vector<std::uint64_t>{3});
  CHECK(report(FamilyId::Gamma6_3).exceptional_pairs ==
        join({with_s(4, {4, 5, 7, 8, 9, 11, 13, 17, 19}), with_s(5, {5, 7, 8, 9, 11, 13, 17, 19, 23, 29, 31}),
              with_s(7, {7, 11, 13})}));
  CHECK(report(FamilyId::Gamma7_1).exceptional_ls.empty());
  CHECK(report(FamilyId::Gamma7_1).exceptional_pairs == with_s(3, {3, 4, 5, 7}));
}

TEST_CASE("thresholds") {
  const auto& r61 = report(FamilyId::Gamma6_1);
  CHECK(r61.threshold0 == 306);
  CHECK(r61.threshold1 == 2756);
  const auto& r62 = report(FamilyId::Gamma6_2);
  CHECK(r62.threshold0 == 1540);
  CHECK(r62.threshold1 == 1595);
  CHECK(r62.delta == doctest::Approx(0.1585478).epsilon(1e-6));
  const auto& r63 = report(FamilyId::Gamma6_3);
  CHECK(r63.threshold0 == 630);
  CHECK(r63.threshold1 == 4684);
  CHECK(r63.delta >= 0.097289);
  const auto& r71 = report(FamilyId::Gamma7_1);
  CHECK(r71.threshold0 == 324);
  CHECK(r71.threshold1 == 1262);
  CHECK(r71.delta >= 0.28956765);
}

TEST_CASE("candidate windows") {
  const auto& w61 = report(FamilyId::Gamma6_1).window;
  CHECK(w61.max_s == 90);
  CHECK(w61.max_k == 420);
  CHECK(w61.k_max_from(11) == 90);
  CHECK(w61.staircase == std::vector<StaircaseStep>{{3, 420}, {4, 210}, {6, 126}, {8, 90}});

  CHECK(report(FamilyId::Gamma6_2).window.max_k == 510);
  CHECK(report(FamilyId::Gamma6_2).window.staircase.empty());

  const auto& w63 = report(FamilyId::Gamma6_3).window;
  CHECK(w63.max_s == 210);
  CHECK(w63.max_k == 870);
  CHECK(w63.k_max_from(14) == 210);
  CHECK(w63.k_max_from(4) == 870);
  CHECK(w63.k_max_from(211) == 0);

  const auto& w71 = report(FamilyId::Gamma7_1).window;
  CHECK(w71.max_s == 90);
  CHECK(w71.max_k == 240);
  CHECK(w71.k_max_from(6) == 126);
}

TEST_CASE("scanning up to the larger published K1 adds no candidate") {
  const auto p = family_params(FamilyId::Gamma6_1);
  for (std::uint64_t s = 3; s <= 2760; ++s) {
    for (std::uint64_t k = std::max<std::uint64_t>(s, 2757); k <= 2760; ++k) {
      CHECK(case2_inclusion_slack(k, s, p) < 0.0);
    }
  }
}

TEST_CASE("maximal field degrees and final bounds") {
  const auto& r61 = report(FamilyId::Gamma6_1);
  CHECK(r61.max_field_degree == 56);
  CHECK(r61.max_degree_fields == std::vector<FieldSpec>{FieldSpec::pair(113, 3)});
  CHECK(r61.max_total_bound == 56);

  const auto& r62 = report(FamilyId::Gamma6_2);
  CHECK(r62.max_field_degree == 75);
  CHECK(r62.max_degree_fields == std::vector<FieldSpec>{FieldSpec::single(151)});
  CHECK(r62.max_total_bound == 75);

  const auto& r63 = report(FamilyId::Gamma6_3);
  CHECK(r63.max_field_degree == 138);
  CHECK(r63.max_degree_fields == std::vector<FieldSpec>{FieldSpec::pair(139, 5)});
  CHECK(r63.special_s3 == 76u);
  CHECK(r63.max_total_bound == 138);

  const auto& r71 = report(FamilyId::Gamma7_1);
  CHECK(r71.max_field_degree == 36);
  CHECK(r71.max_degree_fields == std::vector<FieldSpec>{FieldSpec::pair(73, 3)});
  CHECK(r71.max_total_bound == 42);
  for (const auto& c : r71.results) {
    if (c.candidate == FieldSpec::pair(3, 3)) {
      CHECK(c.final_n == 42);
      CHECK(c.method_a_n == 42u);
    } else {
      CHECK(c.final_n <= 36);
    }
  }

  const auto& r72 = report(FamilyId::Gamma7_2);
  CHECK(r72.delegated_to == FamilyId::Gamma6_3);
  CHECK(r72.max_total_bound == 138);
  CHECK(r72.results.empty());
}

TEST_CASE("Method A trigger zones") {
  const auto& z61 = report(FamilyId::Gamma6_1).trigger_zone;
  CHECK(z61.max_s == 7);
  CHECK(z61.max_k == 71);
  CHECK(report(FamilyId::Gamma6_2).trigger_zone.max_k == 83);
  const auto& z63 = report(FamilyId::Gamma6_3).trigger_zone;
  CHECK(z63.max_s == 11);
  CHECK(z63.max_k == 89);
  const auto& z71 = report(FamilyId::Gamma7_1).trigger_zone;
  CHECK(z71.max_s == 5);
  CHECK(z71.max_k == 41);
  // Containment in the published zones.
  CHECK(z61.max_k <= 420);
  CHECK(z63.max_k <= 870);
  CHECK(z71.max_k <= 240);
}

TEST_CASE("per-candidate invariants") {
  const double eps = EvaluationOptions{}.numeric.epsilon;
  for (const auto& r : campaign()) {
    std::uint64_t borderline = 0, best = 0;
    for (std::size_t i = 0; i < r.results.size(); ++i) {
      const auto& c = r.results[i];
      CAPTURE(family_name(r.family));
      CAPTURE(c.candidate.k);
      CAPTURE(c.candidate.s);
      CAPTURE(c.candidate.l);
      std::uint64_t expect = UINT64_MAX;
      if (c.method_b_n) expect = std::min(expect, *c.method_b_n);
      if (c.method_a_n) expect = std::min(expect, *c.method_a_n);
      CHECK(c.final_n == expect);
      CHECK(c.final_n % c.candidate.degree == 0);
      if (c.method_b_n) CHECK(*c.method_b_n == *c.method_b_n0 * c.candidate.degree);
      if (c.method_a_n) CHECK(*c.method_a_n == *c.method_a_n0 * c.candidate.degree);
      if (std::fabs(c.margin) < eps) CHECK(c.borderline);
      if (c.exceptional) CHECK_FALSE(c.method_b_n.has_value());
      CHECK(c.method_a_triggered == (c.exceptional || (c.method_b_n && *c.method_b_n > r.target)));
      if (i > 0) {
        const auto& prev = r.results[i - 1].candidate;
        const auto key = [](const FieldSpec& f) { return std::tuple(f.s, f.k, f.l); };
        CHECK(key(prev) < key(c.candidate));
      }
      borderline += c.borderline;
      best = std::max(best, c.final_n);
    }
    CHECK(r.borderline_count == borderline);
    if (!r.delegated_to) CHECK(r.max_total_bound == std::max<std::uint64_t>(best, r.special_s3.value_or(0)));
  }
}

TEST_CASE("Method A results are minimal for every scanned candidate") {
  for (const auto& r : campaign()) {
    for (const auto& c : r.results) {
      if (!c.method_a_n0 || c.precision_rechecked) continue;
      const auto in = c.candidate.kind == FieldKind::SingleL
                          ? case1_method_a_inputs(c.candidate.l, r.params)
                          : case2_method_a_inputs(c.candidate.k, c.candidate.s, r.params);
      const auto n = *c.method_a_n0;
      CHECK(method_a_slack(in, n) >= 0.0);
      if (n > 1) CHECK(method_a_slack(in, n - 1) < 0.0);
    }
  }
}

TEST_CASE("Method B floors match the 100-digit oracle for every candidate") {
  for (const auto& r : campaign()) {
    const oracle::Real a = oracle_a(r.params);
    const oracle::Real b(r.params.b());
    for (const auto& c : r.results) {
      if (!c.method_b_n0) continue;
      const oracle::Real ratio = c.candidate.kind == FieldKind::SingleL
                                     ? oracle::case1_ratio(c.candidate.l, a, b)
                                     : oracle::case2_ratio(c.candidate.k, c.candidate.s, a, b);
      const auto expected = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(floor(ratio)));
      CAPTURE(c.candidate.k);
      CAPTURE(c.candidate.s);
      CAPTURE(c.candidate.l);
      if (!c.borderline) CHECK(*c.method_b_n0 == expected);
    }
  }
}

TEST_CASE("loose epsilon rechecks floors at high precision") {
  ScanConfig loose;
  loose.evaluation.numeric.epsilon = 1e-3;
  const auto r = run_family(FamilyId::Gamma6_3, loose);
  const oracle::Real a = oracle_a(r.params);
  const oracle::Real b(r.params.b());
  int rechecked = 0;
  for (const auto& c : r.results) {
    if (!c.precision_rechecked || !c.method_b_n0) continue;
    ++rechecked;
    const oracle::Real ratio = oracle::case2_ratio(c.candidate.k, c.candidate.s, a, b);
    CHECK(*c.method_b_n0 == std::max<std::uint64_t>(1, static_cast<std::uint64_t>(floor(ratio))));
  }
  CHECK(rechecked > 0);
  CHECK(r.max_total_bound == 138);
  CHECK(r.exceptional_pairs == report(FamilyId::Gamma6_3).exceptional_pairs);
}

TEST_CASE("thread count does not change reports") {
  ScanConfig threaded;
  threaded.threads = 3;
  const auto again = run_all(threaded);
  REQUIRE(again.size() == campaign().size());
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i] == campaign()[i]);
}

TEST_CASE("run_family for the delegated family") {
  const auto r = run_family(FamilyId::Gamma7_2);
  CHECK(r == report(FamilyId::Gamma7_2));
}

TEST_CASE("special case s = 3") {
  CHECK(gamma63_special_s3() == 76);
  MethodAInputs in{1, std::log(std::sqrt(3.0) / 2.0), std::log(2.0), std::log(2.0 * std::exp(1.0) * 196.0 / 3.0)};
  CHECK(method_a_slack(in, 75) < 0.0);
  CHECK(method_a_slack(in, 76) >= 0.0);
  CHECK(oracle::least_n({1, log(sqrt(oracle::Real(3)) / 2), log(oracle::Real(2)),
                         log(2 * exp(oracle::Real(1)) * 196 / 3)}) == 76);
}

TEST_CASE("takeuchi_degree_bound") {
  CHECK(takeuchi_degree_bound(0, 5) == 12);
  CHECK(takeuchi_degree_bound(0, 4) == 11);
  CHECK(takeuchi_degree_bound(0, 3) == 9);
  CHECK_THROWS_AS(takeuchi_degree_bound(0, 2), InvalidSignature);
  CHECK_THROWS_AS(takeuchi_degree_bound(1, 0), InvalidSignature);
  CHECK_THROWS_AS(takeuchi_degree_bound(0, 0), InvalidSignature);
  // 100-digit evaluation of the same formula.
  for (std::uint64_t t = 3; t <= 12; ++t) {
    const oracle::Real chi(t - 2);
    const oracle::Real c = pow(oracle::Real(2), chi) * pow(chi, oracle::Real(2) / 3);
    const oracle::Real n0 = (oracle::Real("8.3185") + log(c)) /
                            log(oracle::Real("29.099") / pow(2 * oracle::pi(), oracle::Real(4) / 3));
    CHECK(takeuchi_degree_bound(0, t) == static_cast<std::uint64_t>(floor(n0)));
  }
}

TEST_CASE("aggregate bound") {
  CHECK(prior_bound_max() == 56);
  CHECK(prior_bounds().size() == 8);
  CHECK(aggregate_theorem_bound(campaign()) == 138);

  std::vector<ScanReport> partial;
  for (const auto& r : campaign()) {
    if (r.family != FamilyId::Gamma6_3 && r.family != FamilyId::Gamma7_2) partial.push_back(r);
  }
  CHECK(aggregate_bound(partial) == 76);
  CHECK_THROWS_AS(aggregate_theorem_bound(partial), IncompleteCampaign);
  CHECK(aggregate_bound({}) == 76);
}

#include <doctest.h>

#include <sstream>

#include "campaign_fixture.hpp"
#include "fieldbound/errors.hpp"
#include "fieldbound/report_io.hpp"

using namespace fieldbound;

TEST_CASE("JSON round trip, field for field") {
  for (const auto& r : campaign()) {
    CAPTURE(family_name(r.family));
    CHECK(scan_report_from_json(to_json(r)) == r);
    // Through text as well, so double formatting is exercised.
    const auto text = to_json(r).dump();
    CHECK(scan_report_from_json(nlohmann::json::parse(text)) == r);
  }
}

TEST_CASE("JSON schema") {
  const auto j = to_json(report(FamilyId::Gamma6_1));
  CHECK(j["family"] == "gamma6_1");
  CHECK(j["params"]["a"] == 4.0);
  CHECK(j["params"]["s0"] == 3);
  CHECK(j["thresholds"]["K0"] == 306);
  CHECK(j["exceptional"]["pairs"].size() == 14);
  CHECK(j["max_total_bound"] == 56);
  const auto& first = j["candidates"][0];
  CHECK(first["kind"] == "ks");
  CHECK(first.contains("method_b"));
  CHECK(first.contains("method_a"));
  CHECK(first.contains("final"));
  CHECK(first.contains("margin"));
  CHECK(first.contains("borderline"));

  const auto j62 = to_json(report(FamilyId::Gamma6_2));
  CHECK(j62["thresholds"]["L1"] == 1595);
  CHECK(j62["candidates"][0]["kind"] == "l");

  const auto j72 = to_json(report(FamilyId::Gamma7_2));
  CHECK(j72["delegated_to"] == "gamma6_3");
}

TEST_CASE("malformed JSON is rejected") {
  auto j = to_json(report(FamilyId::Gamma6_2));
  j.erase("thresholds");
  CHECK_THROWS_AS(scan_report_from_json(j), InvalidArgument);
  auto k = to_json(report(FamilyId::Gamma6_2));
  k["family"] = "gamma9_9";
  CHECK_THROWS_AS(scan_report_from_json(k), InvalidArgument);
}

TEST_CASE("campaign document") {
  const auto j = campaign_to_json(campaign());
  CHECK(j["reports"].size() == 5);
  CHECK(j["aggregate"]["bound"] == 138);
  CHECK(j["aggregate"]["special_s3"] == 76);
  CHECK(j["aggregate"]["fuchsian_pentagon"] == 12);
  CHECK(j["aggregate"]["prior_bounds"].size() == 8);
}

TEST_CASE("CSV flattening") {
  const auto csv = to_csv(campaign());
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("family,kind,l,k,s,degree", 0) == 0);
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  std::size_t expected = 0;
  for (const auto& r : campaign()) expected += r.results.size();
  CHECK(rows == expected);
  CHECK(csv.find("gamma6_2,l,151,,,75,") != std::string::npos);
}

TEST_CASE("text summary") {
  const auto text = to_text(campaign(), true);
  CHECK(text.find("aggregate bound: 138") != std::string::npos);
  CHECK(text.find("special s=3: 76") != std::string::npos);
  CHECK(text.find("delegated to: gamma6_3") != std::string::npos);
}

TEST_CASE("format_real keeps 17 significant digits") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_real(2.885438199983176)) == 2.885438199983176);
}

TEST_CASE("rendering is deterministic across thread counts") {
  ScanConfig threaded;
  threaded.threads = 4;
  const auto a = render(campaign(), OutputFormat::Json, true);
  const auto b = render(run_all(threaded), OutputFormat::Json, true);
  CHECK(a == b);
}

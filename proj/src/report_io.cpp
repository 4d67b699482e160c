#include "fieldbound/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "fieldbound/errors.hpp"

namespace fieldbound {

using nlohmann::json;

namespace {

json optional_u64(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::uint64_t> read_optional_u64(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::uint64_t>();
}

json field_to_json(const FieldSpec& f) {
  json j;
  if (f.kind == FieldKind::SingleL) {
    j["kind"] = "l";
    j["l"] = f.l;
  } else {
    j["kind"] = "ks";
    j["k"] = f.k;
    j["s"] = f.s;
  }
  j["degree"] = f.degree;
  j["ln_abs_discr"] = f.ln_abs_discr;
  return j;
}

FieldSpec field_from_json(const json& j) {
  FieldSpec f;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "l") {
    f.kind = FieldKind::SingleL;
    f.l = j.at("l").get<std::uint64_t>();
  } else if (kind == "ks") {
    f.kind = FieldKind::PairKS;
    f.k = j.at("k").get<std::uint64_t>();
    f.s = j.at("s").get<std::uint64_t>();
  } else {
    throw InvalidArgument("report: unknown field kind '" + kind + "'");
  }
  f.degree = j.at("degree").get<std::uint64_t>();
  f.ln_abs_discr = j.at("ln_abs_discr").get<double>();
  return f;
}

json result_to_json(const BoundResult& r) {
  json j = field_to_json(r.candidate);
  j["exceptional"] = r.exceptional;
  j["method_b"] = r.method_b_n ? json{{"n0", *r.method_b_n0}, {"n", *r.method_b_n}} : json(nullptr);
  j["method_a"] = r.method_a_n ? json{{"n0", *r.method_a_n0}, {"n", *r.method_a_n}} : json(nullptr);
  j["final"] = r.final_n;
  j["margin"] = r.margin;
  j["borderline"] = r.borderline;
  j["precision_rechecked"] = r.precision_rechecked;
  j["method_a_triggered"] = r.method_a_triggered;
  return j;
}

BoundResult result_from_json(const json& j) {
  BoundResult r;
  r.candidate = field_from_json(j);
  r.exceptional = j.at("exceptional").get<bool>();
  if (!j.at("method_b").is_null()) {
    r.method_b_n0 = j["method_b"].at("n0").get<std::uint64_t>();
    r.method_b_n = j["method_b"].at("n").get<std::uint64_t>();
  }
  if (!j.at("method_a").is_null()) {
    r.method_a_n0 = j["method_a"].at("n0").get<std::uint64_t>();
    r.method_a_n = j["method_a"].at("n").get<std::uint64_t>();
  }
  r.final_n = j.at("final").get<std::uint64_t>();
  r.margin = j.at("margin").get<double>();
  r.borderline = j.at("borderline").get<bool>();
  r.precision_rechecked = j.at("precision_rechecked").get<bool>();
  r.method_a_triggered = j.at("method_a_triggered").get<bool>();
  return r;
}

FamilyId family_from(const json& j) {
  const auto name = j.get<std::string>();
  const auto id = parse_family(name);
  if (!id) throw InvalidArgument("report: unknown family '" + name + "'");
  return *id;
}

std::string case_label(const ScanReport& r) { return r.params.kind == CaseKind::Case1 ? "case1" : "case2"; }

void line(std::ostringstream& out, const char* label, const std::string& value) {
  out << "  " << label << ": " << value << '\n';
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const ScanReport& r) {
  const bool case1 = r.params.kind == CaseKind::Case1;
  json j;
  j["family"] = family_name(r.family);
  j["case"] = case_label(r);
  j["params"] = {{"a", r.params.a},   {"a_gamma0_units", r.params.a_gamma0_units},
                 {"b1", r.params.b1}, {"b2", r.params.b2},
                 {"b", r.params.b()}, {"s0", r.params.s0}};
  j["gamma0"] = r.gamma0;
  if (case1) {
    j["thresholds"] = {{"L0", r.threshold0}, {"L1", r.threshold1}, {"delta", r.delta}};
  } else {
    j["thresholds"] = {{"K0", r.threshold0}, {"K1", r.threshold1}, {"delta1", r.delta}};
  }
  json pairs = json::array();
  for (const auto& [k, s] : r.exceptional_pairs) pairs.push_back({k, s});
  j["exceptional"] = {{"l", r.exceptional_ls}, {"pairs", pairs}};
  json steps = json::array();
  for (const auto& st : r.window.staircase) steps.push_back({{"s_from", st.s_from}, {"k_max", st.k_max}});
  j["window"] = {{"scan_limit", r.window.scan_limit},
                 {"max_s", r.window.max_s},
                 {"max_k", r.window.max_k},
                 {"staircase", steps}};
  json candidates = json::array();
  for (const auto& c : r.results) candidates.push_back(result_to_json(c));
  j["candidates"] = candidates;
  j["max_field_degree"] = r.max_field_degree;
  json at = json::array();
  for (const auto& f : r.max_degree_fields) at.push_back(field_to_json(f));
  j["max_degree_fields"] = at;
  j["target"] = r.target;
  j["trigger_zone"] = {
      {"count", r.trigger_zone.count}, {"max_s", r.trigger_zone.max_s}, {"max_k", r.trigger_zone.max_k}};
  j["max_total_bound"] = r.max_total_bound;
  j["borderline_count"] = r.borderline_count;
  j["special_s3"] = optional_u64(r.special_s3);
  j["delegated_to"] = r.delegated_to ? json(family_name(*r.delegated_to)) : json(nullptr);
  return j;
}

ScanReport scan_report_from_json(const json& j) {
  try {
    ScanReport r;
    r.family = family_from(j.at("family"));
    const auto& p = j.at("params");
    r.params.kind = j.at("case").get<std::string>() == "case1" ? CaseKind::Case1 : CaseKind::Case2;
    r.params.a = p.at("a").get<double>();
    r.params.a_gamma0_units = p.at("a_gamma0_units").get<double>();
    r.params.b1 = p.at("b1").get<double>();
    r.params.b2 = p.at("b2").get<double>();
    r.params.s0 = p.at("s0").get<std::uint64_t>();
    r.gamma0 = j.at("gamma0").get<double>();
    const auto& t = j.at("thresholds");
    const bool case1 = r.params.kind == CaseKind::Case1;
    r.threshold0 = t.at(case1 ? "L0" : "K0").get<std::uint64_t>();
    r.threshold1 = t.at(case1 ? "L1" : "K1").get<std::uint64_t>();
    r.delta = t.at(case1 ? "delta" : "delta1").get<double>();
    r.exceptional_ls = j.at("exceptional").at("l").get<std::vector<std::uint64_t>>();
    for (const auto& pr : j.at("exceptional").at("pairs")) {
      r.exceptional_pairs.emplace_back(pr.at(0).get<std::uint64_t>(), pr.at(1).get<std::uint64_t>());
    }
    const auto& w = j.at("window");
    r.window.scan_limit = w.at("scan_limit").get<std::uint64_t>();
    r.window.max_s = w.at("max_s").get<std::uint64_t>();
    r.window.max_k = w.at("max_k").get<std::uint64_t>();
    for (const auto& st : w.at("staircase")) {
      r.window.staircase.push_back({st.at("s_from").get<std::uint64_t>(), st.at("k_max").get<std::uint64_t>()});
    }
    for (const auto& c : j.at("candidates")) r.results.push_back(result_from_json(c));
    r.max_field_degree = j.at("max_field_degree").get<std::uint64_t>();
    for (const auto& f : j.at("max_degree_fields")) r.max_degree_fields.push_back(field_from_json(f));
    r.target = j.at("target").get<std::uint64_t>();
    const auto& tz = j.at("trigger_zone");
    r.trigger_zone = {tz.at("count").get<std::uint64_t>(), tz.at("max_s").get<std::uint64_t>(),
                      tz.at("max_k").get<std::uint64_t>()};
    r.max_total_bound = j.at("max_total_bound").get<std::uint64_t>();
    r.borderline_count = j.at("borderline_count").get<std::uint64_t>();
    r.special_s3 = read_optional_u64(j.at("special_s3"));
    if (!j.at("delegated_to").is_null()) r.delegated_to = family_from(j["delegated_to"]);
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("report: malformed document: ") + e.what());
  }
}

json campaign_to_json(const std::vector<ScanReport>& reports) {
  json out;
  json list = json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  out["reports"] = list;
  json priors = json::object();
  for (const auto& p : prior_bounds()) priors[std::string(p.name)] = p.degree;
  out["aggregate"] = {{"special_s3", gamma63_special_s3()},
                      {"fuchsian_pentagon", takeuchi_degree_bound(0, 5)},
                      {"prior_bounds", priors},
                      {"bound", aggregate_bound(reports)}};
  return out;
}

std::string to_csv(const std::vector<ScanReport>& reports) {
  std::ostringstream out;
  out << "family,kind,l,k,s,degree,ln_abs_discr,exceptional,method_b_n0,method_b_n,method_a_n0,method_a_n,"
         "final,margin,borderline,precision_rechecked,method_a_triggered\n";
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : reports) {
    const std::string fam = family_name(r.family);
    for (const auto& c : r.results) {
      const auto& f = c.candidate;
      const bool single = f.kind == FieldKind::SingleL;
      out << fam << ',' << (single ? "l" : "ks") << ',' << (single ? std::to_string(f.l) : "") << ','
          << (single ? "" : std::to_string(f.k)) << ',' << (single ? "" : std::to_string(f.s)) << ',' << f.degree
          << ',' << format_real(f.ln_abs_discr) << ',' << c.exceptional << ',' << opt(c.method_b_n0) << ','
          << opt(c.method_b_n) << ',' << opt(c.method_a_n0) << ',' << opt(c.method_a_n) << ',' << c.final_n << ','
          << format_real(c.margin) << ',' << c.borderline << ',' << c.precision_rechecked << ','
          << c.method_a_triggered << '\n';
    }
  }
  return out.str();
}

std::string to_text(const std::vector<ScanReport>& reports, bool with_aggregate) {
  std::ostringstream out;
  for (const auto& r : reports) {
    const bool case1 = r.params.kind == CaseKind::Case1;
    out << family_name(r.family) << " (" << case_label(r) << ")\n";
    line(out, "a", format_real(r.params.a));
    line(out, "b1, b2", format_real(r.params.b1) + ", " + format_real(r.params.b2));
    if (!case1) line(out, "s0", std::to_string(r.params.s0));
    line(out, case1 ? "L0, L1" : "K0, K1", std::to_string(r.threshold0) + ", " + std::to_string(r.threshold1));
    line(out, case1 ? "delta" : "delta1", format_real(r.delta));
    std::string ls;
    for (auto l : r.exceptional_ls) ls += (ls.empty() ? "" : " ") + std::to_string(l);
    line(out, "exceptional l", ls.empty() ? "none" : ls);
    if (!case1) {
      std::string ps;
      for (const auto& [k, s] : r.exceptional_pairs) {
        ps += (ps.empty() ? "" : " ") + ("(" + std::to_string(k) + "," + std::to_string(s) + ")");
      }
      line(out, "exceptional pairs", ps.empty() ? "none" : ps);
      line(out, "window", "s <= " + std::to_string(r.window.max_s) + ", k <= " + std::to_string(r.window.max_k));
      for (const auto& st : r.window.staircase) {
        line(out, "  k_max", "s >= " + std::to_string(st.s_from) + ": " + std::to_string(st.k_max));
      }
    } else {
      line(out, "window", "l <= " + std::to_string(r.window.max_k));
    }
    line(out, "candidates", std::to_string(r.results.size()));
    line(out, "max field degree", std::to_string(r.max_field_degree));
    line(out, "method A zone", std::to_string(r.trigger_zone.count) + " candidates, s <= " +
                                   std::to_string(r.trigger_zone.max_s) + ", k <= " +
                                   std::to_string(r.trigger_zone.max_k));
    if (r.special_s3) line(out, "special s=3", std::to_string(*r.special_s3));
    if (r.delegated_to) line(out, "delegated to", family_name(*r.delegated_to));
    line(out, "borderline", std::to_string(r.borderline_count));
    line(out, "bound", std::to_string(r.max_total_bound));
  }
  if (with_aggregate) out << "aggregate bound: " << aggregate_bound(reports) << '\n';
  return out.str();
}

std::string render(const std::vector<ScanReport>& reports, OutputFormat format, bool with_aggregate) {
  switch (format) {
    case OutputFormat::Json: {
      const json doc = with_aggregate ? campaign_to_json(reports) : to_json(reports.at(0));
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return to_csv(reports);
    case OutputFormat::Text:
      return to_text(reports, with_aggregate);
  }
  return {};
}

}  // namespace fieldbound

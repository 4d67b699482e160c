#include "fieldbound/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fieldbound/cyclotomic_exact.hpp"
#include "fieldbound/errors.hpp"
#include "fieldbound/expectations.hpp"
#include "fieldbound/pentagon.hpp"

namespace fieldbound {

namespace {

constexpr std::size_t kMaxExactDigits = 120;

std::string extension(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Text:
      return "txt";
  }
  return "out";
}

/// --out wins (relative paths resolve against the output directory when it
/// is set); otherwise the output directory gets scan_<family>.<ext>;
/// otherwise stdout.
std::optional<std::filesystem::path> output_target(const RunConfig& config, std::string_view family) {
  const char* dir = std::getenv(kOutputDirEnv);
  const bool have_dir = dir != nullptr && *dir != '\0';
  if (config.output_path) {
    std::filesystem::path p(*config.output_path);
    if (p.is_relative() && have_dir) p = std::filesystem::path(dir) / p;
    return p;
  }
  if (have_dir) return std::filesystem::path(dir) / ("scan_" + std::string(family) + "." + extension(config.format));
  return std::nullopt;
}

void emit(const std::string& body, const std::optional<std::filesystem::path>& target, std::ostream& out) {
  if (!target) {
    out << body;
    return;
  }
  if (target->has_parent_path()) std::filesystem::create_directories(target->parent_path());
  std::ofstream file(*target, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + target->string() + " for writing");
  file << body;
  if (!file) throw std::runtime_error("write failed for " + target->string());
}

std::string exact_or_omitted(const BigInt& v) {
  std::string digits = v.str();
  if (digits.size() > kMaxExactDigits) return "(" + std::to_string(digits.size()) + " digits)";
  return digits;
}

BigInt pow_big(const BigInt& base, std::uint64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

}  // namespace

void RunConfig::validate() const {
  numeric.validate();
  if (method_a_cap == 0) throw InvalidArgument("method A cap must be >= 1");
  if (threads == 0) throw InvalidArgument("threads must be >= 1");
}

ScanConfig RunConfig::scan_config() const {
  ScanConfig c;
  c.evaluation.numeric = numeric;
  c.evaluation.method_a_cap = method_a_cap;
  c.threads = threads;
  return c;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  return std::nullopt;
}

int cmd_scan(std::string_view family, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  const bool all = family == "all";
  std::optional<FamilyId> id;
  if (!all) {
    id = parse_family(family);
    if (!id || *id == FamilyId::FuchsianPentagon) {
      err << "usage error: unknown family '" << family << "'";
      if (id) err << " (use the takeuchi subcommand)";
      err << "\n";
      return kExitUsage;
    }
  }
  try {
    std::vector<ScanReport> reports = all ? run_all(config.scan_config())
                                          : std::vector<ScanReport>{run_family(*id, config.scan_config())};
    emit(render(reports, config.format, all), output_target(config, family), out);
    std::uint64_t borderline = 0;
    for (const auto& r : reports) borderline += r.borderline_count;
    if (borderline > 0) {
      err << "warning: " << borderline << " borderline candidate(s) flagged\n";
      return kExitBorderline;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<ExpectationItem> items;
  try {
    items = run_expectations(config.scan_config());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  std::size_t failed = 0;
  std::size_t borderline = 0;
  for (const auto& item : items) {
    out << status_label(item.status) << "  " << item.id << ": expected " << item.expected << ", got "
        << item.observed;
    if (!item.note.empty()) out << "  [" << item.note << "]";
    out << '\n';
    if (item.status == ItemStatus::Fail) ++failed;
    if (item.status == ItemStatus::BorderlinePass) ++borderline;
  }
  out << items.size() - failed << "/" << items.size() << " passed";
  if (borderline > 0) out << " (" << borderline << " borderline)";
  out << '\n';
  if (borderline > 0) err << "warning: " << borderline << " item(s) passed only within epsilon\n";
  return failed == 0 ? kExitOk : kExitError;
}

int cmd_field_info(const FieldQuery& q, std::ostream& out, std::ostream& err) {
  auto bad = [&](const std::string& msg) {
    err << "usage error: " << msg << '\n';
    return kExitUsage;
  };
  if (q.l && (q.k || q.s)) return bad("give either --l or --k with --s");
  if (q.l) {
    if (*q.l < 3) return bad("l must be >= 3");
    const auto l = static_cast<std::uint64_t>(*q.l);
    const FieldSpec f = FieldSpec::single(l);
    out << "field: F_" << l << '\n';
    out << "phi: " << euler_phi(l) << '\n';
    out << "degree: " << f.degree << '\n';
    out << "gamma: " << gamma_norm(l) << '\n';
    out << "gamma_tilde: " << gamma_tilde(l) << '\n';
    out << "ln_discr_cyclotomic: " << format_real(ln_discr_cyclotomic(l)) << '\n';
    out << "ln_discr: " << format_real(f.ln_abs_discr) << '\n';
    const auto exact = exact_discr_real_subfield(l);
    out << "discr: " << exact_or_omitted(exact.root) << '\n';
    return kExitOk;
  }
  if (!q.k || !q.s) return bad("field-info needs --l, or --k and --s");
  if (*q.k < 3 || *q.s < 3) return bad("k and s must be >= 3");
  auto k = static_cast<std::uint64_t>(*q.k);
  auto s = static_cast<std::uint64_t>(*q.s);
  if (k < s) std::swap(k, s);
  const FieldSpec f = FieldSpec::pair(k, s);
  out << "field: F_{" << k << "," << s << "}\n";
  out << "lcm: " << lcm(k, s) << '\n';
  out << "rho: " << rho(k, s) << '\n';
  out << "degree: " << f.degree << '\n';
  out << "gamma(k), gamma(s): " << gamma_norm(k) << ", " << gamma_norm(s) << '\n';
  out << "gamma_tilde(k), gamma_tilde(s): " << gamma_tilde(k) << ", " << gamma_tilde(s) << '\n';
  out << "ln_discr: " << format_real(f.ln_abs_discr) << '\n';
  BigInt exact;
  if (rho(k, s) == 1) {
    exact = exact_discr_real_subfield(lcm(k, s)).root;
  } else {
    exact = pow_big(exact_discr_real_subfield(k).root, euler_phi(s) / 2) *
            pow_big(exact_discr_real_subfield(s).root, euler_phi(k) / 2);
  }
  out << "discr: " << exact_or_omitted(exact) << '\n';
  return kExitOk;
}

int cmd_takeuchi(std::int64_t g, std::int64_t t, std::ostream& out, std::ostream& err) {
  if (g < 0 || t < 0) {
    err << "usage error: g and t must be >= 0\n";
    return kExitUsage;
  }
  try {
    out << "degree bound: " << takeuchi_degree_bound(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(t))
        << '\n';
    return kExitOk;
  } catch (const InvalidSignature& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify_lemma(std::string_view name, std::ostream& out, std::ostream& err) {
  if (name != "pentagon-min") {
    err << "usage error: unknown lemma '" << name << "' (available: pentagon-min)\n";
    return kExitUsage;
  }
  const PentagonExtremum ext = minimize_gamma();
  const double closed = closed_form_min_gamma();
  const double x0 = 2.0 * (std::sqrt(5.0) - 1.0);
  double worst_residual = 0.0;
  for (double r : pentagon_residuals(ext.argmin)) worst_residual = std::max(worst_residual, std::fabs(r));
  const bool ok = std::fabs(ext.min_value - closed) < 1e-9 && std::fabs(ext.x - x0) < 1e-6 &&
                  std::fabs(ext.y - x0) < 1e-6 && worst_residual < 1e-10 && ext.boundary_dominated;
  out << "argmin x, y: " << format_real(ext.x) << ", " << format_real(ext.y) << '\n';
  out << "q: " << format_real(ext.argmin.q13) << ' ' << format_real(ext.argmin.q14) << ' '
      << format_real(ext.argmin.q24) << ' ' << format_real(ext.argmin.q25) << ' ' << format_real(ext.argmin.q35)
      << '\n';
  out << "max F: " << format_real(ext.f_max) << '\n';
  out << "min gamma: " << format_real(ext.min_value) << '\n';
  out << "closed form: " << format_real(closed) << '\n';
  out << "max residual: " << format_real(worst_residual) << '\n';
  out << "boundary dominated: " << (ext.boundary_dominated ? "yes" : "no") << '\n';
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitError;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree bounds for ground fields of arithmetic reflection groups.\n"
               "Exit codes: 0 ok, 1 error or failed check, 2 borderline candidates flagged, 64 usage error."};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string out_path;
  app.add_option("--epsilon", config.numeric.epsilon, "Borderline guard, in (0, 1e-3]")->capture_default_str();
  app.add_option("--precision-digits", config.numeric.high_precision_digits, "Recheck resolution digits, 20..50")
      ->capture_default_str();
  app.add_option("--method-a-cap", config.method_a_cap, "Iteration cap for Method A")->capture_default_str();
  app.add_option("--format", format, "json, csv or text")->capture_default_str();
  app.add_option("--out", out_path, std::string("Output file (relative to $") + kOutputDirEnv + " when set)");
  app.add_option("--threads", config.threads, "Worker threads per family scan")->capture_default_str();

  std::string family;
  auto* scan = app.add_subcommand("scan", "Scan one family, or all of them");
  scan->add_option("--family", family, "gamma6_1, gamma6_2, gamma6_3, gamma7_1, gamma7_2 or all")->required();
  scan->fallthrough();

  auto* verify = app.add_subcommand("verify", "Check the embedded table of expected values");
  verify->fallthrough();

  FieldQuery query;
  std::int64_t l = 0, k = 0, s = 0;
  auto* info = app.add_subcommand("field-info", "Degree and discriminant of F_l or F_{k,s}");
  auto* ol = info->add_option("--l", l);
  auto* ok = info->add_option("--k", k);
  auto* os = info->add_option("--s", s);

  std::int64_t g = 0, t = 0;
  auto* tak = app.add_subcommand("takeuchi", "Degree bound for a Fuchsian signature (g, t)");
  tak->add_option("--g", g)->required();
  tak->add_option("--t", t)->required();

  std::string lemma;
  auto* lem = app.add_subcommand("verify-lemma", "Re-derive a lemma numerically");
  lem->add_option("name", lemma, "pentagon-min")->required();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const auto fmt = parse_format(format);
  if (!fmt) {
    err << "usage error: unknown format '" << format << "'\n";
    return kExitUsage;
  }
  config.format = *fmt;
  if (!out_path.empty()) config.output_path = out_path;

  if (scan->parsed()) return cmd_scan(family, config, out, err);
  if (verify->parsed()) return cmd_verify(config, out, err);
  if (info->parsed()) {
    if (ol->count()) query.l = l;
    if (ok->count()) query.k = k;
    if (os->count()) query.s = s;
    return cmd_field_info(query, out, err);
  }
  if (tak->parsed()) return cmd_takeuchi(g, t, out, err);
  if (lem->parsed()) return cmd_verify_lemma(lemma, out, err);
  return kExitUsage;
}

}  // namespace fieldbound

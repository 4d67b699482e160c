#include "fieldbound/precise.hpp"

#include <boost/math/constants/constants.hpp>

#include "fieldbound/cyclotomic.hpp"
#include "fieldbound/errors.hpp"

namespace fieldbound::precise {

namespace {

Real from_uint(std::uint64_t v) { return Real(v); }

Real log_gamma_ratio(std::uint64_t l) {
  return log(from_uint(gamma_norm(l))) / from_uint(euler_phi(l));
}

Real ln_sin_pi_over(std::uint64_t l) { return log(sin(pi() / from_uint(l))); }

Real ln_discr_real_subfield(std::uint64_t l) {
  const Real phi = from_uint(euler_phi(l));
  Real value = phi * log(from_uint(l));
  for (const auto& [p, e] : factorize(l)) value -= phi / from_uint(p - 1) * log(from_uint(p));
  return (value - log(from_uint(gamma_tilde(l)))) / 2;
}

Real ln_discr_fks(std::uint64_t k, std::uint64_t s) {
  if (rho(k, s) == 1) return ln_discr_real_subfield(lcm(k, s));
  return from_uint(euler_phi(s)) / 2 * ln_discr_real_subfield(k) +
         from_uint(euler_phi(k)) / 2 * ln_discr_real_subfield(s);
}

Real ln_s_numerator(const CaseParams& p, const Real& a) {
  Real widest = a;
  if (Real(p.b2) > widest) widest = Real(p.b2);
  if (a - Real(p.b1) > widest) widest = a - Real(p.b1);
  return log(2 * exp(Real(1)) * widest) - log(a);
}

Real tolerance(int digits) { return pow(Real(10), -(digits - 5)); }

}  // namespace

Real gamma0() { return pow(sqrt(Real(5)) - 1, 5); }

Real pi() { return boost::math::constants::pi<Real>(); }

Real param_a(const CaseParams& p) {
  if (p.a_gamma0_units != 0.0) return Real(p.a_gamma0_units) * gamma0();
  return Real(p.a);
}

Real case1_method_b_ratio(std::uint64_t l, const CaseParams& p) {
  const Real a = param_a(p);
  const Real numerator = log(sqrt(Real(p.b()) / a)) - ln_sin_pi_over(l);
  const Real margin = log(2 / sqrt(a)) - log_gamma_ratio(l);
  return numerator / (from_uint(euler_phi(l)) / 2 * margin);
}

Real case2_method_b_ratio(std::uint64_t k, std::uint64_t s, const CaseParams& p) {
  const Real a = param_a(p);
  const Real numerator = log(sqrt(Real(p.b()) / a)) - ln_sin_pi_over(k) - ln_sin_pi_over(s);
  const Real margin = log(4 / sqrt(a)) - log_gamma_ratio(k) - log_gamma_ratio(s);
  return numerator / (from_uint(degree_fks(k, s)) * margin);
}

MethodAInputs case1_method_a_inputs(std::uint64_t l, const CaseParams& p) {
  const Real a = param_a(p);
  MethodAInputs in;
  in.M = euler_phi(l) / 2;
  in.ln_r = from_uint(in.M) * (log_gamma_ratio(l) + log(sqrt(a) / 4));
  in.ln_b = log(Real(2)) + ln_discr_real_subfield(l) / 2;
  in.ln_s = ln_s_numerator(p, a) - 2 * ln_sin_pi_over(l);
  return in;
}

MethodAInputs case2_method_a_inputs(std::uint64_t k, std::uint64_t s, const CaseParams& p) {
  const Real a = param_a(p);
  MethodAInputs in;
  in.M = degree_fks(k, s);
  in.ln_r = from_uint(in.M) * (log_gamma_ratio(k) + log_gamma_ratio(s) + log(sqrt(a) / 8));
  in.ln_b = log(Real(2)) + ln_discr_fks(k, s) / 2;
  in.ln_s = ln_s_numerator(p, a) - 2 * ln_sin_pi_over(s) - 2 * ln_sin_pi_over(k);
  return in;
}

Real method_a_slack(const MethodAInputs& in, std::uint64_t n) {
  const Real M = from_uint(in.M);
  const Real nn = from_uint(n);
  return nn * M * (-in.ln_r) - M * log(nn + 1) - in.ln_b - in.ln_s;
}

LeastN method_a_least_n(const MethodAInputs& in, std::uint64_t cap, int digits) {
  if (!(in.ln_r < 0)) throw InapplicableMethod("Method A requires R < 1");
  const Real tol = tolerance(digits);
  Real previous = 0;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    const Real slack = method_a_slack(in, n);
    if (slack >= 0) {
      LeastN out{n, abs(slack) < tol};
      if (n > 1 && abs(previous) < tol) out.unresolved = true;
      return out;
    }
    previous = slack;
  }
  throw CappedSearch(cap);
}

std::pair<std::int64_t, bool> floor_with_resolution(const Real& value, int digits) {
  const Real fl = floor(value);
  const Real nearest = round(value);
  return {fl.convert_to<std::int64_t>(), abs(value - nearest) < tolerance(digits)};
}

}  // namespace fieldbound::precise

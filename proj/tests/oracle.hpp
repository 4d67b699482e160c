#pragma once

// Independent reference evaluations for the tests. Nothing here calls the
// library; arithmetic is brute force or 100-digit binary floating point.

#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_100;
using Int = boost::multiprecision::cpp_int;

inline std::uint64_t phi(std::uint64_t l) {
  std::uint64_t n = 0;
  for (std::uint64_t j = 1; j <= l; ++j) n += std::gcd(j, l) == 1;
  return n;
}

/// phi by trial division, for arguments too large for the gcd count.
inline std::uint64_t phi_trial(std::uint64_t l) {
  std::uint64_t out = l;
  std::uint64_t m = l;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    out -= out / p;
  }
  if (m > 1) out -= out / m;
  return out;
}

inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

/// p when l = p^t, else 1.
inline std::uint64_t gamma(std::uint64_t l) {
  const std::uint64_t p = smallest_prime_factor(l);
  std::uint64_t m = l;
  while (m % p == 0) m /= p;
  return m == 1 ? p : 1;
}

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real ln(std::uint64_t v) { return log(Real(v)); }

inline Real lg(std::uint64_t l) { return ln(gamma(l)) / Real(phi_trial(l)); }

inline Real ln_sin(std::uint64_t l) { return log(sin(pi() / Real(l))); }

/// Product of 4 sin^2(num * pi * j / l) over 1 <= j < l/2 coprime to l.
inline Real norm(std::uint64_t l, int num) {
  Real prod = 1;
  for (std::uint64_t j = 1; 2 * j < l; ++j) {
    if (std::gcd(j, l) != 1) continue;
    const Real v = sin(Real(num) * pi() * Real(j) / Real(l));
    prod *= 4 * v * v;
  }
  return prod;
}

/// |discr Q(zeta_l)| as prod over p^e || l of p^(phi(l) (e - 1/(p-1))).
inline Int discr_cyclotomic(std::uint64_t l) {
  const std::uint64_t f = phi(l);
  Int out = 1;
  std::uint64_t m = l;
  for (std::uint64_t p = 2; m > 1; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e == 0) continue;
    out *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(f * e - f / (p - 1)));
  }
  return out;
}

inline Real gamma0() { return pow(sqrt(Real(5)) - 1, 5); }

inline std::uint64_t degree_pair(std::uint64_t k, std::uint64_t s) {
  const std::uint64_t g = std::gcd(k, s);
  const std::uint64_t m = k / g * s;
  const std::uint64_t rho = (2 % g == 0) ? 2 : 1;
  return phi_trial(m) / (2 * rho);
}

/// Method B ratio, Case 2.
inline Real case2_ratio(std::uint64_t k, std::uint64_t s, const Real& a, const Real& b) {
  const Real num = log(sqrt(b / a)) - ln_sin(k) - ln_sin(s);
  const Real den = log(4 / sqrt(a)) - lg(k) - lg(s);
  return num / (Real(degree_pair(k, s)) * den);
}

/// Method B ratio, Case 1.
inline Real case1_ratio(std::uint64_t l, const Real& a, const Real& b) {
  const Real num = log(sqrt(b / a)) - ln_sin(l);
  const Real den = log(2 / sqrt(a)) - lg(l);
  return num / (Real(phi_trial(l)) / 2 * den);
}

struct MethodA {
  std::uint64_t M;
  Real ln_r;
  Real ln_b;
  Real ln_s;
};

inline Real slack(const MethodA& in, std::uint64_t n) {
  return Real(n) * Real(in.M) * (-in.ln_r) - Real(in.M) * log(Real(n + 1)) - in.ln_b - in.ln_s;
}

inline std::uint64_t least_n(const MethodA& in, std::uint64_t cap = 1'000'000) {
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (slack(in, n) >= 0) return n;
  }
  return 0;
}

}  // namespace oracle

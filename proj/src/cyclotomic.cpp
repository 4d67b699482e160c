#include "fieldbound/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fieldbound/cyclotomic_exact.hpp"
#include "fieldbound/errors.hpp"

namespace fieldbound {

namespace {

void require_at_least_3(std::uint64_t l, const char* what) {
  if (l < 3) {
    throw InvalidArgument(std::string(what) + ": argument must be >= 3, got " + std::to_string(l));
  }
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factorize: argument must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t l) {
  if (l == 0) throw InvalidArgument("euler_phi: argument must be positive");
  std::uint64_t phi = l;
  for (const auto& [p, e] : factorize(l)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t prime_power_base(std::uint64_t l) {
  if (l < 2) return 0;
  const auto f = factorize(l);
  return f.size() == 1 ? f.front().prime : 0;
}

std::uint64_t gamma_norm(std::uint64_t l) {
  require_at_least_3(l, "gamma_norm");
  const std::uint64_t p = prime_power_base(l);
  return p != 0 ? p : 1;
}

std::uint64_t gamma_tilde(std::uint64_t l) {
  require_at_least_3(l, "gamma_tilde");
  if (l == 4) return 4;
  if (l % 2 == 1) return gamma_norm(l);
  const std::uint64_t half = l / 2;
  // l = 6 lands here with half = 3 odd, so gamma_tilde(6) = gamma(3) = 3.
  if (half % 2 == 1) return gamma_norm(half);
  const std::uint64_t g = gamma_norm(half);
  return g * g;
}

double ln_discr_cyclotomic(std::uint64_t l) {
  require_at_least_3(l, "ln_discr_cyclotomic");
  const auto phi = static_cast<double>(euler_phi(l));
  double value = phi * std::log(static_cast<double>(l));
  for (const auto& [p, e] : factorize(l)) {
    value -= phi / static_cast<double>(p - 1) * std::log(static_cast<double>(p));
  }
  return value;
}

double ln_discr_real_subfield(std::uint64_t l) {
  require_at_least_3(l, "ln_discr_real_subfield");
  return (ln_discr_cyclotomic(l) - std::log(static_cast<double>(gamma_tilde(l)))) / 2.0;
}

std::uint64_t lcm(std::uint64_t k, std::uint64_t s) { return k / std::gcd(k, s) * s; }

int rho(std::uint64_t k, std::uint64_t s) {
  require_at_least_3(k, "rho");
  require_at_least_3(s, "rho");
  return 2 % std::gcd(k, s) == 0 ? 2 : 1;
}

std::uint64_t degree_fks(std::uint64_t k, std::uint64_t s) {
  const int r = rho(k, s);
  return euler_phi(lcm(k, s)) / (2 * static_cast<std::uint64_t>(r));
}

double ln_discr_fks(std::uint64_t k, std::uint64_t s) {
  if (rho(k, s) == 1) return ln_discr_real_subfield(lcm(k, s));
  return static_cast<double>(euler_phi(s)) / 2.0 * ln_discr_real_subfield(k) +
         static_cast<double>(euler_phi(k)) / 2.0 * ln_discr_real_subfield(s);
}

double norm_oracle(std::uint64_t l, int angle_numerator) {
  require_at_least_3(l, "norm_oracle");
  double product = 1.0;
  for (std::uint64_t j = 1; 2 * j < l; ++j) {
    if (std::gcd(j, l) != 1) continue;
    const double sn = std::sin(angle_numerator * std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(l));
    product *= 4.0 * sn * sn;
  }
  return product;
}

FieldSpec FieldSpec::single(std::uint64_t l) {
  require_at_least_3(l, "FieldSpec::single");
  FieldSpec f;
  f.kind = FieldKind::SingleL;
  f.l = l;
  f.degree = euler_phi(l) / 2;
  f.ln_abs_discr = ln_discr_real_subfield(l);
  return f;
}

FieldSpec FieldSpec::pair(std::uint64_t k, std::uint64_t s) {
  require_at_least_3(s, "FieldSpec::pair");
  if (k < s) throw InvalidArgument("FieldSpec::pair: expected k >= s");
  FieldSpec f;
  f.kind = FieldKind::PairKS;
  f.k = k;
  f.s = s;
  f.degree = degree_fks(k, s);
  f.ln_abs_discr = ln_discr_fks(k, s);
  return f;
}

CyclotomicTable::CyclotomicTable(std::uint64_t limit)
    : limit_(limit),
      phi_(limit + 1),
      gamma_(limit + 1, 1),
      log_gamma_ratio_(limit + 1, 0.0),
      ln_sin_(limit + 1, 0.0) {
  std::iota(phi_.begin(), phi_.end(), std::uint64_t{0});
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (phi_[p] != p) continue;  // composite: already reduced by a smaller prime
    for (std::uint64_t m = p; m <= limit; m += p) phi_[m] -= phi_[m] / p;
    for (std::uint64_t q = p; q <= limit; q *= p) {
      gamma_[q] = p;
      if (q > limit / p) break;
    }
  }
  for (std::uint64_t l = 3; l <= limit; ++l) {
    log_gamma_ratio_[l] = std::log(static_cast<double>(gamma_[l])) / static_cast<double>(phi_[l]);
    ln_sin_[l] = std::log(std::sin(std::numbers::pi / static_cast<double>(l)));
  }
}

std::uint64_t CyclotomicTable::degree_fks(std::uint64_t k, std::uint64_t s) const {
  const std::uint64_t g = std::gcd(k, s);
  const std::uint64_t r = 2 % g == 0 ? 2 : 1;
  return phi_[k] * phi_[s] / phi_[g] / (2 * r);
}

BigInt exact_discr_cyclotomic(std::uint64_t l) {
  require_at_least_3(l, "exact_discr_cyclotomic");
  const std::uint64_t phi = euler_phi(l);
  BigInt numerator = boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(phi));
  BigInt denominator = 1;
  for (const auto& [p, e] : factorize(l)) {
    denominator *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(phi / (p - 1)));
  }
  return numerator / denominator;
}

ExactRealDiscriminant exact_discr_real_subfield(std::uint64_t l) {
  ExactRealDiscriminant out;
  const BigInt full = exact_discr_cyclotomic(l);
  const BigInt g = gamma_tilde(l);
  out.divisible = full % g == 0;
  out.quotient = full / g;
  out.root = boost::multiprecision::sqrt(out.quotient);
  out.perfect_square = out.divisible && out.root * out.root == out.quotient;
  return out;
}

}  // namespace fieldbound

#pragma once

// Arithmetic of the cyclotomic fields Q(zeta_l) and their maximal totally
// real subfields F_l = Q(cos 2pi/l), plus the composita F_{k,s}.
//
// All discriminants are handled in the log domain: |discr Q(zeta_l)| has
// roughly phi(l) * log10(l) digits and leaves 64-bit range near l = 20.
// cyclotomic_exact.hpp carries the exact big-integer companion.

#include <cstdint>
#include <vector>

namespace fieldbound {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Trial-division factorisation, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t l);

/// p if l = p^t with t >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t l);

/// gamma(l) = N_{F_l/Q}(4 sin^2(pi/l)): p for l = p^t, 1 otherwise.
std::uint64_t gamma_norm(std::uint64_t l);

/// N_{F_l/Q}(4 sin^2(2pi/l)).
std::uint64_t gamma_tilde(std::uint64_t l);

double ln_discr_cyclotomic(std::uint64_t l);
double ln_discr_real_subfield(std::uint64_t l);

std::uint64_t lcm(std::uint64_t k, std::uint64_t s);

/// 2 when gcd(k, s) divides 2, else 1.
int rho(std::uint64_t k, std::uint64_t s);

/// [F_{k,s} : Q] = phi(lcm(k, s)) / (2 rho(k, s)).
std::uint64_t degree_fks(std::uint64_t k, std::uint64_t s);
double ln_discr_fks(std::uint64_t k, std::uint64_t s);

/// Product of 4 sin^2(numerator * pi * j / l) over one j from each {+j, -j}
/// class of (Z/lZ)^*. Numerical cross-check for gamma_norm (numerator 1)
/// and gamma_tilde (numerator 2).
double norm_oracle(std::uint64_t l, int angle_numerator);

enum class FieldKind { SingleL, PairKS };

/// Either F_l or F_{k,s} (k >= s), with its degree and log |discriminant|.
struct FieldSpec {
  FieldKind kind = FieldKind::SingleL;
  std::uint64_t l = 0;
  std::uint64_t k = 0;
  std::uint64_t s = 0;
  std::uint64_t degree = 0;
  double ln_abs_discr = 0.0;

  static FieldSpec single(std::uint64_t l);
  static FieldSpec pair(std::uint64_t k, std::uint64_t s);

  bool operator==(const FieldSpec&) const = default;
};

/// Sieved per-l data for the exhaustive scans. Entries below 3 are unused.
/// Agrees with the free functions above (checked in tests).
class CyclotomicTable {
 public:
  explicit CyclotomicTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t phi(std::uint64_t l) const { return phi_[l]; }
  std::uint64_t gamma(std::uint64_t l) const { return gamma_[l]; }
  /// ln gamma(l) / phi(l)
  double log_gamma_ratio(std::uint64_t l) const { return log_gamma_ratio_[l]; }
  /// ln sin(pi / l)
  double ln_sin_pi_over(std::uint64_t l) const { return ln_sin_[l]; }
  /// Degree of F_{k,s} via phi(lcm) * phi(gcd) = phi(k) * phi(s).
  std::uint64_t degree_fks(std::uint64_t k, std::uint64_t s) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> phi_;
  std::vector<std::uint64_t> gamma_;
  std::vector<double> log_gamma_ratio_;
  std::vector<double> ln_sin_;
};

}  // namespace fieldbound

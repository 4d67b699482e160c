#pragma once

// Exact big-integer discriminants, used to cross-check the log-domain
// evaluators for small l.

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace fieldbound {

using BigInt = boost::multiprecision::cpp_int;

/// |discr Q(zeta_l)| = l^phi(l) / prod_{p | l} p^(phi(l)/(p-1)).
BigInt exact_discr_cyclotomic(std::uint64_t l);

struct ExactRealDiscriminant {
  BigInt quotient;  // |discr Q(zeta_l)| / gamma_tilde(l)
  BigInt root;      // floor(sqrt(quotient)) = |discr F_l| when exact
  bool divisible = false;
  bool perfect_square = false;
};

ExactRealDiscriminant exact_discr_real_subfield(std::uint64_t l);

}  // namespace fieldbound

#pragma once

// 50-digit re-evaluation of the quantities whose floors or signs decide a
// bound. Used only when the double-precision value is within epsilon of a
// decision boundary.

#include <cstdint>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "fieldbound/degree_bounds.hpp"

namespace fieldbound::precise {

using Real = boost::multiprecision::cpp_dec_float_50;

Real gamma0();
Real pi();
/// a rebuilt from gamma0 when the parameters say so.
Real param_a(const CaseParams& p);

Real case1_method_b_ratio(std::uint64_t l, const CaseParams& p);
Real case2_method_b_ratio(std::uint64_t k, std::uint64_t s, const CaseParams& p);

struct MethodAInputs {
  std::uint64_t M = 1;
  Real ln_r;
  Real ln_b;
  Real ln_s;
};

MethodAInputs case1_method_a_inputs(std::uint64_t l, const CaseParams& p);
MethodAInputs case2_method_a_inputs(std::uint64_t k, std::uint64_t s, const CaseParams& p);
Real method_a_slack(const MethodAInputs& inputs, std::uint64_t n);

/// Least n with a non-negative slack; `unresolved` is set when the slack
/// at n or n - 1 is within 10^-(digits - 5) of zero.
struct LeastN {
  std::uint64_t n = 0;
  bool unresolved = false;
};
LeastN method_a_least_n(const MethodAInputs& inputs, std::uint64_t cap, int digits);

/// floor(value) and whether value is within 10^-(digits - 5) of an integer.
std::pair<std::int64_t, bool> floor_with_resolution(const Real& value, int digits);

}  // namespace fieldbound::precise

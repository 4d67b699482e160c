#include "fieldbound/numeric_policy.hpp"

#include <string>

#include "fieldbound/errors.hpp"

namespace fieldbound {

void NumericPolicy::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1e-3)) {
    throw InvalidArgument("epsilon must lie in (0, 1e-3], got " + std::to_string(epsilon));
  }
  if (high_precision_digits < 20 || high_precision_digits > max_high_precision_digits) {
    throw InvalidArgument("high-precision digits must lie in [20, " +
                          std::to_string(max_high_precision_digits) + "], got " +
                          std::to_string(high_precision_digits));
  }
}

GuardedFloor guarded_floor(double value, const NumericPolicy& policy,
                           const std::function<std::pair<std::int64_t, bool>()>& precise) {
  GuardedFloor out;
  out.value = static_cast<std::int64_t>(std::floor(value));
  const double nearest = std::round(value);
  if (std::fabs(value - nearest) >= policy.epsilon) return out;

  const auto [hp_floor, unresolved] = precise();
  out.rechecked = true;
  out.disagreed = unresolved || hp_floor != out.value;
  out.value = hp_floor;
  return out;
}

}  // namespace fieldbound

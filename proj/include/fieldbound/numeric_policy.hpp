#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace fieldbound {

/// Epsilon guard and high-precision settings shared by every comparison.
///
/// A quantity within `epsilon` of zero is borderline. Exceptionality tests
/// treat borderline as exceptional, candidate filters treat it as included,
/// and floors within `epsilon` of an integer are re-evaluated with the
/// high-precision evaluator.
struct NumericPolicy {
  double epsilon = 1e-9;
  int high_precision_digits = 30;

  /// Throws InvalidArgument unless epsilon is in (0, 1e-3] and the digit
  /// count is in [20, max_high_precision_digits].
  void validate() const;
};

/// The high-precision evaluator carries this many significant digits.
inline constexpr int max_high_precision_digits = 50;

inline bool is_borderline(double value, double epsilon) { return std::fabs(value) < epsilon; }

/// value <= 0 with borderline values counted as <= 0.
inline bool at_most_zero_guarded(double value, double epsilon) { return value < epsilon; }

/// value > 0 with borderline values counted as > 0.
inline bool above_zero_guarded(double value, double epsilon) { return value > -epsilon; }

struct GuardedFloor {
  std::int64_t value = 0;
  bool rechecked = false;  // the high-precision evaluator was consulted
  bool disagreed = false;  // and it produced a different floor, or was itself unresolved
};

/// floor(value), falling back to `precise` when value is within epsilon of
/// an integer. `precise` returns the floor and whether its own evaluation
/// sits too close to an integer to resolve.
GuardedFloor guarded_floor(double value, const NumericPolicy& policy,
                           const std::function<std::pair<std::int64_t, bool>()>& precise);

}  // namespace fieldbound

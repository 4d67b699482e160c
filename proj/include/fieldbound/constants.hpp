#pragma once

#include <cmath>

namespace fieldbound {

/// (sqrt 5 - 1)^5 = 2.885438199983..., minus the minimum of the right-angled
/// pentagon product.
inline double gamma0() { return std::pow(std::sqrt(5.0) - 1.0, 5); }

}  // namespace fieldbound

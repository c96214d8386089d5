#pragma once

#include "biframe/frames.hpp"

namespace biframe::detail {

/// sum_k left_k right_k^*. Families must be compatible.
ComplexMatrix mixed_synthesis(const VectorFamily& left, const VectorFamily& right);

}  // namespace biframe::detail

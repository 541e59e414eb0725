#pragma once

#include "tad/expr.hpp"
#include "tad/semiring.hpp"
#include "tad/value.hpp"

namespace tad::ad {

/// A value paired with its tangent.
struct Dual {
  Value primal;
  Value tangent;
};

/// Derived dictionary on pairs over `base`:
///   zero = (0, 0)            one = (1, 0)
///   (a, a') + (b, b') = (a + b, a' + b')
///   (a, a') * (b, b') = (a * b, a' * b + a * b')
///   equivalence is componentwise.
/// Values under this dictionary hold `Dual` payloads. Because the dictionary
/// is itself a first-class `SemiringOps`, duals nest: applying it to itself
/// yields second-order tangents, and so on.
SemiringOps dual_ops(const SemiringOps& base);

/// Forward-mode differentiation: evaluate `e` on duals with the input's
/// tangent set to one, then project the tangent component.
Expression diff_forward(const Expression& e);

}  // namespace tad::ad

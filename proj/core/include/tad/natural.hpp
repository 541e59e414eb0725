#pragma once

#include <gmpxx.h>

namespace tad {

/// Arbitrary-precision natural number. The exact carriers (the natural
/// semiring and polynomial coefficients) never subtract, so values stay
/// non-negative by construction.
using Natural = mpz_class;

}  // namespace tad

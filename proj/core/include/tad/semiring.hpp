#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "tad/value.hpp"

namespace tad {

/// A commutative semiring dictionary over boxed values: the constants 0 and
/// 1, binary addition and multiplication, and an equivalence relation used
/// to compare results (exact for discrete carriers, tolerance-based for
/// floating point).
///
/// Programs evaluated under a dictionary may combine values only through
/// these operations; `equiv` exists for oracles and tests, and well-behaved
/// programs never call it.
struct SemiringOps {
  std::string name;
  Value zero;
  Value one;
  std::function<Value(const Value&, const Value&)> add;
  std::function<Value(const Value&, const Value&)> mul;
  std::function<bool(const Value&, const Value&)> equiv;
};

namespace semiring {

/// Arbitrary-precision naturals with exact equality. Carrier: tad::Natural.
SemiringOps naturals();

/// Machine doubles. Two values are equivalent when
/// |a - b| <= tolerance * max(1, |a|, |b|). Carrier: double.
SemiringOps reals(double relative_tolerance = 1e-9);

/// Multivariate polynomials with natural coefficients in canonical normal
/// form; equality of normal forms is decidable and exact. Carrier:
/// tad::Polynomial.
SemiringOps polynomials();

/// Expression trees combined by node construction; equivalence is provable
/// equality, decided via the polynomial normal form. Carrier: tad::SymPtr.
/// Evaluating a program under this dictionary reads back its syntax.
SemiringOps syntax_trees();

/// True iff every semiring law holds over the sample set: associativity and
/// commutativity of both operations, the identity laws for 0 and 1,
/// annihilation by 0, distributivity both ways, and `equiv` behaving as a
/// congruent equivalence relation. Quadratic/cubic in `samples.size()`.
bool axioms_hold(const SemiringOps& ops, std::span<const Value> samples);

/// The canonical image of n: 1 + 1 + ... + 1 (n times), computed with
/// O(log n) operations by binary double-and-add.
Value nat_embed(const SemiringOps& ops, std::uint64_t n);

}  // namespace semiring
}  // namespace tad

#pragma once

#include <cstddef>
#include <functional>
#include <memory>

#include "tad/semiring.hpp"
#include "tad/symbolic.hpp"
#include "tad/value.hpp"

namespace tad {

/// A differentiable program over one input: a value that can be evaluated,
/// any number of times, under any semiring dictionary.
///
/// Contract for well-behaved programs (relied upon by the differentiation
/// engines, enforced by convention and by the read-back tests):
///  - values are combined only through the supplied dictionary and input;
///    nothing inspects, compares, or branches on them;
///  - no effect handler is installed around dictionary calls, and whatever
///    effects the dictionary performs pass through to the caller untouched;
///  - nothing obtained from one evaluation is retained for another, so each
///    evaluation is self-contained and re-evaluation is always permitted.
class Expression {
 public:
  using Body = std::function<Value(const SemiringOps&, const Value&)>;

  /// Wrap an arbitrary procedure satisfying the contract above.
  static Expression from_body(Body body);

  /// Run the program under a dictionary with the given input value.
  Value evaluate(const SemiringOps& ops, const Value& x) const;

 private:
  struct Impl;
  explicit Expression(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend Expression from_ast(SymPtr tree);
};

/// The program that evaluates a fixed tree. Every leaf must be the
/// distinguished input variable (ContractViolation otherwise); evaluating
/// the result equals evaluating the tree with the input bound.
Expression from_ast(SymPtr tree);

/// Read a program's syntax back by running it under the tree-building
/// dictionary with a leaf as input. For any dictionary and input, evaluating
/// the returned tree is equivalent to evaluating the program.
SymPtr reify(const Expression& e);

/// Number of dictionary operations (adds plus muls) one evaluation performs.
/// Equals the number of nodes built during reify, counting dead and shared
/// results once per construction.
std::size_t operation_count(const Expression& e);

/// (x + 1)^3, written as a shared product: the sum is computed once and
/// multiplied with itself twice, so one evaluation performs 3 operations.
Expression cube();

/// x^k by binary fast exponentiation over mutable accumulators (square the
/// base each round, fold odd bits into the accumulator). The classic loop is
/// kept verbatim, including the initial multiply by 1 and the final dead
/// squaring, so the operation trace is the textbook one.
Expression monomial(unsigned exponent);

}  // namespace tad

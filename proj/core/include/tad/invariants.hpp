#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "tad/expr.hpp"
#include "tad/semiring.hpp"
#include "tad/symbolic.hpp"
#include "tad/trace.hpp"
#include "tad/value.hpp"
#include "tad/varid.hpp"
#include "tad/vertex.hpp"

namespace tad::ad {

/// Observer that shadows a reverse-mode run with a symbolic mirror and
/// checks the engine's state against the independent symbolic evaluator.
/// Every operation is mirrored as a context binding `u := a op b` (constants
/// get reserved placeholder ids bound to zero/one in the base environment,
/// which otherwise binds only the input).
///
/// Forward sweep — after every recorded operation, for the input and every
/// name the context defines:
///
///   value(j) ≡ eval(fill(context, j))           under the base environment
///
/// Backward sweep — after the root is seeded and after every backward step,
/// with the context split into the pending prefix and the processed suffix,
/// for the input and every pending intermediate j:
///
///   adjoint(j) ≡ eval(∂(fill(suffix, root)) / ∂j)
///                                 under the base environment extended by
///                                 the pending prefix
///
/// At the final step this specializes to: the input's adjoint is the
/// symbolic derivative of the whole program. The checker also enforces that
/// backward steps consume operations newest-first. Any mismatch throws
/// InvariantViolation.
class GhostInvariantChecker final : public ReverseObserver {
 public:
  GhostInvariantChecker(SemiringOps ops, Value at);

  void on_input(const Vertex& input) override;
  void on_operation(const TapeEntry& entry) override;
  void on_seed(const Vertex& root) override;
  void on_retire(const TapeEntry& entry) override;

  /// Total number of individual adjoint comparisons that passed.
  std::size_t checks_performed() const { return checks_; }

 private:
  VarId ghost_id(const Vertex& v);
  void check_forward_values();
  void check_pending_adjoints();

  SemiringOps ops_;
  Value at_;
  VarId zero_id_;
  VarId one_id_;
  Env base_env_;  // input plus the constant placeholders, nothing else
  Context context_;
  std::vector<Vertex> all_;   // input + every intermediate, creation order
  std::vector<Vertex> live_;  // input + intermediates not yet retired
  VarId root_id_;
  bool seeded_ = false;
  std::size_t retired_ = 0;  // backward steps completed (suffix length)
  std::size_t checks_ = 0;
};

/// Differentiate `e` at `at` with the tape engine under the ghost checker;
/// returns the number of adjoint comparisons performed (throws on mismatch).
std::size_t check_tape_invariants(const Expression& e, const SemiringOps& ops,
                                  const Value& at);

/// Same for the handler engine.
std::size_t check_handler_invariants(const Expression& e,
                                     const SemiringOps& ops, const Value& at);

}  // namespace tad::ad

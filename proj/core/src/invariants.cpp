#include "tad/invariants.hpp"

#include <span>
#include <string>
#include <utility>

#include "tad/errors.hpp"
#include "tad/handler_diff.hpp"
#include "tad/tape_diff.hpp"

namespace tad::ad {

GhostInvariantChecker::GhostInvariantChecker(SemiringOps ops, Value at)
    : ops_(std::move(ops)),
      at_(std::move(at)),
      zero_id_(VarId::fresh()),
      one_id_(VarId::fresh()),
      base_env_(ops_.zero),
      root_id_(VarId::input()) {
  base_env_.bind(zero_id_, ops_.zero);
  base_env_.bind(one_id_, ops_.one);
}

VarId GhostInvariantChecker::ghost_id(const Vertex& v) {
  switch (v.kind()) {
    case Vertex::Kind::zero:
      return zero_id_;
    case Vertex::Kind::one:
      return one_id_;
    case Vertex::Kind::var:
      return v.id();
  }
  throw ContractViolation("corrupt vertex kind");
}

void GhostInvariantChecker::on_input(const Vertex& input) {
  base_env_.bind(input.id(), at_);
  all_.push_back(input);
  live_.push_back(input);
}

void GhostInvariantChecker::on_operation(const TapeEntry& entry) {
  context_.push_back(Binding{entry.u.id(), entry.op, ghost_id(entry.a),
                             ghost_id(entry.b)});
  all_.push_back(entry.u);
  live_.push_back(entry.u);
  check_forward_values();
}

void GhostInvariantChecker::on_seed(const Vertex& root) {
  if (seeded_) {
    throw InvariantViolation("root seeded twice");
  }
  seeded_ = true;
  root_id_ = ghost_id(root);
  check_pending_adjoints();
}

void GhostInvariantChecker::on_retire(const TapeEntry& entry) {
  if (!seeded_) {
    throw InvariantViolation("backward step before the root was seeded");
  }
  if (retired_ >= context_.size()) {
    throw InvariantViolation("more backward steps than operations");
  }
  // Backward steps must consume operations newest-first.
  const Binding& expected = context_[context_.size() - 1 - retired_];
  if (entry.u.id() != expected.u) {
    throw InvariantViolation("backward step out of order");
  }
  ++retired_;
  for (auto it = live_.begin(); it != live_.end(); ++it) {
    if (it->same_record(entry.u)) {
      live_.erase(it);
      break;
    }
  }
  check_pending_adjoints();
}

void GhostInvariantChecker::check_forward_values() {
  // Every vertex created so far must hold the value of its definition's full
  // unfolding under the base environment.
  for (const Vertex& v : all_) {
    const SymPtr unfolding = fill(context_, v.id());
    const Value expected = eval_env(unfolding, ops_, base_env_);
    if (!ops_.equiv(v.value(), expected)) {
      throw InvariantViolation(
          "forward value disagrees with its definition's unfolding");
    }
    ++checks_;
  }
}

void GhostInvariantChecker::check_pending_adjoints() {
  // The operations already consumed by the backward pass are exactly the
  // last `retired_` bindings; re-expand the root through that suffix. What
  // remains is a program over the pending names (and the input), evaluated
  // under the base environment extended by the pending prefix.
  const std::span<const Binding> whole(context_);
  const SymPtr remaining = fill(whole.last(retired_), root_id_);
  const Env pending_env =
      extend_env(base_env_, whole.first(context_.size() - retired_), ops_);
  for (const Vertex& v : live_) {
    const SymPtr formula = partial_derivative(remaining, v.id());
    const Value expected = eval_env(formula, ops_, pending_env);
    if (!ops_.equiv(v.adjoint(), expected)) {
      throw InvariantViolation(
          "adjoint disagrees with the symbolic derivative after " +
          std::to_string(retired_) + " backward step(s)");
    }
    ++checks_;
  }
}

std::size_t check_tape_invariants(const Expression& e, const SemiringOps& ops,
                                  const Value& at) {
  GhostInvariantChecker checker(ops, at);
  detail::run_tape_diff(e, ops, at, &checker);
  return checker.checks_performed();
}

std::size_t check_handler_invariants(const Expression& e,
                                     const SemiringOps& ops,
                                     const Value& at) {
  GhostInvariantChecker checker(ops, at);
  detail::run_handler_diff(e, ops, at, &checker);
  return checker.checks_performed();
}

}  // namespace tad::ad

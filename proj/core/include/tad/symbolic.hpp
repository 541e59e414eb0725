#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tad/semiring.hpp"
#include "tad/value.hpp"
#include "tad/varid.hpp"

namespace tad {

enum class OpKind : std::uint8_t { add, mul };

class SymExpr;
using SymPtr = std::shared_ptr<const SymExpr>;

/// An immutable expression tree over a semiring signature: variables, the
/// constants 0 and 1, and binary add/mul nodes. Subtrees are shared freely
/// through SymPtr; every observer is pure. This is the syntactic ground
/// truth the numeric engines are tested against.
class SymExpr {
 public:
  enum class Kind : std::uint8_t { zero, one, leaf, node };

  static const SymPtr& zero();
  static const SymPtr& one();
  static SymPtr leaf(VarId id);
  static SymPtr node(OpKind op, SymPtr left, SymPtr right);

  Kind kind() const noexcept { return kind_; }
  VarId id() const;             // pre: kind() == leaf
  OpKind op() const;            // pre: kind() == node
  const SymPtr& left() const;   // pre: kind() == node
  const SymPtr& right() const;  // pre: kind() == node

 private:
  SymExpr(Kind kind, VarId id, OpKind op, SymPtr left, SymPtr right)
      : kind_(kind), op_(op), id_(id),
        left_(std::move(left)), right_(std::move(right)) {}

  Kind kind_;
  OpKind op_{OpKind::add};
  VarId id_{VarId::input()};
  SymPtr left_;
  SymPtr right_;
};

/// Deep structural equality (with a shared-subtree fast path).
bool structurally_equal(const SymPtr& a, const SymPtr& b);

/// Number of distinct internal nodes reachable from the root, counting a
/// shared subtree once (pointer identity).
std::size_t shared_node_count(const SymPtr& e);

/// A total environment: finitely many explicit bindings over a default value
/// returned for every other identifier.
class Env {
 public:
  explicit Env(Value default_value) : default_(std::move(default_value)) {}

  Env& bind(VarId id, Value v) {
    table_.insert_or_assign(id, std::move(v));
    return *this;
  }

  const Value& lookup(VarId id) const {
    auto it = table_.find(id);
    return it == table_.end() ? default_ : it->second;
  }

  const Value& default_value() const noexcept { return default_; }

 private:
  std::map<VarId, Value> table_;
  Value default_;
};

/// One definition in a straight-line program: u := a op b. Operands refer to
/// earlier definitions or to leaves.
struct Binding {
  VarId u;
  OpKind op;
  VarId a;
  VarId b;
};

/// A straight-line program as an ordered list of bindings; index 0 is the
/// earliest (leftmost) definition.
using Context = std::vector<Binding>;

/// Evaluate a tree under a dictionary and an environment for its leaves.
/// Children are evaluated left to right, exactly once each.
Value eval_env(const SymPtr& e, const SemiringOps& ops, const Env& env);

/// The purely syntactic partial derivative with respect to x. No
/// simplification is performed: constants differentiate to 0, the matching
/// leaf to 1, sums to sums, and products by the product rule, so
/// d(x*x)/dx = ((1*x)+(x*1)) exactly.
SymPtr partial_derivative(const SymPtr& e, VarId x);

/// partial_derivative with respect to the distinguished input variable.
/// Rejects (ContractViolation) trees mentioning any other variable.
SymPtr derivative(const SymPtr& e);

/// The set of variables occurring in e.
std::set<VarId> vars(const SymPtr& e);

/// Decides provable equality: whether the semiring laws alone force a and b
/// to denote the same value in every model. Implemented by evaluating both
/// trees into the polynomial normal form, one indeterminate per variable.
bool equiv_free(const SymPtr& a, const SymPtr& b);

/// Replace every leaf by its image under `mapping`. Every variable of e must
/// be mapped (ContractViolation otherwise).
SymPtr substitute(const SymPtr& e, const std::map<VarId, SymPtr>& mapping);

/// Unfold a straight-line program into the tree computing y: walking the
/// context right to left, the first definition of y expands into a node
/// whose operand trees are obtained from the remaining prefix. An undefined
/// y yields its leaf.
SymPtr fill(std::span<const Binding> context, VarId y);

/// Extend an environment with one entry per definition of the context: each
/// defined name maps to the value of its unfolding under the base
/// environment. Undefined names keep their base meaning.
Env extend_env(const Env& env, std::span<const Binding> context,
               const SemiringOps& ops);

/// Both sides of the chain-rule identity for substitution, evaluated under
/// `ops`:
///   lhs = d(e[f])/dj at theta
///   rhs = sum over i in vars(e) of
///         (de/di at (i -> f(i) at theta)) * (df(i)/dj at theta)
/// The caller asserts equivalence; returning both sides keeps the oracle
/// independent of any one notion of equality.
std::pair<Value, Value> chain_rule_residual(
    const SymPtr& e, const std::map<VarId, SymPtr>& f, const Env& theta,
    VarId j, const SemiringOps& ops);

/// Both sides of the chain-rule identity for moving one binding b across the
/// left end of a straight-line suffix k2, differentiating with respect to x
/// (precondition: x is not the name bound by b):
///   lhs = d(fill(b;k2, y))/dx          at extend_env(env, k1)
///   rhs = d(fill(k2, y))/dx            at extend_env(env, k1;b)
///       + d(fill(k2, y))/du            at extend_env(env, k1;b)
///         * d(a op b)/dx               at extend_env(env, k1)
std::pair<Value, Value> left_end_chain_rule_residual(
    std::span<const Binding> k1, const Binding& b,
    std::span<const Binding> k2, VarId y, VarId x, const Env& env,
    const SemiringOps& ops);

/// Canonical text: fully parenthesized infix with atoms `x` (the input
/// variable), `0`, and `1`; e.g. ((1*x)+(x*1)). Foreign variables render as
/// `v<id>` for diagnostics.
std::string render(const SymPtr& e);

}  // namespace tad

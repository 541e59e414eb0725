#include "tad/symbolic.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "tad/errors.hpp"
#include "tad/polynomial.hpp"

namespace tad {

const SymPtr& SymExpr::zero() {
  static const SymPtr instance(
      new SymExpr(Kind::zero, VarId::input(), OpKind::add, nullptr, nullptr));
  return instance;
}

const SymPtr& SymExpr::one() {
  static const SymPtr instance(
      new SymExpr(Kind::one, VarId::input(), OpKind::add, nullptr, nullptr));
  return instance;
}

SymPtr SymExpr::leaf(VarId id) {
  return SymPtr(new SymExpr(Kind::leaf, id, OpKind::add, nullptr, nullptr));
}

SymPtr SymExpr::node(OpKind op, SymPtr left, SymPtr right) {
  if (!left || !right) {
    throw ContractViolation("expression node requires two operands");
  }
  return SymPtr(new SymExpr(Kind::node, VarId::input(), op, std::move(left),
                            std::move(right)));
}

VarId SymExpr::id() const {
  if (kind_ != Kind::leaf) {
    throw ContractViolation("id() called on a non-leaf expression");
  }
  return id_;
}

OpKind SymExpr::op() const {
  if (kind_ != Kind::node) {
    throw ContractViolation("op() called on a non-node expression");
  }
  return op_;
}

const SymPtr& SymExpr::left() const {
  if (kind_ != Kind::node) {
    throw ContractViolation("left() called on a non-node expression");
  }
  return left_;
}

const SymPtr& SymExpr::right() const {
  if (kind_ != Kind::node) {
    throw ContractViolation("right() called on a non-node expression");
  }
  return right_;
}

bool structurally_equal(const SymPtr& a, const SymPtr& b) {
  if (a.get() == b.get()) {
    return true;
  }
  if (!a || !b || a->kind() != b->kind()) {
    return false;
  }
  switch (a->kind()) {
    case SymExpr::Kind::zero:
    case SymExpr::Kind::one:
      return true;
    case SymExpr::Kind::leaf:
      return a->id() == b->id();
    case SymExpr::Kind::node:
      return a->op() == b->op() && structurally_equal(a->left(), b->left()) &&
             structurally_equal(a->right(), b->right());
  }
  return false;
}

namespace {

void count_nodes(const SymPtr& e, std::unordered_set<const SymExpr*>& seen) {
  if (e->kind() != SymExpr::Kind::node || !seen.insert(e.get()).second) {
    return;
  }
  count_nodes(e->left(), seen);
  count_nodes(e->right(), seen);
}

}  // namespace

std::size_t shared_node_count(const SymPtr& e) {
  std::unordered_set<const SymExpr*> seen;
  count_nodes(e, seen);
  return seen.size();
}

Value eval_env(const SymPtr& e, const SemiringOps& ops, const Env& env) {
  switch (e->kind()) {
    case SymExpr::Kind::zero:
      return ops.zero;
    case SymExpr::Kind::one:
      return ops.one;
    case SymExpr::Kind::leaf:
      return env.lookup(e->id());
    case SymExpr::Kind::node: {
      Value left = eval_env(e->left(), ops, env);
      Value right = eval_env(e->right(), ops, env);
      return e->op() == OpKind::add ? ops.add(left, right)
                                    : ops.mul(left, right);
    }
  }
  throw ContractViolation("corrupt expression kind");
}

SymPtr partial_derivative(const SymPtr& e, VarId x) {
  switch (e->kind()) {
    case SymExpr::Kind::zero:
    case SymExpr::Kind::one:
      return SymExpr::zero();
    case SymExpr::Kind::leaf:
      return e->id() == x ? SymExpr::one() : SymExpr::zero();
    case SymExpr::Kind::node: {
      SymPtr dl = partial_derivative(e->left(), x);
      SymPtr dr = partial_derivative(e->right(), x);
      if (e->op() == OpKind::add) {
        return SymExpr::node(OpKind::add, std::move(dl), std::move(dr));
      }
      return SymExpr::node(
          OpKind::add, SymExpr::node(OpKind::mul, std::move(dl), e->right()),
          SymExpr::node(OpKind::mul, e->left(), std::move(dr)));
    }
  }
  throw ContractViolation("corrupt expression kind");
}

SymPtr derivative(const SymPtr& e) {
  for (VarId v : vars(e)) {
    if (v != VarId::input()) {
      throw ContractViolation(
          "derivative() requires a single-variable expression");
    }
  }
  return partial_derivative(e, VarId::input());
}

namespace {

void collect_vars(const SymPtr& e, std::set<VarId>& out,
                  std::unordered_set<const SymExpr*>& seen) {
  if (!seen.insert(e.get()).second) {
    return;
  }
  switch (e->kind()) {
    case SymExpr::Kind::zero:
    case SymExpr::Kind::one:
      return;
    case SymExpr::Kind::leaf:
      out.insert(e->id());
      return;
    case SymExpr::Kind::node:
      collect_vars(e->left(), out, seen);
      collect_vars(e->right(), out, seen);
      return;
  }
}

}  // namespace

std::set<VarId> vars(const SymPtr& e) {
  std::set<VarId> out;
  std::unordered_set<const SymExpr*> seen;
  collect_vars(e, out, seen);
  return out;
}

namespace {

/// Polynomial normal form, memoized on subtree identity so heavily shared
/// trees cost work proportional to their distinct nodes.
const Polynomial& normal_form(
    const SymPtr& e, std::unordered_map<const SymExpr*, Polynomial>& memo) {
  auto it = memo.find(e.get());
  if (it != memo.end()) {
    return it->second;
  }
  Polynomial result;
  switch (e->kind()) {
    case SymExpr::Kind::zero:
      break;
    case SymExpr::Kind::one:
      result = Polynomial::constant(1);
      break;
    case SymExpr::Kind::leaf:
      result = Polynomial::variable(e->id());
      break;
    case SymExpr::Kind::node: {
      const Polynomial& left = normal_form(e->left(), memo);
      const Polynomial& right = normal_form(e->right(), memo);
      result = e->op() == OpKind::add ? left.plus(right) : left.times(right);
      break;
    }
  }
  return memo.emplace(e.get(), std::move(result)).first->second;
}

}  // namespace

bool equiv_free(const SymPtr& a, const SymPtr& b) {
  std::unordered_map<const SymExpr*, Polynomial> memo;
  return normal_form(a, memo) == normal_form(b, memo);
}

namespace {

SymPtr substitute_memo(const SymPtr& e,
                       const std::map<VarId, SymPtr>& mapping,
                       std::unordered_map<const SymExpr*, SymPtr>& memo) {
  auto it = memo.find(e.get());
  if (it != memo.end()) {
    return it->second;
  }
  SymPtr result;
  switch (e->kind()) {
    case SymExpr::Kind::zero:
    case SymExpr::Kind::one:
      result = e;
      break;
    case SymExpr::Kind::leaf: {
      auto entry = mapping.find(e->id());
      if (entry == mapping.end()) {
        throw ContractViolation("substitute() must map every variable");
      }
      result = entry->second;
      break;
    }
    case SymExpr::Kind::node:
      result = SymExpr::node(e->op(),
                             substitute_memo(e->left(), mapping, memo),
                             substitute_memo(e->right(), mapping, memo));
      break;
  }
  memo.emplace(e.get(), result);
  return result;
}

}  // namespace

SymPtr substitute(const SymPtr& e, const std::map<VarId, SymPtr>& mapping) {
  std::unordered_map<const SymExpr*, SymPtr> memo;
  return substitute_memo(e, mapping, memo);
}

SymPtr fill(std::span<const Binding> context, VarId y) {
  if (context.empty()) {
    return SymExpr::leaf(y);
  }
  const Binding& last = context.back();
  auto rest = context.first(context.size() - 1);
  if (last.u == y) {
    return SymExpr::node(last.op, fill(rest, last.a), fill(rest, last.b));
  }
  return fill(rest, y);
}

Env extend_env(const Env& env, std::span<const Binding> context,
               const SemiringOps& ops) {
  // Left to right, each definition is evaluated under the environment built
  // so far; for a straight-line context (operands refer only to earlier
  // names) this equals evaluating each name's full unfolding under `env`.
  Env out = env;
  for (const Binding& b : context) {
    Value left = out.lookup(b.a);
    Value right = out.lookup(b.b);
    out.bind(b.u, b.op == OpKind::add ? ops.add(left, right)
                                      : ops.mul(left, right));
  }
  return out;
}

std::pair<Value, Value> chain_rule_residual(
    const SymPtr& e, const std::map<VarId, SymPtr>& f, const Env& theta,
    VarId j, const SemiringOps& ops) {
  Value lhs = eval_env(partial_derivative(substitute(e, f), j), ops, theta);

  Env pushed(theta.default_value());
  const std::set<VarId> names = vars(e);
  for (VarId i : names) {
    pushed.bind(i, eval_env(f.at(i), ops, theta));
  }

  Value rhs = ops.zero;
  for (VarId i : names) {
    Value outer = eval_env(partial_derivative(e, i), ops, pushed);
    Value inner = eval_env(partial_derivative(f.at(i), j), ops, theta);
    rhs = ops.add(rhs, ops.mul(outer, inner));
  }
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Value, Value> left_end_chain_rule_residual(
    std::span<const Binding> k1, const Binding& b,
    std::span<const Binding> k2, VarId y, VarId x, const Env& env,
    const SemiringOps& ops) {
  if (x == b.u) {
    throw ContractViolation(
        "left-end chain rule differentiates with respect to a variable "
        "other than the one being bound");
  }

  Context with_b;
  with_b.reserve(k2.size() + 1);
  with_b.push_back(b);
  with_b.insert(with_b.end(), k2.begin(), k2.end());

  Context k1_b;
  k1_b.reserve(k1.size() + 1);
  k1_b.insert(k1_b.end(), k1.begin(), k1.end());
  k1_b.push_back(b);

  const Env before = extend_env(env, k1, ops);
  const Env after = extend_env(env, k1_b, ops);

  Value lhs = eval_env(partial_derivative(fill(with_b, y), x), ops, before);

  const SymPtr rest = fill(k2, y);
  Value direct = eval_env(partial_derivative(rest, x), ops, after);
  Value through = eval_env(partial_derivative(rest, b.u), ops, after);
  const SymPtr bound =
      SymExpr::node(b.op, SymExpr::leaf(b.a), SymExpr::leaf(b.b));
  Value step = eval_env(partial_derivative(bound, x), ops, before);
  Value rhs = ops.add(direct, ops.mul(through, step));

  return {std::move(lhs), std::move(rhs)};
}

namespace {

void render_into(const SymPtr& e, std::string& out) {
  switch (e->kind()) {
    case SymExpr::Kind::zero:
      out += '0';
      return;
    case SymExpr::Kind::one:
      out += '1';
      return;
    case SymExpr::Kind::leaf:
      if (e->id() == VarId::input()) {
        out += 'x';
      } else {
        out += 'v';
        out += std::to_string(e->id().raw());
      }
      return;
    case SymExpr::Kind::node:
      out += '(';
      render_into(e->left(), out);
      out += e->op() == OpKind::add ? '+' : '*';
      render_into(e->right(), out);
      out += ')';
      return;
  }
  throw ContractViolation("corrupt expression kind");
}

}  // namespace

std::string render(const SymPtr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

}  // namespace tad

#include "tad/expr.hpp"

#include <memory>
#include <utility>

#include "tad/errors.hpp"
#include "tad/varid.hpp"

namespace tad {

struct Expression::Impl {
  Body body;
};

Expression::Expression(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

Expression Expression::from_body(Body body) {
  if (!body) {
    throw ContractViolation("a program needs a body");
  }
  return Expression(std::make_shared<const Impl>(Impl{std::move(body)}));
}

Value Expression::evaluate(const SemiringOps& ops, const Value& x) const {
  return impl_->body(ops, x);
}

Expression from_ast(SymPtr tree) {
  if (!tree) {
    throw ContractViolation("from_ast() requires a tree");
  }
  for (VarId v : vars(tree)) {
    if (v != VarId::input()) {
      throw ContractViolation(
          "from_ast() accepts only the distinguished input variable");
    }
  }
  return Expression::from_body(
      [tree = std::move(tree)](const SemiringOps& ops, const Value& x) {
        Env env(ops.zero);
        env.bind(VarId::input(), x);
        return eval_env(tree, ops, env);
      });
}

SymPtr reify(const Expression& e) {
  const SemiringOps trees = semiring::syntax_trees();
  return e.evaluate(trees, Value::of(SymExpr::leaf(VarId::input())))
      .as<SymPtr>();
}

std::size_t operation_count(const Expression& e) {
  auto counter = std::make_shared<std::size_t>(0);
  SemiringOps ops = semiring::naturals();
  const auto add = ops.add;
  const auto mul = ops.mul;
  ops.add = [counter, add](const Value& a, const Value& b) {
    ++*counter;
    return add(a, b);
  };
  ops.mul = [counter, mul](const Value& a, const Value& b) {
    ++*counter;
    return mul(a, b);
  };
  e.evaluate(ops, ops.one);
  return *counter;
}

Expression cube() {
  return Expression::from_body([](const SemiringOps& ops, const Value& x) {
    Value s = ops.add(x, ops.one);
    return ops.mul(ops.mul(s, s), s);
  });
}

Expression monomial(unsigned exponent) {
  return Expression::from_body(
      [exponent](const SemiringOps& ops, const Value& x) {
        Value acc = ops.one;
        Value base = x;
        unsigned k = exponent;
        while (k > 0) {
          if (k % 2 == 1) {
            acc = ops.mul(base, acc);
          }
          base = ops.mul(base, base);
          k >>= 1;
        }
        return acc;
      });
}

}  // namespace tad

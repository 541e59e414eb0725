#include "tad/forward_diff.hpp"

#include <utility>

namespace tad::ad {

SemiringOps dual_ops(const SemiringOps& base) {
  SemiringOps ops;
  ops.name = "dual(" + base.name + ")";
  ops.zero = Value::of(Dual{base.zero, base.zero});
  ops.one = Value::of(Dual{base.one, base.zero});
  ops.add = [base](const Value& a, const Value& b) {
    const Dual& x = a.as<Dual>();
    const Dual& y = b.as<Dual>();
    return Value::of(Dual{base.add(x.primal, y.primal),
                          base.add(x.tangent, y.tangent)});
  };
  ops.mul = [base](const Value& a, const Value& b) {
    const Dual& x = a.as<Dual>();
    const Dual& y = b.as<Dual>();
    return Value::of(Dual{base.mul(x.primal, y.primal),
                          base.add(base.mul(x.tangent, y.primal),
                                   base.mul(x.primal, y.tangent))});
  };
  ops.equiv = [base](const Value& a, const Value& b) {
    const Dual& x = a.as<Dual>();
    const Dual& y = b.as<Dual>();
    return base.equiv(x.primal, y.primal) &&
           base.equiv(x.tangent, y.tangent);
  };
  return ops;
}

Expression diff_forward(const Expression& e) {
  return Expression::from_body(
      [e](const SemiringOps& ops, const Value& x) {
        const SemiringOps duals = dual_ops(ops);
        Value result = e.evaluate(duals, Value::of(Dual{x, ops.one}));
        return result.as<Dual>().tangent;
      });
}

}  // namespace tad::ad

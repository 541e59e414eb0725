#include "tad/semiring.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#include "tad/natural.hpp"
#include "tad/polynomial.hpp"
#include "tad/symbolic.hpp"

namespace tad::semiring {

SemiringOps naturals() {
  SemiringOps ops;
  ops.name = "naturals";
  ops.zero = Value::of(Natural(0));
  ops.one = Value::of(Natural(1));
  ops.add = [](const Value& a, const Value& b) {
    return Value::of(Natural(a.as<Natural>() + b.as<Natural>()));
  };
  ops.mul = [](const Value& a, const Value& b) {
    return Value::of(Natural(a.as<Natural>() * b.as<Natural>()));
  };
  ops.equiv = [](const Value& a, const Value& b) {
    return a.as<Natural>() == b.as<Natural>();
  };
  return ops;
}

SemiringOps reals(double relative_tolerance) {
  SemiringOps ops;
  ops.name = "reals";
  ops.zero = Value::of(0.0);
  ops.one = Value::of(1.0);
  ops.add = [](const Value& a, const Value& b) {
    return Value::of(a.as<double>() + b.as<double>());
  };
  ops.mul = [](const Value& a, const Value& b) {
    return Value::of(a.as<double>() * b.as<double>());
  };
  ops.equiv = [relative_tolerance](const Value& a, const Value& b) {
    const double x = a.as<double>();
    const double y = b.as<double>();
    const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    return std::fabs(x - y) <= relative_tolerance * scale;
  };
  return ops;
}

SemiringOps polynomials() {
  SemiringOps ops;
  ops.name = "polynomials";
  ops.zero = Value::of(Polynomial{});
  ops.one = Value::of(Polynomial::constant(1));
  ops.add = [](const Value& a, const Value& b) {
    return Value::of(a.as<Polynomial>().plus(b.as<Polynomial>()));
  };
  ops.mul = [](const Value& a, const Value& b) {
    return Value::of(a.as<Polynomial>().times(b.as<Polynomial>()));
  };
  ops.equiv = [](const Value& a, const Value& b) {
    return a.as<Polynomial>() == b.as<Polynomial>();
  };
  return ops;
}

SemiringOps syntax_trees() {
  SemiringOps ops;
  ops.name = "syntax_trees";
  ops.zero = Value::of(SymExpr::zero());
  ops.one = Value::of(SymExpr::one());
  ops.add = [](const Value& a, const Value& b) {
    return Value::of(SymExpr::node(OpKind::add, a.as<SymPtr>(),
                                   b.as<SymPtr>()));
  };
  ops.mul = [](const Value& a, const Value& b) {
    return Value::of(SymExpr::node(OpKind::mul, a.as<SymPtr>(),
                                   b.as<SymPtr>()));
  };
  ops.equiv = [](const Value& a, const Value& b) {
    return equiv_free(a.as<SymPtr>(), b.as<SymPtr>());
  };
  return ops;
}

bool axioms_hold(const SemiringOps& ops, std::span<const Value> samples) {
  const auto& eq = ops.equiv;
  const auto& add = ops.add;
  const auto& mul = ops.mul;

  for (const Value& a : samples) {
    if (!eq(a, a)) return false;                      // reflexivity
    if (!eq(add(ops.zero, a), a)) return false;       // 0 + a = a
    if (!eq(add(a, ops.zero), a)) return false;       // a + 0 = a
    if (!eq(mul(ops.one, a), a)) return false;        // 1 * a = a
    if (!eq(mul(a, ops.one), a)) return false;        // a * 1 = a
    if (!eq(mul(ops.zero, a), ops.zero)) return false;  // 0 * a = 0
    if (!eq(mul(a, ops.zero), ops.zero)) return false;  // a * 0 = 0
  }

  for (const Value& a : samples) {
    for (const Value& b : samples) {
      if (eq(a, b) != eq(b, a)) return false;  // symmetry
      if (!eq(add(a, b), add(b, a))) return false;  // + commutes
      if (!eq(mul(a, b), mul(b, a))) return false;  // * commutes
    }
  }

  for (const Value& a : samples) {
    for (const Value& b : samples) {
      for (const Value& c : samples) {
        if (eq(a, b) && eq(b, c) && !eq(a, c)) return false;  // transitivity
        if (eq(a, b)) {  // congruence
          if (!eq(add(a, c), add(b, c))) return false;
          if (!eq(mul(a, c), mul(b, c))) return false;
        }
        if (!eq(add(add(a, b), c), add(a, add(b, c)))) return false;
        if (!eq(mul(mul(a, b), c), mul(a, mul(b, c)))) return false;
        if (!eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))) return false;
        if (!eq(mul(add(a, b), c), add(mul(a, c), mul(b, c)))) return false;
      }
    }
  }
  return true;
}

Value nat_embed(const SemiringOps& ops, std::uint64_t n) {
  if (n == 0) {
    return ops.zero;
  }
  if (n == 1) {
    return ops.one;
  }
  Value half = nat_embed(ops, n / 2);
  Value doubled = ops.add(half, half);
  return (n % 2 == 0) ? doubled : ops.add(doubled, ops.one);
}

}  // namespace tad::semiring

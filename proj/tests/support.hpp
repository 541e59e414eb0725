#pragma once
// Shared fixtures for the test suites: a deterministic expression corpus,
// sample values for each semiring carrier, and randomized instance
// generators for the two chain-rule identities.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "tad/expr.hpp"
#include "tad/forward_diff.hpp"
#include "tad/natural.hpp"
#include "tad/polynomial.hpp"
#include "tad/semiring.hpp"
#include "tad/symbolic.hpp"
#include "tad/value.hpp"
#include "tad/varid.hpp"

namespace tad::testing {

inline Value nat(long v) { return Value::of(Natural(v)); }
inline Value re(double v) { return Value::of(v); }

// ---------------------------------------------------------------------------
// Deterministic pseudo-random trees over {x, 0, 1, +, *}.

inline SymPtr random_input_tree(std::mt19937_64& rng, unsigned depth) {
  std::uniform_int_distribution<int> percent(0, 99);
  // Branch eagerly near the root so the corpus contains genuinely deep
  // trees, then taper off so expected sizes stay small.
  const int branch_chance = depth == 0 ? 0 : (depth >= 6 ? 80 : 50);
  if (percent(rng) >= branch_chance) {
    const int atom = percent(rng);
    if (atom < 56) return SymExpr::leaf(VarId::input());
    if (atom < 82) return SymExpr::one();
    return SymExpr::zero();
  }
  const OpKind op = percent(rng) < 50 ? OpKind::add : OpKind::mul;
  SymPtr left = random_input_tree(rng, depth - 1);
  SymPtr right = random_input_tree(rng, depth - 1);
  return SymExpr::node(op, std::move(left), std::move(right));
}

/// Alternating products and sums down a left spine: guaranteed depth 8.
inline SymPtr deep_spine_tree() {
  SymPtr t = SymExpr::leaf(VarId::input());
  for (int level = 0; level < 8; ++level) {
    const SymPtr rhs = level % 3 == 0 ? SymExpr::one()
                                      : SymExpr::leaf(VarId::input());
    t = SymExpr::node(level % 2 == 0 ? OpKind::mul : OpKind::add, t, rhs);
  }
  return t;
}

/// Atoms, a few handwritten shapes, one guaranteed-deep spine, and twenty
/// seeded random trees of depth at most eight.
inline std::vector<SymPtr> tree_corpus() {
  const SymPtr x = SymExpr::leaf(VarId::input());
  std::vector<SymPtr> trees = {
      SymExpr::zero(),
      SymExpr::one(),
      x,
      SymExpr::node(OpKind::add, x, SymExpr::one()),
      SymExpr::node(OpKind::mul, x, x),
      deep_spine_tree(),
  };
  std::mt19937_64 rng(0xC0FFEE5EEDull);
  for (int i = 0; i < 20; ++i) {
    trees.push_back(random_input_tree(rng, 8));
  }
  return trees;
}

/// The full program corpus: the shared cube, every monomial up to x^16, and
/// the tree corpus as straight-line programs.
inline std::vector<Expression> expression_corpus() {
  std::vector<Expression> out;
  out.push_back(cube());
  for (unsigned k = 0; k <= 16; ++k) {
    out.push_back(monomial(k));
  }
  for (const SymPtr& t : tree_corpus()) {
    out.push_back(from_ast(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sample values per carrier, for the algebraic-law checks.

inline std::vector<Value> natural_samples() {
  return {nat(0), nat(1), nat(2), nat(3), nat(7), nat(11), nat(12), nat(30)};
}

inline std::vector<Value> real_samples() {
  return {re(0.0),  re(1.0),  re(-2.5),       re(3.25),
          re(-7.0), re(10.5), re(1.0 / 3.0),  re(0.125)};
}

inline std::vector<Value> polynomial_samples() {
  const VarId v0 = VarId::input();
  const VarId v1 = VarId::fresh();
  const Polynomial x0 = Polynomial::variable(v0);
  const Polynomial x1 = Polynomial::variable(v1);
  const Polynomial two = Polynomial::constant(Natural(2));
  return {Value::of(Polynomial{}),
          Value::of(Polynomial::constant(Natural(1))),
          Value::of(x0),
          Value::of(x1),
          Value::of(x0.plus(two)),
          Value::of(x0.times(x1).plus(x0)),
          Value::of(x0.plus(x1).times(x0.plus(x1))),
          Value::of(two.times(x1))};
}

inline std::vector<Value> tree_samples() {
  const SymPtr x = SymExpr::leaf(VarId::input());
  return {Value::of(SymExpr::zero()),
          Value::of(SymExpr::one()),
          Value::of(x),
          Value::of(SymExpr::node(OpKind::add, x, SymExpr::one())),
          Value::of(SymExpr::node(OpKind::mul, x, x)),
          Value::of(SymExpr::node(OpKind::mul, x,
                                  SymExpr::node(OpKind::add, SymExpr::one(),
                                                SymExpr::one()))),
          Value::of(SymExpr::node(OpKind::add, SymExpr::zero(), x)),
          Value::of(SymExpr::node(OpKind::mul, SymExpr::one(),
                                  SymExpr::zero()))};
}

/// Pairs base samples into dual numbers (primal from the front, tangent
/// from an offset) so the derived dictionary sees varied components.
inline std::vector<Value> dual_samples(const std::vector<Value>& base) {
  std::vector<Value> out;
  out.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.push_back(Value::of(
        ad::Dual{base[i], base[(i + 3) % base.size()]}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Randomized chain-rule instances (exact arithmetic over the naturals).

inline SymPtr random_tree_over(std::mt19937_64& rng, unsigned depth,
                               const std::vector<VarId>& leaves) {
  std::uniform_int_distribution<int> percent(0, 99);
  if (depth == 0 || percent(rng) < 40) {
    const int atom = percent(rng);
    if (atom < 60) {
      std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
      return SymExpr::leaf(leaves[pick(rng)]);
    }
    return atom < 85 ? SymExpr::one() : SymExpr::zero();
  }
  const OpKind op = percent(rng) < 50 ? OpKind::add : OpKind::mul;
  SymPtr left = random_tree_over(rng, depth - 1, leaves);
  SymPtr right = random_tree_over(rng, depth - 1, leaves);
  return SymExpr::node(op, std::move(left), std::move(right));
}

/// One substitution-identity instance: an expression over two inner
/// variables, images for both over two outer variables, a point, and the
/// outer variable to differentiate by.
struct ChainCase {
  SymPtr e;
  std::map<VarId, SymPtr> f;
  Env theta;
  VarId j;
};

inline ChainCase random_chain_case(std::mt19937_64& rng) {
  const VarId i1 = VarId::fresh();
  const VarId i2 = VarId::fresh();
  const VarId j1 = VarId::fresh();
  const VarId j2 = VarId::fresh();
  std::uniform_int_distribution<int> small(0, 6);
  std::uniform_int_distribution<int> coin(0, 1);

  Env theta(nat(0));
  theta.bind(j1, nat(small(rng)));
  theta.bind(j2, nat(small(rng)));

  std::map<VarId, SymPtr> f;
  f.emplace(i1, random_tree_over(rng, 3, {j1, j2}));
  f.emplace(i2, random_tree_over(rng, 3, {j1, j2}));

  return ChainCase{random_tree_over(rng, 5, {i1, i2}), std::move(f),
                   std::move(theta), coin(rng) == 0 ? j1 : j2};
}

/// One binding-motion instance: a straight-line program split as
/// k1 ; b ; k2, a target name y, and a differentiation variable x chosen by
/// sharing pattern — 1: x is neither operand of b; 2: exactly one operand;
/// 3: both operands (the aliased case whose sum rule shows the literal
/// 1 + 1).
struct LeftEndCase {
  Context k1;
  Binding b;
  Context k2;
  VarId y;
  VarId x;
  Env env;
};

inline LeftEndCase random_left_end_case(std::mt19937_64& rng,
                                        int sharing_pattern) {
  std::uniform_int_distribution<int> value(1, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  auto pick = [&rng](const std::vector<VarId>& pool) {
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng)];
  };
  auto random_op = [&rng, &coin]() {
    return coin(rng) == 0 ? OpKind::add : OpKind::mul;
  };

  const std::vector<VarId> leaves = {VarId::fresh(), VarId::fresh(),
                                     VarId::fresh()};
  Env env(nat(0));
  for (VarId leaf : leaves) {
    env.bind(leaf, nat(value(rng)));
  }

  std::vector<VarId> available = leaves;
  Context k1;
  std::uniform_int_distribution<int> prefix_len(0, 3);
  for (int i = prefix_len(rng); i > 0; --i) {
    const VarId u = VarId::fresh();
    k1.push_back(Binding{u, random_op(), pick(available), pick(available)});
    available.push_back(u);
  }

  VarId x = pick(available);
  VarId opa = x;
  VarId opb = x;
  if (sharing_pattern == 1) {
    opa = pick(available);
    opb = pick(available);
    std::vector<VarId> rest;
    for (VarId v : available) {
      if (v != opa && v != opb) rest.push_back(v);
    }
    x = pick(rest);  // nonempty: available has >= 3 names
  } else if (sharing_pattern == 2) {
    std::vector<VarId> others;
    for (VarId v : available) {
      if (v != x) others.push_back(v);
    }
    const VarId other = pick(others);
    if (coin(rng) == 0) {
      opb = other;
    } else {
      opa = other;
    }
  }

  const Binding b{VarId::fresh(), random_op(), opa, opb};
  available.push_back(b.u);

  Context k2;
  std::uniform_int_distribution<int> suffix_len(0, 4);
  for (int i = suffix_len(rng); i > 0; --i) {
    const VarId u = VarId::fresh();
    k2.push_back(Binding{u, random_op(), pick(available), pick(available)});
    available.push_back(u);
  }

  std::uniform_int_distribution<int> ten(0, 9);
  const VarId last_defined = k2.empty() ? b.u : k2.back().u;
  const VarId y = ten(rng) < 7 ? last_defined : pick(available);
  return LeftEndCase{std::move(k1), b, std::move(k2), y, x, std::move(env)};
}

}  // namespace tad::testing

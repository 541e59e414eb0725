#include <doctest.h>

#include <bit>
#include <cstddef>
#include <vector>

#include "support.hpp"
#include "tad/errors.hpp"
#include "tad/expr.hpp"
#include "tad/natural.hpp"
#include "tad/semiring.hpp"
#include "tad/symbolic.hpp"

using namespace tad;
using namespace tad::testing;

namespace {

Value eval_tree(const SymPtr& tree, const SemiringOps& ops, const Value& x) {
  Env env(ops.zero);
  env.bind(VarId::input(), x);
  return eval_env(tree, ops, env);
}

// One squaring per loop round plus one accumulator multiply per set bit.
std::size_t expected_monomial_ops(unsigned k) {
  if (k == 0) return 0;
  return std::bit_width(k) + static_cast<unsigned>(std::popcount(k));
}

}  // namespace

TEST_CASE("expr: the shared cube evaluates everywhere") {
  const Expression e = cube();
  CHECK(e.evaluate(semiring::naturals(), nat(4)).as<Natural>() ==
        Natural(125));
  CHECK(e.evaluate(semiring::reals(), re(4.0)).as<double>() ==
        doctest::Approx(125.0));
  CHECK(e.evaluate(semiring::reals(), re(-0.5)).as<double>() ==
        doctest::Approx(0.125));
}

TEST_CASE("expr: monomials compute powers under any dictionary") {
  const SemiringOps nats = semiring::naturals();
  for (unsigned k = 0; k <= 16; ++k) {
    for (long r = 0; r <= 4; ++r) {
      Natural expected;
      mpz_pow_ui(expected.get_mpz_t(), Natural(r).get_mpz_t(), k);
      CHECK(monomial(k).evaluate(nats, nat(r)).as<Natural>() == expected);
    }
  }
  CHECK(monomial(5).evaluate(semiring::reals(), re(1.5)).as<double>() ==
        doctest::Approx(7.59375));
}

TEST_CASE("expr: tree programs evaluate like their trees") {
  const SemiringOps nats = semiring::naturals();
  const SemiringOps reals = semiring::reals();
  for (const SymPtr& tree : tree_corpus()) {
    const Expression e = from_ast(tree);
    for (long r : {0L, 1L, 2L, 3L}) {
      CHECK(nats.equiv(e.evaluate(nats, nat(r)), eval_tree(tree, nats, nat(r))));
    }
    for (double r : {0.5, -1.25, 2.0}) {
      CHECK(reals.equiv(e.evaluate(reals, re(r)), eval_tree(tree, reals, re(r))));
    }
  }
}

TEST_CASE("expr: tree programs reject foreign leaves") {
  CHECK_THROWS_AS((void)from_ast(SymExpr::leaf(VarId::fresh())),
                  ContractViolation);
}

TEST_CASE("expr: syntax read-back of the shared cube") {
  CHECK(render(reify(cube())) == "(((x+1)*(x+1))*(x+1))");
}

TEST_CASE("expr: syntax read-back is sound on the corpus") {
  const SemiringOps nats = semiring::naturals();
  const SemiringOps reals = semiring::reals();
  for (const Expression& e : expression_corpus()) {
    const SymPtr tree = reify(e);
    for (long r : {0L, 2L, 3L}) {
      CHECK(nats.equiv(e.evaluate(nats, nat(r)), eval_tree(tree, nats, nat(r))));
    }
    CHECK(reals.equiv(e.evaluate(reals, re(1.75)),
                      eval_tree(tree, reals, re(1.75))));
  }
}

TEST_CASE("expr: read-back of a tree program returns the tree") {
  for (const SymPtr& tree : tree_corpus()) {
    CHECK(structurally_equal(reify(from_ast(tree)), tree));
  }
}

TEST_CASE("expr: operation counts are per construction, dead or shared "
          "included") {
  CHECK(operation_count(cube()) == 3);  // one sum, two products
  for (unsigned k = 0; k <= 16; ++k) {
    CAPTURE(k);
    CHECK(operation_count(monomial(k)) == expected_monomial_ops(k));
  }
  // x^1 still pays the unit multiply and the dead squaring.
  CHECK(operation_count(monomial(1)) == 2);
  CHECK(operation_count(from_ast(SymExpr::one())) == 0);
  CHECK(operation_count(from_ast(SymExpr::leaf(VarId::input()))) == 0);
}

TEST_CASE("expr: squaring keeps read-back size logarithmic") {
  for (unsigned k = 1; k <= 16; ++k) {
    CAPTURE(k);
    const std::size_t bound = 2u * (std::bit_width(k) - 1u) + 1u;
    CHECK(shared_node_count(reify(monomial(k))) <= bound);
  }
  CHECK(shared_node_count(reify(monomial(16))) == 5);
}

TEST_CASE("expr: programs may be evaluated repeatedly and under changing "
          "dictionaries") {
  const Expression e = monomial(3);
  const SemiringOps nats = semiring::naturals();
  CHECK(e.evaluate(nats, nat(2)).as<Natural>() == Natural(8));
  CHECK(e.evaluate(semiring::reals(), re(2.0)).as<double>() ==
        doctest::Approx(8.0));
  CHECK(e.evaluate(nats, nat(3)).as<Natural>() == Natural(27));
}

TEST_CASE("expr: hand-written bodies participate like built programs") {
  const Expression twice_plus_one =
      Expression::from_body([](const SemiringOps& ops, const Value& x) {
        return ops.add(ops.add(x, x), ops.one);
      });
  CHECK(twice_plus_one.evaluate(semiring::naturals(), nat(5)).as<Natural>() ==
        Natural(11));
  CHECK(render(reify(twice_plus_one)) == "((x+x)+1)");
  CHECK(operation_count(twice_plus_one) == 2);
}

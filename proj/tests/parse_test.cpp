#include <doctest.h>

#include <random>
#include <string>

#include "support.hpp"
#include "tad/expr.hpp"
#include "tad/parse.hpp"
#include "tad/symbolic.hpp"

using namespace tad;
using namespace tad::testing;

namespace {

SymPtr x_leaf() { return SymExpr::leaf(VarId::input()); }

void check_rejected(const std::string& text, std::size_t expected_offset) {
  CAPTURE(text);
  try {
    (void)parse_expression(text);
    FAIL("expected a parse error for: " << text);
  } catch (const ParseError& err) {
    CHECK(err.offset() == expected_offset);
  }
}

}  // namespace

TEST_CASE("parse: atoms") {
  CHECK(structurally_equal(parse_expression("x"), x_leaf()));
  CHECK(structurally_equal(parse_expression("0"), SymExpr::zero()));
  CHECK(structurally_equal(parse_expression("1"), SymExpr::one()));
  CHECK(structurally_equal(parse_expression("  x\t "), x_leaf()));
  CHECK(structurally_equal(parse_expression("((x))"), x_leaf()));
}

TEST_CASE("parse: number literals desugar by binary doubling over one") {
  CHECK(render(parse_expression("2")) == "(1+1)");
  CHECK(render(parse_expression("3")) == "((1+1)+1)");
  CHECK(render(parse_expression("5")) == "(((1+1)+(1+1))+1)");
  // The two halves of a doubled literal are one shared subtree.
  CHECK(shared_node_count(parse_expression("5")) == 3);
  CHECK(shared_node_count(parse_expression("16")) == 4);
}

TEST_CASE("parse: precedence and associativity") {
  const SymPtr x = x_leaf();
  CHECK(structurally_equal(
      parse_expression("x+x*x"),
      SymExpr::node(OpKind::add, x, SymExpr::node(OpKind::mul, x, x))));
  CHECK(structurally_equal(
      parse_expression("x*x+x"),
      SymExpr::node(OpKind::add, SymExpr::node(OpKind::mul, x, x), x)));
  CHECK(structurally_equal(
      parse_expression("(x+x)*x"),
      SymExpr::node(OpKind::mul, SymExpr::node(OpKind::add, x, x), x)));
  CHECK(structurally_equal(
      parse_expression("x+x+x"),
      SymExpr::node(OpKind::add, SymExpr::node(OpKind::add, x, x), x)));
  CHECK(structurally_equal(
      parse_expression("x*x*x"),
      SymExpr::node(OpKind::mul, SymExpr::node(OpKind::mul, x, x), x)));
  // ^ binds tighter than *.
  CHECK(structurally_equal(
      parse_expression("x*x^2"),
      SymExpr::node(OpKind::mul, x, parse_expression("x^2"))));
}

TEST_CASE("parse: powers desugar to the fast-exponentiation product "
          "scheme") {
  for (unsigned k = 0; k <= 16; ++k) {
    CAPTURE(k);
    CHECK(structurally_equal(parse_expression("x^" + std::to_string(k)),
                             reify(monomial(k))));
  }
  // Parenthesized bases take powers too.
  CHECK(equiv_free(parse_expression("(x+1)^3"), reify(cube())));
  CHECK(structurally_equal(parse_expression("(x+1)^0"), SymExpr::one()));
}

TEST_CASE("parse: the worked example reads back as the cube") {
  const SymPtr tree = parse_expression("(x+1)*(x+1)*(x+1)");
  CHECK(structurally_equal(tree, reify(cube())));
}

TEST_CASE("parse: malformed input is rejected at the offending byte") {
  check_rejected("", 0);
  check_rejected(")", 0);
  check_rejected("x+", 2);
  check_rejected("x*", 2);
  check_rejected("(x+1", 4);
  check_rejected("x^", 2);
  check_rejected("x^x", 2);
  check_rejected("x^2^3", 3);  // exponents apply to atoms only
  check_rejected("x x", 2);
  check_rejected("2x", 1);
  check_rejected("x+*x", 2);
  check_rejected("y", 0);
  check_rejected("x^99999999999999999999", 2);
}

TEST_CASE("parse: rendering then parsing is the identity on trees") {
  for (const SymPtr& tree : tree_corpus()) {
    CHECK(structurally_equal(parse_expression(render(tree)), tree));
  }
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 100; ++i) {
    const SymPtr tree = random_input_tree(rng, 6);
    CHECK(structurally_equal(parse_expression(render(tree)), tree));
  }
}

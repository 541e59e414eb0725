#include "tad/parse.hpp"

#include <cctype>
#include <cstdint>

#include "tad/varid.hpp"

namespace tad {

namespace {

/// 1 + 1 + ... + 1 (n times) as a tree, built by binary double-and-add so
/// the tree for n has O(log n) distinct nodes (halves are shared).
SymPtr nat_tree(std::uint64_t n) {
  if (n == 0) {
    return SymExpr::zero();
  }
  if (n == 1) {
    return SymExpr::one();
  }
  SymPtr half = nat_tree(n / 2);
  SymPtr doubled = SymExpr::node(OpKind::add, half, half);
  if (n % 2 == 0) {
    return doubled;
  }
  return SymExpr::node(OpKind::add, std::move(doubled), SymExpr::one());
}

/// base^k by the binary fast-exponentiation scheme: square the base each
/// round, fold odd bits into the accumulator. Same operation layout as the
/// exponentiation program, except that the final squaring (whose result the
/// program discards) has no node to build in a tree.
SymPtr pow_tree(SymPtr base, std::uint64_t k) {
  SymPtr acc = SymExpr::one();
  while (k > 0) {
    if (k % 2 == 1) {
      acc = SymExpr::node(OpKind::mul, base, acc);
    }
    if (k > 1) {
      base = SymExpr::node(OpKind::mul, base, base);
    }
    k >>= 1;
  }
  return acc;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SymPtr run() {
    SymPtr e = parse_sum();
    skip_spaces();
    if (pos_ != text_.size()) {
      fail("unexpected character");
    }
    return e;
  }

 private:
  // sum := product ('+' product)*
  SymPtr parse_sum() {
    SymPtr left = parse_product();
    while (next_is('+')) {
      ++pos_;
      left = SymExpr::node(OpKind::add, std::move(left), parse_product());
    }
    return left;
  }

  // product := factor ('*' factor)*
  SymPtr parse_product() {
    SymPtr left = parse_factor();
    while (next_is('*')) {
      ++pos_;
      left = SymExpr::node(OpKind::mul, std::move(left), parse_factor());
    }
    return left;
  }

  // factor := atom ('^' number)?
  SymPtr parse_factor() {
    SymPtr base = parse_atom();
    if (next_is('^')) {
      ++pos_;
      skip_spaces();
      if (pos_ == text_.size() || !is_digit(text_[pos_])) {
        fail("expected a number after '^'");
      }
      return pow_tree(std::move(base), parse_number());
    }
    return base;
  }

  // atom := 'x' | number | '(' sum ')'
  SymPtr parse_atom() {
    skip_spaces();
    if (pos_ == text_.size()) {
      fail("expected an expression");
    }
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return SymExpr::leaf(VarId::input());
    }
    if (is_digit(c)) {
      return nat_tree(parse_number());
    }
    if (c == '(') {
      ++pos_;
      SymPtr inner = parse_sum();
      if (!next_is(')')) {
        fail("expected ')'");
      }
      ++pos_;
      return inner;
    }
    fail("unexpected character");
  }

  std::uint64_t parse_number() {
    skip_spaces();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      const std::uint64_t digit =
          static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) {
        pos_ = start;
        fail("number literal too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  static bool is_digit(char c) {
    return c >= '0' && c <= '9';
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' ||
            text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool next_is(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  [[noreturn]] void fail(const std::string& reason) {
    throw ParseError(reason + " at byte " + std::to_string(pos_), pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SymPtr parse_expression(std::string_view text) {
  return Parser(text).run();
}

}  // namespace tad

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tad/symbolic.hpp"

namespace tad {

/// Rejection of malformed input text, with the byte offset of the first
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parse the surface expression language into a tree:
///
///   expr   := term (('+' term))*
///   term   := factor (('*' factor))*
///   factor := atom ('^' NAT)?
///   atom   := 'x' | NAT | '(' expr ')'
///
/// with the usual precedence (^ over * over +), left association for + and
/// *, and whitespace freely ignored. Number literals desugar into repeated
/// addition of 1 by binary double-and-add (0 and 1 are the constants
/// themselves); `x^k` desugars into the binary fast-exponentiation product
/// scheme, so its node layout matches the monomial program's operations.
/// Exponents apply to atoms only: x^2^3 is malformed, (x^2)^3 is not.
/// Throws ParseError on malformed input.
SymPtr parse_expression(std::string_view text);

}  // namespace tad

#pragma once

#include <stdexcept>
#include <string>

namespace tad {

/// Misuse of an internal algorithmic contract: a value of the wrong kind
/// reached an operation, a one-shot continuation was reused, an effect
/// escaped its intended scope, and so on. The command-line driver maps this
/// family to exit code 3.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A runtime self-check (an executable ghost assertion maintained alongside
/// the reverse-mode engines) observed a state it can prove wrong.
class InvariantViolation : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

}  // namespace tad

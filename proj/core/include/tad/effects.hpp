#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tad/errors.hpp"

namespace tad::effects {

/// An effect was performed with no handler installed around the computation,
/// or an unrecognized request reached a handler that cannot serve it.
class UnhandledEffect : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// A one-shot continuation was resumed a second time (or after it went
/// stale).
class ContinuationConsumed : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

namespace detail {
struct Scope;
struct ContinuationAccess;
}  // namespace detail

/// The suspended rest of a handled computation, up to and including its
/// enclosing handler. One-shot: it may be resumed at most once, and the
/// runtime raises ContinuationConsumed on reuse. Resuming runs the rest of
/// the computation under the same handler (deep semantics).
class Continuation {
 public:
  bool consumed() const noexcept;

 private:
  friend struct detail::ContinuationAccess;

  Continuation(std::shared_ptr<detail::Scope> scope, std::uint64_t token)
      : scope_(std::move(scope)), token_(token) {}

  std::shared_ptr<detail::Scope> scope_;
  std::uint64_t token_ = 0;
};

/// What a `handle` does with its computation: `on_effect` receives each
/// performed payload together with the continuation; `on_return` receives
/// the computation's final result. Both produce the handler-pipeline value
/// that `handle` (or the `resume` that ran them) returns.
struct Handler {
  std::function<std::any(std::any payload, Continuation k)> on_effect;
  std::function<std::any(std::any result)> on_return;
};

/// Run `body` under `handler`. Every effect performed by the body (and not
/// intercepted by a nested handle inside it) is delivered to
/// `handler.on_effect`; when the body runs to completion its result goes to
/// `handler.on_return`. Handler code itself executes outside the handled
/// scope, so effects it performs propagate to the caller's own handler.
std::any handle(std::function<std::any()> body, Handler handler);

/// Send a request to the innermost enclosing handler and suspend until it
/// resumes the continuation; returns the reply. Raises UnhandledEffect when
/// no handler encloses the caller.
std::any perform(std::any payload);

/// Resume a suspended computation with a reply. Returns the handler-pipeline
/// result of the continued run, so code after `resume` executes only once
/// everything downstream has finished — suspended handler frames unwind
/// last-in first-out.
std::any resume(const Continuation& k, std::any reply);

/// Cumulative per-thread runtime counters, for tests and diagnostics.
struct Stats {
  std::uint64_t handles = 0;
  std::uint64_t performs = 0;
  std::uint64_t resumes = 0;
  std::uint64_t returns = 0;
};

Stats stats() noexcept;

/// A five-line scripted dialogue exercising the runtime end to end: a client
/// asks at 7 and then at 2 (strictly in that order), a handler that answers
/// n+1 narrates each query, the client finishes with 3 + 8 = 11, and the
/// suspended handler frames unwind in reverse order. Returned lines, in
/// order:
///   I am queried at 7...
///   I am queried at 2...
///   The client has finished with result 11
///   Earlier, I have been queried at 2...
///   Earlier, I have been queried at 7...
std::vector<std::string> ask_demo();

}  // namespace tad::effects

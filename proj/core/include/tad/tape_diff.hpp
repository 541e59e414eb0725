#pragma once

#include "tad/expr.hpp"
#include "tad/semiring.hpp"
#include "tad/trace.hpp"
#include "tad/value.hpp"
#include "tad/vertex.hpp"

namespace tad::ad {

/// Reverse-mode differentiation via an explicit operation log. The forward
/// pass evaluates `e` on vertices while appending one record per add/mul to
/// a tape; the backward pass seeds the root's adjoint with one and walks the
/// tape last-to-first:
///   u = a + b  propagates  da += du;        db += du
///   u = a * b  propagates  da += du * b;    db += a * du
/// The derivative is the input's adjoint afterwards.
Expression diff_tape(const Expression& e);

/// Number of tape records produced when evaluating `e`'s vertex pass once:
/// exactly one per operation the body performs.
std::size_t tape_length(const Expression& e, const SemiringOps& ops,
                        const Value& at);

/// Run the tape engine at `at` and record the adjoint story.
BackwardTrace backward_trace(const Expression& e, const SemiringOps& ops,
                             const Value& at);

namespace detail {

/// Core of the tape engine with observation hooks; returns the derivative.
/// `observer` may be null.
Value run_tape_diff(const Expression& e, const SemiringOps& ops,
                    const Value& at, ReverseObserver* observer);

}  // namespace detail

}  // namespace tad::ad

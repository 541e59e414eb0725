#pragma once

#include <cstddef>
#include <vector>

#include "tad/expr.hpp"
#include "tad/semiring.hpp"
#include "tad/symbolic.hpp"
#include "tad/trace.hpp"
#include "tad/value.hpp"
#include "tad/varid.hpp"
#include "tad/vertex.hpp"

namespace tad::ad {

/// Requests sent by the handler-based engine: each add/mul the body performs
/// becomes one effect whose payload carries the operand vertices.
struct AddRequest {
  Vertex a;
  Vertex b;
};
struct MulRequest {
  Vertex a;
  Vertex b;
};

/// Reverse-mode differentiation with no explicit operation log and no
/// hand-written backward loop. The body is evaluated on vertices inside an
/// effect handler; every add/mul performs a request instead of computing
/// adjoint bookkeeping inline. The handler creates the result vertex,
/// resumes the (one-shot) continuation with it, and — after that resumption
/// has returned, i.e. after the entire rest of the evaluation — updates the
/// operand adjoints:
///   AddRequest{a, b} with result u:  da += du;      db += du
///   MulRequest{a, b} with result u:  da += du * b;  db += a * du
/// Because each handler frame finishes only after the frames for all later
/// operations have finished, the updates run in exactly reverse operation
/// order; the call stack plays the tape's role. Requests the handler does
/// not recognize are forwarded outward, so dictionaries whose operations
/// perform their own effects still reach their own handlers.
Expression diff_handler(const Expression& e);

/// Number of effects the handler engine performs when differentiating `e`
/// at `at`: exactly one per operation the body performs.
std::size_t handler_effect_count(const Expression& e, const SemiringOps& ops,
                                 const Value& at);

/// Run the handler engine at `at` and record the adjoint story.
BackwardTrace handler_backward_trace(const Expression& e,
                                     const SemiringOps& ops, const Value& at);

/// One audited request/reply exchange between the body and the handler,
/// written in the symbolic language: each operand of a request must mean a
/// known expression (the input, a constant, or an earlier reply), and the
/// reply vertex means exactly the node combining the two.
struct OpProtocolWitness {
  OpKind op;             // which operation was requested
  SymPtr request_left;   // meaning of the left operand vertex
  SymPtr request_right;  // meaning of the right operand vertex
  VarId reply_id;        // identifier of the vertex the body was resumed with
  SymPtr reply;          // = node(op, request_left, request_right)
};

/// Differentiate `e` at `at` while auditing the effect protocol: one witness
/// per performed request, in performance order. A request operand that is
/// neither the input, a constant, nor an earlier reply violates the
/// protocol's precondition (ContractViolation).
std::vector<OpProtocolWitness> protocol_audit(const Expression& e,
                                              const SemiringOps& ops,
                                              const Value& at);

namespace detail {

/// Core of the handler engine with observation hooks; returns the
/// derivative. `observer` may be null.
Value run_handler_diff(const Expression& e, const SemiringOps& ops,
                       const Value& at, ReverseObserver* observer);

}  // namespace detail

}  // namespace tad::ad

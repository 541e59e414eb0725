#include "tad/tape_diff.hpp"

#include <utility>

#include "tad/errors.hpp"
#include "tad/varid.hpp"

namespace tad::ad {

namespace detail {

namespace {

/// Dictionary on graph vertices that records every operation onto a tape.
/// The base dictionary computes the forward values, so any effects it
/// performs happen right here, on the caller's stack, unobstructed.
SemiringOps recording_ops(const SemiringOps& base, Tape& tape,
                          ReverseObserver* observer) {
  SemiringOps ops;
  ops.name = "recording(" + base.name + ")";
  ops.zero = Value::of(Vertex::zero());
  ops.one = Value::of(Vertex::one());

  auto record = [&base, &tape, observer](OpKind op, const Value& a,
                                         const Value& b) {
    const Vertex& va = a.as<Vertex>();
    const Vertex& vb = b.as<Vertex>();
    Value forward = op == OpKind::add
                        ? base.add(vertex_value(va, base),
                                   vertex_value(vb, base))
                        : base.mul(vertex_value(va, base),
                                   vertex_value(vb, base));
    Vertex u =
        Vertex::variable(std::move(forward), base.zero, VarId::fresh());
    tape.push_back(TapeEntry{u, op, va, vb});
    if (observer != nullptr) {
      observer->on_operation(tape.back());
    }
    return Value::of(std::move(u));
  };

  ops.add = [record](const Value& a, const Value& b) {
    return record(OpKind::add, a, b);
  };
  ops.mul = [record](const Value& a, const Value& b) {
    return record(OpKind::mul, a, b);
  };
  ops.equiv = [&base](const Value& a, const Value& b) {
    return base.equiv(vertex_value(a.as<Vertex>(), base),
                      vertex_value(b.as<Vertex>(), base));
  };
  return ops;
}

/// One backward step: fold entry.u's accumulated adjoint into its operands.
void propagate(const TapeEntry& entry, const SemiringOps& ops) {
  const Value du = entry.u.adjoint();
  if (entry.op == OpKind::add) {
    add_to_adjoint(entry.a, du, ops);
    add_to_adjoint(entry.b, du, ops);
  } else {
    add_to_adjoint(entry.a, ops.mul(du, vertex_value(entry.b, ops)), ops);
    add_to_adjoint(entry.b, ops.mul(vertex_value(entry.a, ops), du), ops);
  }
}

}  // namespace

Value run_tape_diff(const Expression& e, const SemiringOps& ops,
                    const Value& at, ReverseObserver* observer) {
  Vertex input = Vertex::variable(at, ops.zero, VarId::fresh());
  if (observer != nullptr) {
    observer->on_input(input);
  }

  Tape tape;
  const SemiringOps recording = recording_ops(ops, tape, observer);
  Value result = e.evaluate(recording, Value::of(input));
  const Vertex& root = result.as<Vertex>();

  add_to_adjoint(root, ops.one, ops);
  if (observer != nullptr) {
    observer->on_seed(root);
  }

  for (auto it = tape.rbegin(); it != tape.rend(); ++it) {
    propagate(*it, ops);
    if (observer != nullptr) {
      observer->on_retire(*it);
    }
  }

  return input.adjoint();
}

}  // namespace detail

Expression diff_tape(const Expression& e) {
  return Expression::from_body([e](const SemiringOps& ops, const Value& x) {
    return detail::run_tape_diff(e, ops, x, nullptr);
  });
}

namespace {

class OperationCounter final : public ReverseObserver {
 public:
  void on_operation(const TapeEntry&) override { ++count_; }
  std::size_t count() const { return count_; }

 private:
  std::size_t count_ = 0;
};

}  // namespace

std::size_t tape_length(const Expression& e, const SemiringOps& ops,
                        const Value& at) {
  OperationCounter counter;
  detail::run_tape_diff(e, ops, at, &counter);
  return counter.count();
}

BackwardTrace backward_trace(const Expression& e, const SemiringOps& ops,
                             const Value& at) {
  TraceRecorder recorder;
  detail::run_tape_diff(e, ops, at, &recorder);
  return recorder.take();
}

}  // namespace tad::ad

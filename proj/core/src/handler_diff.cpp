#include "tad/handler_diff.hpp"

#include <any>
#include <map>
#include <utility>

#include "tad/effects.hpp"
#include "tad/errors.hpp"
#include "tad/varid.hpp"

namespace tad::ad {

namespace detail {

namespace {

/// Dictionary on graph vertices whose operations do no bookkeeping at all:
/// each add/mul simply asks the enclosing handler for the result vertex.
SemiringOps requesting_ops(const SemiringOps& base) {
  SemiringOps ops;
  ops.name = "requesting(" + base.name + ")";
  ops.zero = Value::of(Vertex::zero());
  ops.one = Value::of(Vertex::one());
  ops.add = [](const Value& a, const Value& b) {
    return std::any_cast<Value>(
        effects::perform(AddRequest{a.as<Vertex>(), b.as<Vertex>()}));
  };
  ops.mul = [](const Value& a, const Value& b) {
    return std::any_cast<Value>(
        effects::perform(MulRequest{a.as<Vertex>(), b.as<Vertex>()}));
  };
  ops.equiv = [base](const Value& a, const Value& b) {
    return base.equiv(vertex_value(a.as<Vertex>(), base),
                      vertex_value(b.as<Vertex>(), base));
  };
  return ops;
}

}  // namespace

Value run_handler_diff(const Expression& e, const SemiringOps& ops,
                       const Value& at, ReverseObserver* observer) {
  Vertex input = Vertex::variable(at, ops.zero, VarId::fresh());
  if (observer != nullptr) {
    observer->on_input(input);
  }

  // Serve one operation request: create the result vertex, resume the rest
  // of the evaluation with it, and only after that whole rest has finished
  // fold the result's adjoint back into the operands. Handler frames for
  // later operations are nested deeper and therefore finish earlier, which
  // makes the adjoint updates run in exactly reverse operation order with
  // no operation log anywhere.
  auto serve = [&ops, observer](OpKind op, const Vertex& a, const Vertex& b,
                                effects::Continuation k) {
    Value forward =
        op == OpKind::add
            ? ops.add(vertex_value(a, ops), vertex_value(b, ops))
            : ops.mul(vertex_value(a, ops), vertex_value(b, ops));
    Vertex u = Vertex::variable(std::move(forward), ops.zero, VarId::fresh());
    const TapeEntry entry{u, op, a, b};
    if (observer != nullptr) {
      observer->on_operation(entry);
    }

    std::any downstream = effects::resume(std::move(k), Value::of(u));

    const Value du = u.adjoint();
    if (op == OpKind::add) {
      add_to_adjoint(a, du, ops);
      add_to_adjoint(b, du, ops);
    } else {
      add_to_adjoint(a, ops.mul(du, vertex_value(b, ops)), ops);
      add_to_adjoint(b, ops.mul(vertex_value(a, ops), du), ops);
    }
    if (observer != nullptr) {
      observer->on_retire(entry);
    }
    return downstream;
  };

  effects::Handler handler;
  handler.on_effect = [&serve](std::any payload,
                               effects::Continuation k) -> std::any {
    if (const auto* add = std::any_cast<AddRequest>(&payload)) {
      return serve(OpKind::add, add->a, add->b, std::move(k));
    }
    if (const auto* mul = std::any_cast<MulRequest>(&payload)) {
      return serve(OpKind::mul, mul->a, mul->b, std::move(k));
    }
    // Not ours: forward to the enclosing computation's handler and hand the
    // reply back to the suspended evaluation.
    std::any outer = effects::perform(std::move(payload));
    return effects::resume(std::move(k), std::move(outer));
  };
  handler.on_return = [&ops, observer](std::any result) -> std::any {
    const Vertex& root = std::any_cast<const Value&>(result).as<Vertex>();
    add_to_adjoint(root, ops.one, ops);
    if (observer != nullptr) {
      observer->on_seed(root);
    }
    return result;
  };

  const SemiringOps requesting = requesting_ops(ops);
  effects::handle(
      [&e, &requesting, &input]() -> std::any {
        return e.evaluate(requesting, Value::of(input));
      },
      std::move(handler));

  return input.adjoint();
}

}  // namespace detail

Expression diff_handler(const Expression& e) {
  return Expression::from_body([e](const SemiringOps& ops, const Value& x) {
    return detail::run_handler_diff(e, ops, x, nullptr);
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

/// Builds one witness per request by tracking what every vertex of the
/// audited evaluation means symbolically: the input means the variable,
/// constants mean their atoms, and each reply means the node over its
/// operands' meanings. An operand without a meaning is a foreign vertex —
/// the protocol's precondition forbids it.
class ProtocolAuditor final : public ReverseObserver {
 public:
  void on_input(const Vertex& input) override {
    meanings_.emplace(input.id(), SymExpr::leaf(VarId::input()));
  }

  void on_operation(const TapeEntry& entry) override {
    SymPtr left = meaning(entry.a);
    SymPtr right = meaning(entry.b);
    SymPtr reply = SymExpr::node(entry.op, left, right);
    meanings_.emplace(entry.u.id(), reply);
    witnesses_.push_back(OpProtocolWitness{entry.op, std::move(left),
                                           std::move(right), entry.u.id(),
                                           std::move(reply)});
  }

  std::vector<OpProtocolWitness> take() { return std::move(witnesses_); }

 private:
  SymPtr meaning(const Vertex& v) const {
    switch (v.kind()) {
      case Vertex::Kind::zero:
        return SymExpr::zero();
      case Vertex::Kind::one:
        return SymExpr::one();
      case Vertex::Kind::var: {
        auto it = meanings_.find(v.id());
        if (it == meanings_.end()) {
          throw ContractViolation(
              "request operand is foreign to this evaluation");
        }
        return it->second;
      }
    }
    throw ContractViolation("corrupt vertex kind");
  }

  std::map<VarId, SymPtr> meanings_;
  std::vector<OpProtocolWitness> witnesses_;
};

}  // namespace

std::size_t handler_effect_count(const Expression& e, const SemiringOps& ops,
                                 const Value& at) {
  OperationCounter counter;
  detail::run_handler_diff(e, ops, at, &counter);
  return counter.count();
}

BackwardTrace handler_backward_trace(const Expression& e,
                                     const SemiringOps& ops,
                                     const Value& at) {
  TraceRecorder recorder;
  detail::run_handler_diff(e, ops, at, &recorder);
  return recorder.take();
}

std::vector<OpProtocolWitness> protocol_audit(const Expression& e,
                                              const SemiringOps& ops,
                                              const Value& at) {
  ProtocolAuditor auditor;
  detail::run_handler_diff(e, ops, at, &auditor);
  return auditor.take();
}

}  // namespace tad::ad

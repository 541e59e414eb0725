#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tad/semiring.hpp"
#include "tad/symbolic.hpp"
#include "tad/value.hpp"
#include "tad/varid.hpp"

namespace tad::ad {

/// A node of the runtime adjoint graph shared by the reverse-mode engines:
/// either one of the two constant sentinels, or a variable record carrying
/// an immutable value and a mutable adjoint accumulator. Copies of a Vertex
/// alias the same record — identity, not contents, is what the backward pass
/// keys on.
class Vertex {
 public:
  enum class Kind : std::uint8_t { zero, one, var };

  static Vertex zero() { return Vertex(Kind::zero, nullptr); }
  static Vertex one() { return Vertex(Kind::one, nullptr); }

  static Vertex variable(Value value, Value initial_adjoint, VarId id) {
    return Vertex(Kind::var,
                  std::make_shared<Record>(Record{std::move(value),
                                                  std::move(initial_adjoint),
                                                  id}));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_variable() const noexcept { return kind_ == Kind::var; }

  VarId id() const { return record().id; }
  const Value& value() const { return record().value; }
  Value adjoint() const { return record().adjoint; }

  bool same_record(const Vertex& other) const noexcept {
    return kind_ == other.kind_ && record_ == other.record_;
  }

  friend Value vertex_value(const Vertex& v, const SemiringOps& ops);
  friend void add_to_adjoint(const Vertex& v, const Value& amount,
                             const SemiringOps& ops);

 private:
  struct Record {
    Value value;
    Value adjoint;
    VarId id;
  };

  Vertex(Kind kind, std::shared_ptr<Record> record)
      : kind_(kind), record_(std::move(record)) {}

  const Record& record() const {
    if (!is_variable()) {
      throw ContractViolation("constant vertex has no variable record");
    }
    return *record_;
  }

  Kind kind_;
  std::shared_ptr<Record> record_;
};

/// The numeric value of a vertex: constants map to the dictionary's 0 and 1,
/// variables to their stored (immutable) value.
inline Value vertex_value(const Vertex& v, const SemiringOps& ops) {
  switch (v.kind()) {
    case Vertex::Kind::zero: return ops.zero;
    case Vertex::Kind::one: return ops.one;
    case Vertex::Kind::var: return v.record_->value;
  }
  throw ContractViolation("corrupt vertex kind");
}

/// Accumulate into a variable's adjoint (d += amount); constants ignore
/// updates.
inline void add_to_adjoint(const Vertex& v, const Value& amount,
                           const SemiringOps& ops) {
  if (v.is_variable()) {
    v.record_->adjoint = ops.add(v.record_->adjoint, amount);
  }
}

/// One recorded operation: u := a op b.
struct TapeEntry {
  Vertex u;
  OpKind op;
  Vertex a;
  Vertex b;
};

/// The record of a forward pass, in execution order; the backward pass
/// consumes it back to front.
using Tape = std::vector<TapeEntry>;

}  // namespace tad::ad

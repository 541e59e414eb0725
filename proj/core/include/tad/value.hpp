#pragma once

#include <memory>
#include <string>
#include <typeinfo>
#include <utility>

#include "tad/errors.hpp"

namespace tad {

/// Thrown when a Value is read at a type other than the one it holds.
class BadValueCast : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// An immutable, cheaply copyable box holding one number of an arbitrary
/// carrier type (machine double, big natural, polynomial, expression tree,
/// dual number, graph vertex, ...).
///
/// All semiring dictionaries operate on Values, which is what lets a single
/// program run under interchangeable interpretations chosen at run time.
/// Reads are type-checked: `as<T>()` throws BadValueCast on mismatch.
class Value {
 public:
  Value() = default;

  template <typename T>
  static Value of(T payload) {
    Value v;
    v.box_ = std::make_shared<const TypedBox<T>>(std::move(payload));
    return v;
  }

  bool empty() const noexcept { return box_ == nullptr; }

  template <typename T>
  bool holds() const noexcept {
    return box_ != nullptr && box_->type() == typeid(T);
  }

  template <typename T>
  const T& as() const {
    if (!holds<T>()) {
      throw BadValueCast(std::string("value read as ") + typeid(T).name() +
                         " but holds " + type_name());
    }
    return static_cast<const TypedBox<T>*>(box_.get())->payload;
  }

  const char* type_name() const noexcept {
    return box_ ? box_->type().name() : "<empty>";
  }

 private:
  struct Box {
    virtual ~Box() = default;
    virtual const std::type_info& type() const noexcept = 0;
  };

  template <typename T>
  struct TypedBox final : Box {
    explicit TypedBox(T v) : payload(std::move(v)) {}
    const std::type_info& type() const noexcept override { return typeid(T); }
    T payload;
  };

  std::shared_ptr<const Box> box_;
};

}  // namespace tad

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tad/value.hpp"
#include "tad/vertex.hpp"

namespace tad::ad {

/// The backward pass observed step by step: one snapshot after the root is
/// seeded and one after each operation's adjoint updates. A snapshot holds,
/// for every variable vertex in creation order (the input first, then u1,
/// u2, ...), its adjoint at that instant — or nothing once the vertex has
/// been retired by its own backward step.
struct BackwardTrace {
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<Value>>> snapshots;
};

/// Serialize one line per snapshot: comma-separated `name=value` cells in
/// vertex order, retired cells rendered as `name=#`.
std::vector<std::string> trace_lines(
    const BackwardTrace& trace,
    const std::function<std::string(const Value&)>& show);

/// Renderers for the common carriers.
std::string show_natural(const Value& v);
std::string show_real(const Value& v);

/// Observation points shared by the two reverse-mode engines. The engines
/// invoke these in identical order for identical programs, which is what the
/// cross-engine trace-equality checks rely on.
class ReverseObserver {
 public:
  virtual ~ReverseObserver() = default;

  /// The input vertex exists (value bound, adjoint zero).
  virtual void on_input(const Vertex& input) { (void)input; }

  /// A forward operation executed: entry.u was created and recorded.
  virtual void on_operation(const TapeEntry& entry) { (void)entry; }

  /// The forward pass finished and the root's adjoint was seeded with one.
  virtual void on_seed(const Vertex& root) { (void)root; }

  /// One backward step completed: entry's operand adjoints were updated and
  /// entry.u is retired.
  virtual void on_retire(const TapeEntry& entry) { (void)entry; }
};

/// A ReverseObserver that accumulates a BackwardTrace.
class TraceRecorder final : public ReverseObserver {
 public:
  void on_input(const Vertex& input) override;
  void on_operation(const TapeEntry& entry) override;
  void on_seed(const Vertex& root) override;
  void on_retire(const TapeEntry& entry) override;

  BackwardTrace take() { return std::move(trace_); }

 private:
  void snapshot();

  std::vector<Vertex> order_;
  std::vector<bool> retired_;
  BackwardTrace trace_;
};

}  // namespace tad::ad

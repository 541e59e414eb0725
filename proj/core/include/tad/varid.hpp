#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>

namespace tad {

/// Opaque identifier for a variable. Identity is the only structure: ids are
/// equality-comparable, ordered (so they can key maps and canonical forms),
/// and freshly generatable. Id 0 is reserved for the distinguished input
/// variable of single-variable programs.
class VarId {
 public:
  /// The distinguished input variable (rendered as "x").
  static constexpr VarId input() noexcept { return VarId{0}; }

  /// A process-unique fresh identifier, never equal to input().
  static VarId fresh() noexcept {
    static std::atomic<std::uint64_t> counter{1};
    return VarId{counter.fetch_add(1, std::memory_order_relaxed)};
  }

  constexpr std::uint64_t raw() const noexcept { return raw_; }

  friend constexpr auto operator<=>(VarId, VarId) noexcept = default;

 private:
  explicit constexpr VarId(std::uint64_t raw) noexcept : raw_(raw) {}

  std::uint64_t raw_ = 0;
};

}  // namespace tad

template <>
struct std::hash<tad::VarId> {
  std::size_t operator()(tad::VarId id) const noexcept {
    return std::hash<std::uint64_t>{}(id.raw());
  }
};

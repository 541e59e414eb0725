#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tad/natural.hpp"
#include "tad/varid.hpp"

namespace tad {

/// A product of variables: a multiset kept as a sorted vector. The empty
/// monomial is the multiplicative unit.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarId id) {
    Monomial m;
    m.factors_.push_back(id);
    return m;
  }

  /// Multiset union (merge of two sorted factor lists).
  Monomial times(const Monomial& other) const;

  std::size_t degree() const noexcept { return factors_.size(); }
  const std::vector<VarId>& factors() const noexcept { return factors_; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<VarId> factors_;
};

/// A multivariate polynomial with natural-number coefficients, kept in
/// canonical form: monomials are ordered and no coefficient is zero. Since
/// naturals never cancel, sums and products of canonical polynomials are
/// canonical, which makes structural equality a decision procedure.
class Polynomial {
 public:
  Polynomial() = default;  // the zero polynomial

  static Polynomial constant(Natural c);
  static Polynomial variable(VarId id);

  Polynomial plus(const Polynomial& other) const;
  Polynomial times(const Polynomial& other) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form for diagnostics, e.g. "3*v1*v1 + 2".
  std::string to_string() const;

 private:
  std::map<Monomial, Natural> terms_;
};

}  // namespace tad

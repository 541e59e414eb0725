#include "tad/polynomial.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <utility>

namespace tad {

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  std::merge(factors_.begin(), factors_.end(), other.factors_.begin(),
             other.factors_.end(), std::back_inserter(out.factors_));
  return out;
}

Polynomial Polynomial::constant(Natural c) {
  Polynomial p;
  if (c != 0) {
    p.terms_.emplace(Monomial{}, std::move(c));
  }
  return p;
}

Polynomial Polynomial::variable(VarId id) {
  Polynomial p;
  p.terms_.emplace(Monomial::variable(id), Natural(1));
  return p;
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [mono, coeff] : other.terms_) {
    auto [it, inserted] = out.terms_.emplace(mono, coeff);
    if (!inserted) {
      it->second += coeff;
    }
  }
  return out;
}

Polynomial Polynomial::times(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial mono = ma.times(mb);
      Natural part = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(mono), part);
      if (!inserted) {
        it->second += part;
      }
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    if (!first) {
      os << " + ";
    }
    first = false;
    if (coeff != 1 || mono.degree() == 0) {
      os << coeff.get_str();
      if (mono.degree() != 0) {
        os << "*";
      }
    }
    bool first_factor = true;
    for (VarId v : mono.factors()) {
      if (!first_factor) {
        os << "*";
      }
      first_factor = false;
      os << "v" << v.raw();
    }
  }
  return os.str();
}

}  // namespace tad

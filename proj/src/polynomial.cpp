#include "solvalg/polynomial.hpp"

#include <string>

#include "solvalg/errors.hpp"

namespace solvalg {

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
  Polynomial out(m.size(), c.field());
  out.add_term(m, c);
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  return term(Monomial(nvars), c);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::check_monomial(const Monomial& m) const {
  if (m.size() != nvars_) {
    throw DimensionError("monomial on " + std::to_string(m.size()) +
                         " generators added to a polynomial on " + std::to_string(nvars_));
  }
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (rhs.nvars_ != nvars_) {
    throw DimensionError("polynomials on " + std::to_string(nvars_) + " and " +
                         std::to_string(rhs.nvars_) + " generators");
  }
  if (rhs.field_ != field_) {
    throw FieldMismatchError("polynomials over " + field_.to_string() + " and " +
                             rhs.field_.to_string());
  }
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  check_monomial(m);
  if (c.field() != field_) {
    throw FieldMismatchError("coefficient over " + c.field().to_string() +
                             " added to a polynomial over " + field_.to_string());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(nvars_, field_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
  return out;
}

Polynomial poly_combine(const Polynomial& f, const Polynomial& g, const Scalar& c) {
  if (f.nvars() != g.nvars()) {
    throw DimensionError("poly_combine: polynomials on " + std::to_string(f.nvars()) + " and " +
                         std::to_string(g.nvars()) + " generators");
  }
  Polynomial out(f);
  out += g.scaled(c);
  return out;
}

}  // namespace solvalg

#pragma once

#include <cstddef>
#include <map>

#include "solvalg/monomial.hpp"
#include "solvalg/scalar.hpp"

namespace solvalg {

/// Finite K-linear combination of PBW monomials. Zero coefficients are never
/// stored; the zero polynomial has no terms. Terms are kept in canonical
/// Monomial order so equality does not depend on any monomial ordering.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Polynomial(std::size_t nvars, Field field) : nvars_(nvars), field_(field) {}

  static Polynomial term(const Monomial& m, const Scalar& c);
  static Polynomial constant(std::size_t nvars, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Scalar coefficient(const Monomial& m) const;
  /// Accumulates c*m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial scaled(const Scalar& c) const;
  Polynomial operator-() const { return scaled(-Scalar::one(field_)); }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void check_compatible(const Polynomial& rhs) const;
  void check_monomial(const Monomial& m) const;

  std::size_t nvars_;
  Field field_;
  TermMap terms_;
};

/// f + c*g with zero coefficients pruned.
Polynomial poly_combine(const Polynomial& f, const Polynomial& g, const Scalar& c);

}  // namespace solvalg

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solvalg/polynomial.hpp"
#include "solvalg/scalar.hpp"

namespace solvalg {

/// One commutation rule a_j a_i = lambda a_i a_j + tail, for i < j.
struct Relation {
  Scalar lambda;
  Polynomial tail;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Finite presentation of a solvable polynomial algebra: generator names, ground
/// field, and one relation per pair i < j. Pairs never set explicitly commute
/// (lambda = 1, tail = 0). Generator indices are 0-based.
class AlgebraPresentation {
 public:
  AlgebraPresentation(Field field, std::vector<std::string> names);

  std::size_t nvars() const { return names_.size(); }
  Field field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Relation for a_j a_i with j > i.
  const Relation& relation(std::size_t j, std::size_t i) const;
  /// Replaces the relation for a_j a_i (j > i). Throws InvalidPresentationError
  /// on lambda = 0 and DimensionError/FieldMismatchError on a malformed tail.
  void set_relation(std::size_t j, std::size_t i, Scalar lambda, Polynomial tail);

  bool is_commuting(std::size_t j, std::size_t i) const;
  Polynomial zero() const { return Polynomial(nvars(), field_); }
  Polynomial one() const { return Polynomial::constant(nvars(), Scalar::one(field_)); }
  Polynomial generator(std::size_t i) const;

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;

 private:
  std::size_t slot(std::size_t j, std::size_t i) const;

  Field field_;
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
};

/// Polynomial ring K[x_1..x_n] with every pair commuting.
AlgebraPresentation commutative_presentation(Field field, std::vector<std::string> names);

}  // namespace solvalg

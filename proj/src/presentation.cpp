#include "solvalg/presentation.hpp"

#include <algorithm>
#include <set>

#include "solvalg/errors.hpp"

namespace solvalg {

AlgebraPresentation::AlgebraPresentation(Field field, std::vector<std::string> names)
    : field_(field), names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidPresentationError("empty generator name");
    if (!seen.insert(n).second) throw InvalidPresentationError("duplicate generator " + n);
  }
  const std::size_t n = names_.size();
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  relations_.assign(pairs, Relation{Scalar::one(field_), Polynomial(n, field_)});
}

std::optional<std::size_t> AlgebraPresentation::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t AlgebraPresentation::slot(std::size_t j, std::size_t i) const {
  if (!(i < j && j < nvars())) {
    throw DimensionError("relation index (" + std::to_string(j) + ", " + std::to_string(i) +
                         ") must satisfy i < j < n");
  }
  return j * (j - 1) / 2 + i;
}

const Relation& AlgebraPresentation::relation(std::size_t j, std::size_t i) const {
  return relations_[slot(j, i)];
}

void AlgebraPresentation::set_relation(std::size_t j, std::size_t i, Scalar lambda,
                                       Polynomial tail) {
  const std::size_t s = slot(j, i);
  if (lambda.field() != field_ || tail.field() != field_) {
    throw FieldMismatchError("relation data is not over " + field_.to_string());
  }
  if (lambda.is_zero()) {
    throw InvalidPresentationError("relation " + names_[j] + "*" + names_[i] +
                                   ": lambda must be nonzero");
  }
  if (tail.nvars() != nvars()) {
    throw DimensionError("relation tail has the wrong number of generators");
  }
  relations_[s] = Relation{std::move(lambda), std::move(tail)};
}

bool AlgebraPresentation::is_commuting(std::size_t j, std::size_t i) const {
  const Relation& r = relation(j, i);
  return r.lambda.is_one() && r.tail.is_zero();
}

Polynomial AlgebraPresentation::generator(std::size_t i) const {
  return Polynomial::term(Monomial::generator(nvars(), i), Scalar::one(field_));
}

AlgebraPresentation commutative_presentation(Field field, std::vector<std::string> names) {
  return AlgebraPresentation(field, std::move(names));
}

}  // namespace solvalg

#include "solvalg/degree.hpp"

#include <algorithm>
#include <string>

#include "solvalg/errors.hpp"

namespace solvalg {

DegreeFunction::DegreeFunction(const std::vector<std::int64_t>& weights) {
  weights_.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) {
      throw InvalidDegreeFunctionError("weight of generator " + std::to_string(i + 1) +
                                       " is " + std::to_string(weights[i]) +
                                       "; weights must be positive");
    }
    weights_.push_back(static_cast<std::uint64_t>(weights[i]));
  }
}

DegreeFunction DegreeFunction::standard(std::size_t nvars) {
  DegreeFunction d;
  d.weights_.assign(nvars, 1);
  return d;
}

DegreeFunction DegreeFunction::extended(std::uint64_t weight) const {
  if (weight < 1) throw InvalidDegreeFunctionError("weights must be positive");
  DegreeFunction d(*this);
  d.weights_.push_back(weight);
  return d;
}

std::uint64_t DegreeFunction::operator()(const Monomial& m) const {
  if (m.size() != weights_.size()) {
    throw DimensionError("degree function on " + std::to_string(weights_.size()) +
                         " generators applied to a monomial on " + std::to_string(m.size()));
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(m[i]), weights_[i], &term) ||
        __builtin_add_overflow(sum, term, &sum)) {
      throw OverflowError("degree overflow");
    }
  }
  return sum;
}

std::uint64_t deg_monomial(const DegreeFunction& d, const Monomial& m) { return d(m); }

std::uint64_t deg_poly(const DegreeFunction& d, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("degree of the zero polynomial is undefined");
  std::uint64_t best = 0;
  for (const auto& [m, c] : f.terms()) best = std::max(best, d(m));
  return best;
}

Polynomial leading_homogeneous(const DegreeFunction& d, const Polynomial& f) {
  const std::uint64_t top = deg_poly(d, f);
  Polynomial out(f.nvars(), f.field());
  for (const auto& [m, c] : f.terms()) {
    if (d(m) == top) out.add_term(m, c);
  }
  return out;
}

bool in_filtration_level(const DegreeFunction& d, const Polynomial& f, std::uint64_t p) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return d(term.first) <= p; });
}

bool is_homogeneous(const DegreeFunction& d, const Polynomial& f) {
  if (f.is_zero()) return false;
  const std::uint64_t first = d(f.terms().begin()->first);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return d(term.first) == first; });
}

}  // namespace solvalg

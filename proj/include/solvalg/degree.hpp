#pragma once

#include <cstdint>
#include <vector>

#include "solvalg/monomial.hpp"
#include "solvalg/polynomial.hpp"

namespace solvalg {

/// Positive-degree function d(a^alpha) = sum alpha_i m_i given by a weight
/// vector of strictly positive integers.
class DegreeFunction {
 public:
  /// Throws InvalidDegreeFunctionError if any weight is < 1.
  explicit DegreeFunction(const std::vector<std::int64_t>& weights);

  /// All weights equal to one.
  static DegreeFunction standard(std::size_t nvars);

  std::size_t size() const { return weights_.size(); }
  std::uint64_t weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }

  /// Same weights with one more generator of the given weight appended.
  DegreeFunction extended(std::uint64_t weight) const;

  std::uint64_t operator()(const Monomial& m) const;

  friend bool operator==(const DegreeFunction&, const DegreeFunction&) = default;

 private:
  DegreeFunction() = default;
  std::vector<std::uint64_t> weights_;
};

/// Weighted exponent sum; DimensionError on length mismatch, OverflowError on overflow.
std::uint64_t deg_monomial(const DegreeFunction& d, const Monomial& m);

/// Maximum monomial degree over the support. d(0) is undefined: ZeroPolynomialError.
std::uint64_t deg_poly(const DegreeFunction& d, const Polynomial& f);

/// Sub-sum of the terms of maximal degree.
Polynomial leading_homogeneous(const DegreeFunction& d, const Polynomial& f);

/// Membership in F_p A = K-span{a^alpha : d(a^alpha) <= p}. The zero polynomial is in every level.
bool in_filtration_level(const DegreeFunction& d, const Polynomial& f, std::uint64_t p);

/// True iff every term of f has the same degree (f != 0).
bool is_homogeneous(const DegreeFunction& d, const Polynomial& f);

}  // namespace solvalg

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "solvalg/degree.hpp"
#include "solvalg/monomial.hpp"
#include "solvalg/polynomial.hpp"

namespace solvalg {

enum class OrderingKind {
  Lex,      ///< lexicographic along a generator priority list
  GrLex,    ///< weighted degree, then lex along the priority list
  GrevLex,  ///< weighted degree, then reverse lex along the priority list
  Graded,   ///< degree under d first, base ordering on ties
  Rees,     ///< base ordering on the first n exponents, then the last (Z) exponent
};

/// Total admissible ordering on exponent vectors. Values are immutable and
/// cheap to copy; composite kinds share their base.
///
/// The priority list names generators from most to least significant, so
/// lex({0, 1, 2}) is a_1 > a_2 > a_3 and lex({2, 1, 0}) is a_3 > a_2 > a_1.
class MonomialOrdering {
 public:
  static MonomialOrdering lex(std::vector<std::size_t> priority);
  static MonomialOrdering grlex(DegreeFunction d, std::vector<std::size_t> priority);
  static MonomialOrdering grevlex(DegreeFunction d, std::vector<std::size_t> priority);
  /// Degree-first composite over base. InvalidDegreeFunctionError on a size mismatch.
  static MonomialOrdering graded(const MonomialOrdering& base, DegreeFunction d);
  /// Ordering on n+1 generators comparing the first n with base, then the last exponent.
  static MonomialOrdering rees(const MonomialOrdering& base);

  /// lex(a_1 > a_2 > ... > a_n)
  static MonomialOrdering natural_lex(std::size_t nvars);

  OrderingKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  const std::optional<DegreeFunction>& degree() const { return degree_; }
  const MonomialOrdering* base() const { return base_.get(); }

  std::strong_ordering compare(std::span<const Exponent> a, std::span<const Exponent> b) const;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Structural test: does this ordering compare d-degrees before anything else?
  bool is_degree_first(const DegreeFunction& d) const;

  friend bool operator==(const MonomialOrdering& a, const MonomialOrdering& b);

 private:
  MonomialOrdering(OrderingKind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}
  std::strong_ordering compare_lex(std::span<const Exponent> a, std::span<const Exponent> b) const;
  std::strong_ordering compare_revlex(std::span<const Exponent> a,
                                      std::span<const Exponent> b) const;

  OrderingKind kind_;
  std::size_t nvars_;
  std::vector<std::size_t> priority_;
  std::optional<DegreeFunction> degree_;
  std::shared_ptr<const MonomialOrdering> base_;
};

/// Same as ord.compare, with a DimensionError when lengths disagree.
std::strong_ordering compare(const MonomialOrdering& ord, const Monomial& a, const Monomial& b);

/// The composite ordering: d-degree first, base on ties.
MonomialOrdering make_graded(const MonomialOrdering& base, const DegreeFunction& d);

/// ord itself if it is already degree-first with respect to d, otherwise make_graded(ord, d).
MonomialOrdering graded_ordering_for(const MonomialOrdering& ord, const DegreeFunction& d);

/// The ord-maximal support monomial. ZeroPolynomialError on f = 0.
Monomial leading_monomial(const MonomialOrdering& ord, const Polynomial& f);

/// Result of the degree-compatibility check. A witness is a pair (greater, smaller)
/// with greater > smaller under the ordering but d(greater) < d(smaller).
struct GradedOrderingReport {
  bool pass = true;
  std::optional<std::pair<Monomial, Monomial>> witness;
};

/// Checks, exhaustively over the exponent box [0, box]^n, that
/// a < b implies d(a) <= d(b) and d(a) < d(b) implies a < b.
/// Reports the first offending greater monomial (box odometer order) paired with
/// the partner of largest degree.
GradedOrderingReport is_graded_wrt(const MonomialOrdering& ord, const DegreeFunction& d,
                                   Exponent box);

}  // namespace solvalg

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "solvalg/scalar.hpp"

namespace solvalg::detail {

/// a . x <= b, or a . x = b when equality is set. Integer coefficients.
struct LinearConstraint {
  std::vector<BigInt> a;
  BigInt b;
  bool equality = false;
};

/// Constraint set over integer unknowns x_0..x_{n-1}, tightened for integer
/// points (rows are divided by the gcd of their coefficients and the bound is
/// rounded down).
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::vector<LinearConstraint>& constraints() const { return rows_; }

  void add(LinearConstraint row);
  /// False once a row with no unknowns left is violated.
  bool consistent() const { return consistent_; }

  /// Eliminates x_v: substitution through an equality when one mentions x_v,
  /// pairwise combination of opposite-signed inequalities otherwise.
  LinearSystem eliminate(std::size_t v) const;
  /// Fixes x_v to value.
  LinearSystem substitute(std::size_t v, const BigInt& value) const;

  struct Range {
    std::optional<BigInt> lo;
    std::optional<BigInt> hi;
  };
  /// Integer range of x_v over the rational relaxation with every other unknown
  /// eliminated; nullopt when the system is infeasible.
  std::optional<Range> range_of(std::size_t v) const;

 private:
  std::size_t nvars_;
  std::vector<LinearConstraint> rows_;
  bool consistent_ = true;
};

/// Lexicographically smallest integer values of x_0..x_{count-1} extending to a
/// solution, or nullopt. Unknowns past count must already be fixed, and every
/// searched unknown must be bounded on both sides by the system.
std::optional<std::vector<BigInt>> lex_min_integer_point(const LinearSystem& sys,
                                                         std::size_t count);

}  // namespace solvalg::detail

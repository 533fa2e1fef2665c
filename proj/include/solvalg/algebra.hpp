#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "solvalg/ordering.hpp"
#include "solvalg/polynomial.hpp"
#include "solvalg/presentation.hpp"
#include "solvalg/rewriting.hpp"

namespace solvalg {

/// A presentation together with the ordering of its admissible system.
/// Products are computed in PBW normal form by applying the relations to
/// adjacent out-of-order generators; monomial products are memoized in a cache
/// shared between copies. Throws BudgetExceededError when more than budget
/// relation applications are needed for one product.
class SolvableAlgebra {
 public:
  SolvableAlgebra(AlgebraPresentation presentation, MonomialOrdering ordering,
                  std::uint64_t budget = kDefaultStepBudget);

  const AlgebraPresentation& presentation() const { return rewriter_.presentation(); }
  const MonomialOrdering& ordering() const { return rewriter_.ordering(); }
  const WordRewriter& rewriter() const { return rewriter_; }
  std::size_t nvars() const { return presentation().nvars(); }
  Field field() const { return presentation().field(); }

  /// PBW normal form of a^alpha * a^beta.
  Polynomial mul_monomials(const Monomial& alpha, const Monomial& beta) const;
  /// Bilinear extension of mul_monomials.
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  /// f^k by repeated multiplication; f^0 = 1.
  Polynomial pow(const Polynomial& f, unsigned k) const;

 private:
  struct Cache;
  struct Run;

  WordRewriter rewriter_;
  std::shared_ptr<Cache> cache_;
};

Polynomial mul_monomials(const AlgebraPresentation& p, const MonomialOrdering& ord,
                         const Monomial& alpha, const Monomial& beta);
Polynomial mul(const AlgebraPresentation& p, const MonomialOrdering& ord, const Polynomial& f,
               const Polynomial& g);

struct SolvabilityReport {
  struct Violation {
    std::size_t j;  ///< larger generator index of the pair
    std::size_t i;  ///< smaller generator index of the pair
    Monomial leading;  ///< LM of the tail f_ji
  };
  bool pass = true;
  std::optional<Violation> violation;
};

/// Pairwise solvability: lambda_ji != 0 and LM(f_ji) below a_i a_j for all i < j.
SolvabilityReport check_solvable(const AlgebraPresentation& p, const MonomialOrdering& ord);

struct ConfluenceReport {
  enum class Status { Pass, Fail, BudgetExceeded };
  Status status = Status::Pass;
  /// Offending triple k > j > i (the word a_k a_j a_i), set unless status is Pass.
  std::optional<std::array<std::size_t, 3>> triple;
  /// Normal forms of (a_k a_j) a_i and a_k (a_j a_i) for a Fail.
  std::optional<Polynomial> left;
  std::optional<Polynomial> right;
  std::size_t triples_checked = 0;

  bool pass() const { return status == Status::Pass; }
};

/// Overlap check: for every k > j > i reduce a_k a_j a_i starting from either
/// pair and compare the normal forms. Each triple gets its own step budget.
ConfluenceReport check_pbw_confluence(const AlgebraPresentation& p, const MonomialOrdering& ord,
                                      std::uint64_t budget = kDefaultStepBudget);

}  // namespace solvalg

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "solvalg/ordering.hpp"
#include "solvalg/polynomial.hpp"
#include "solvalg/presentation.hpp"

namespace solvalg {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

/// A word in the free algebra on the generators: a sequence of 0-based indices.
using Word = std::vector<std::uint32_t>;

struct WordTerm {
  Word word;
  Scalar coeff;
};

/// Sorted word a_1^{e_1} ... a_n^{e_n} for a monomial.
Word monomial_word(const Monomial& m);

/// Reduces linear combinations of words to PBW normal form by rewriting
/// adjacent out-of-order pairs a_j a_i (j > i) with the relation table.
///
/// Pending words are kept in a worklist ordered by (ordering of their
/// commutative image, inversion count, word); the largest pending word is
/// always rewritten next, at its out-of-order pair whose monomial a_i a_j is
/// largest (leftmost on ties). Every rewrite counts as one step.
class WordRewriter {
 public:
  WordRewriter(AlgebraPresentation presentation, MonomialOrdering ordering,
               std::uint64_t budget = kDefaultStepBudget);

  const AlgebraPresentation& presentation() const { return presentation_; }
  const MonomialOrdering& ordering() const { return ordering_; }
  std::uint64_t budget() const { return budget_; }

  /// One rewrite of the out-of-order pair at positions (pos, pos+1) of word,
  /// scaled by coeff. The pair must satisfy word[pos] > word[pos+1].
  std::vector<WordTerm> rewrite_at(const Word& word, std::size_t pos, const Scalar& coeff) const;

  /// Fully normalizes the combination. Throws BudgetExceededError when more
  /// than budget() rewrites are needed. steps (if given) receives the count.
  Polynomial normalize(const std::vector<WordTerm>& terms, std::uint64_t* steps = nullptr) const;

 private:
  std::size_t choose_pair(const Word& word) const;

  AlgebraPresentation presentation_;
  MonomialOrdering ordering_;
  std::uint64_t budget_;
  std::vector<std::size_t> pair_rank_;  // rank of a_i a_j among all pairs, slot j*n+i
};

}  // namespace solvalg

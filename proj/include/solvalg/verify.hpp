#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvalg/algebra.hpp"
#include "solvalg/degree.hpp"
#include "solvalg/presentation.hpp"

namespace solvalg {

/// Outcome of comparing every tail term of every relation with d(a_i) + d(a_j).
struct TypeReport {
  enum class Verdict { Graded, FilteredOnly, Neither };

  struct Witness {
    std::size_t j;  ///< larger generator index of the pair
    std::size_t i;  ///< smaller generator index of the pair
    Monomial term;
    std::uint64_t degree;
    std::uint64_t required;  ///< m_i + m_j
  };

  Verdict verdict = Verdict::Graded;
  /// FilteredOnly: the terms of degree below the required one.
  /// Neither: the terms of degree above it.
  std::vector<Witness> witnesses;
};

std::string to_string(TypeReport::Verdict v);

/// Graded when every tail term has degree exactly m_i + m_j, FilteredOnly when
/// all are at most that, Neither otherwise.
TypeReport check_graded_type(const AlgebraPresentation& p, const DegreeFunction& d);
/// Same classification as check_graded_type; the graded test runs first so the
/// strongest verdict is reported.
TypeReport check_filtered_type(const AlgebraPresentation& p, const DegreeFunction& d);

enum class WeightMode { Graded, Filtered };

/// Positive integer weights with every weight <= bound making p graded (or
/// filtered) of weighted type. Among all solutions the one with the smallest
/// weight sum is returned, ties broken lexicographically. Throws
/// std::invalid_argument when bound < 1.
std::optional<DegreeFunction> find_weights(const AlgebraPresentation& p, WeightMode mode,
                                           std::uint64_t bound);

struct DegreeLawReport {
  bool pass = true;
  /// 'a', 'b' or 'c' for the first law that failed.
  char law = 0;
  /// Monomials of the failing instance, in the order they appear in the law.
  std::vector<Monomial> witness;
  std::string detail;
};

/// Exhaustive check over all monomials with exponents <= box of
///  (a) d(a^x a^y) = d(x) + d(y),
///  (b) for L = LH_d(a^x a^y a^z) not in {0, 1} and L != a^y: d(y) < d(L),
///  (c) d(x) < d(y), LH_d(a^g a^x a^h) != 0, LH_d(a^g a^y a^h) not in {0, 1}
///      imply d(a^g a^x a^h) < d(a^g a^y a^h).
DegreeLawReport verify_degree_laws(const SolvableAlgebra& alg, const DegreeFunction& d,
                                   Exponent box);

}  // namespace solvalg

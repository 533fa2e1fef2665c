#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solvalg/degree.hpp"
#include "solvalg/ordering.hpp"
#include "solvalg/polynomial.hpp"
#include "solvalg/presentation.hpp"

namespace solvalg {

/// Contents of an algebra file:
///
///   # comment
///   field Q                    (or GF(p); default Q)
///   gens a1:2 a2:1 a3:4        (weights optional, all or none)
///   order gr(lex(a1>a2>a3))    (default lex in declaration order)
///   rel a3*a1 = a1*a3 + a2^2*a3 + a2^6
///
/// Orderings: lex(names), grlex([w,...;]names), grevlex([w,...;]names),
/// gr([w,...;]ordering), rees(ordering). Names in a lex list run from most to
/// least significant; gr without explicit weights uses the declared ones.
/// rees(base) reads base over all generators but the last.
struct AlgebraFile {
  AlgebraPresentation presentation;
  MonomialOrdering ordering;
  std::optional<DegreeFunction> degree;

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

/// Throws ParseError with the line and column of the offending token.
AlgebraFile parse_algebra_file(std::string_view text);

/// Parses a sum of terms `c*x^e*y^f` whose generators appear in declaration
/// order. Errors are reported on line 1.
Polynomial parse_poly(std::string_view text, const AlgebraPresentation& p);

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);
/// Terms in descending order under ord; "0" for the zero polynomial.
std::string format_poly(const Polynomial& f, const std::vector<std::string>& names,
                        const MonomialOrdering& ord);
/// gr(...) omits its weights when they equal declared.
std::string format_ordering(const MonomialOrdering& ord, const std::vector<std::string>& names,
                            const std::optional<DegreeFunction>& declared);
/// Inverse of parse_algebra_file; commuting pairs are left out.
std::string format_algebra_file(const AlgebraFile& file);

}  // namespace solvalg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solvalg/degree.hpp"
#include "solvalg/ordering.hpp"
#include "solvalg/polynomial.hpp"
#include "solvalg/presentation.hpp"

namespace solvalg {

/// Associated graded algebra G(A) on generators sigma_<name>, with the source
/// ordering and degree function.
struct GradedTransformResult {
  AlgebraPresentation presentation;
  MonomialOrdering ordering;
  DegreeFunction degree;
};

/// Rees algebra on generators <name>~ followed by a central Z of degree 1.
struct ReesTransformResult {
  AlgebraPresentation presentation;
  MonomialOrdering ordering;
  DegreeFunction degree;
};

/// Keeps the tail terms of degree exactly m_i + m_j. Throws NotFilteredError
/// when some tail term exceeds that degree and InvalidOrderingError unless ord
/// compares degrees first under d.
GradedTransformResult build_assoc_graded(const AlgebraPresentation& p, const DegreeFunction& d,
                                         const MonomialOrdering& ord);
/// Tail term a^alpha becomes a^alpha Z^(m_i + m_j - d(alpha)). Same errors as
/// build_assoc_graded.
ReesTransformResult build_rees(const AlgebraPresentation& p, const DegreeFunction& d,
                               const MonomialOrdering& ord);

/// Principal symbol: the top-degree part of f, read in G(A). Throws on f = 0.
Polynomial sigma(const Polynomial& f, const DegreeFunction& d);
/// Each term a^alpha of f becomes a^alpha Z^(d(f) - d(alpha)). Throws on f = 0.
Polynomial homogenize(const Polynomial& f, const DegreeFunction& d);
/// Z^(p - d(f)) times homogenize(f); LevelTooLowError when p < d(f).
Polynomial homogenize_to_level(const Polynomial& f, const DegreeFunction& d, std::uint64_t p);
/// Z set to 1.
Polynomial dehomogenize(const Polynomial& h);
/// Terms with a positive Z exponent dropped, then Z removed.
Polynomial project_mod_Z(const Polynomial& h);

struct Lemma44Report {
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  bool pass = true;
  std::vector<Check> checks;
};

/// Compares degree, leading monomial and leading coefficient of f with those
/// of sigma(f) in G(A) and homogenize(f) in the Rees algebra.
Lemma44Report lemma44_check(const AlgebraPresentation& p, const DegreeFunction& d,
                            const MonomialOrdering& ord, const Polynomial& f);

}  // namespace solvalg

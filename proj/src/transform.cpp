#include "solvalg/transform.hpp"

#include "solvalg/errors.hpp"
#include "solvalg/verify.hpp"

namespace solvalg {

namespace {

void require_transformable(const AlgebraPresentation& p, const DegreeFunction& d,
                           const MonomialOrdering& ord) {
  if (d.size() != p.nvars() || ord.nvars() != p.nvars()) {
    throw DimensionError("transform: presentation, degree function and ordering disagree on " +
                         std::string("the number of generators"));
  }
  const TypeReport type = check_filtered_type(p, d);
  if (type.verdict == TypeReport::Verdict::Neither) {
    const auto& w = type.witnesses.front();
    throw NotFilteredError("relation " + p.name(w.j) + "*" + p.name(w.i) + " has a term of degree " +
                           std::to_string(w.degree) + " above " + std::to_string(w.required));
  }
  if (!ord.is_degree_first(d)) {
    throw InvalidOrderingError("transform: the ordering must compare degrees first");
  }
}

void require_nonzero(const Polynomial& f, const char* what) {
  if (f.is_zero()) throw ZeroPolynomialError(std::string(what) + " of the zero polynomial");
}

}  // namespace

GradedTransformResult build_assoc_graded(const AlgebraPresentation& p, const DegreeFunction& d,
                                         const MonomialOrdering& ord) {
  require_transformable(p, d, ord);
  const std::size_t n = p.nvars();
  std::vector<std::string> names;
  for (const auto& name : p.names()) names.push_back("sigma_" + name);
  AlgebraPresentation g(p.field(), std::move(names));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Relation& rel = p.relation(j, i);
      const std::uint64_t required = d.weight(i) + d.weight(j);
      Polynomial tail(n, p.field());
      for (const auto& [m, c] : rel.tail.terms()) {
        if (d(m) == required) tail.add_term(m, c);
      }
      g.set_relation(j, i, rel.lambda, std::move(tail));
    }
  }
  return {std::move(g), ord, d};
}

ReesTransformResult build_rees(const AlgebraPresentation& p, const DegreeFunction& d,
                               const MonomialOrdering& ord) {
  require_transformable(p, d, ord);
  const std::size_t n = p.nvars();
  std::vector<std::string> names;
  for (const auto& name : p.names()) names.push_back(name + "~");
  names.emplace_back("Z");
  AlgebraPresentation r(p.field(), std::move(names));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Relation& rel = p.relation(j, i);
      const std::uint64_t required = d.weight(i) + d.weight(j);
      Polynomial tail(n + 1, p.field());
      for (const auto& [m, c] : rel.tail.terms()) {
        tail.add_term(m.extended(static_cast<Exponent>(required - d(m))), c);
      }
      r.set_relation(j, i, rel.lambda, std::move(tail));
    }
  }
  return {std::move(r), MonomialOrdering::rees(ord), d.extended(1)};
}

Polynomial sigma(const Polynomial& f, const DegreeFunction& d) {
  require_nonzero(f, "sigma");
  return leading_homogeneous(d, f);
}

Polynomial homogenize(const Polynomial& f, const DegreeFunction& d) {
  require_nonzero(f, "homogenize");
  const std::uint64_t p = deg_poly(d, f);
  Polynomial out(f.nvars() + 1, f.field());
  for (const auto& [m, c] : f.terms()) out.add_term(m.extended(static_cast<Exponent>(p - d(m))), c);
  return out;
}

Polynomial homogenize_to_level(const Polynomial& f, const DegreeFunction& d, std::uint64_t p) {
  require_nonzero(f, "homogenize_to_level");
  const std::uint64_t df = deg_poly(d, f);
  if (p < df) {
    throw LevelTooLowError("level " + std::to_string(p) + " is below d(f) = " + std::to_string(df));
  }
  Polynomial out(f.nvars() + 1, f.field());
  for (const auto& [m, c] : f.terms()) out.add_term(m.extended(static_cast<Exponent>(p - d(m))), c);
  return out;
}

Polynomial dehomogenize(const Polynomial& h) {
  if (h.nvars() == 0) throw DimensionError("dehomogenize: no Z coordinate");
  Polynomial out(h.nvars() - 1, h.field());
  for (const auto& [m, c] : h.terms()) out.add_term(m.truncated(), c);
  return out;
}

Polynomial project_mod_Z(const Polynomial& h) {
  if (h.nvars() == 0) throw DimensionError("project_mod_Z: no Z coordinate");
  Polynomial out(h.nvars() - 1, h.field());
  for (const auto& [m, c] : h.terms()) {
    if (m[m.size() - 1] == 0) out.add_term(m.truncated(), c);
  }
  return out;
}

Lemma44Report lemma44_check(const AlgebraPresentation& p, const DegreeFunction& d,
                            const MonomialOrdering& ord, const Polynomial& f) {
  require_nonzero(f, "lemma44_check");
  const GradedTransformResult g = build_assoc_graded(p, d, ord);
  const ReesTransformResult r = build_rees(p, d, ord);
  const Polynomial s = sigma(f, d);
  const Polynomial h = homogenize(f, d);

  const std::uint64_t df = deg_poly(d, f);
  const std::uint64_t ds = deg_poly(g.degree, s);
  const std::uint64_t dh = deg_poly(r.degree, h);
  const Monomial lm = leading_monomial(ord, f);
  const Monomial lm_s = leading_monomial(g.ordering, s);
  const Monomial lm_h = leading_monomial(r.ordering, h);
  const Monomial lm_tilde = lm.extended(0);
  const Scalar lc = f.coefficient(lm);

  Lemma44Report report;
  auto check = [&](std::string name, bool ok, std::string detail) {
    report.pass = report.pass && ok;
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  check("deg-sigma", df == ds, "d(f) = " + std::to_string(df) + ", d(sigma f) = " + std::to_string(ds));
  check("deg-homog", df == dh, "d(f) = " + std::to_string(df) + ", d(~f) = " + std::to_string(dh));
  check("lm-sigma", lm_s == lm, "LM(sigma f) vs sigma(LM f)");
  check("lm-homog", lm_h == lm_tilde, "LM(~f) vs ~LM(f)");
  check("lc", s.coefficient(lm_s) == lc && h.coefficient(lm_h) == lc,
        "leading coefficient " + lc.to_string());
  return report;
}

}  // namespace solvalg

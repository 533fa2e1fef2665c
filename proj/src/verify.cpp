#include "solvalg/verify.hpp"

#include <stdexcept>

#include "linear_system.hpp"
#include "solvalg/errors.hpp"

namespace solvalg {

std::string to_string(TypeReport::Verdict v) {
  switch (v) {
    case TypeReport::Verdict::Graded:
      return "Graded";
    case TypeReport::Verdict::FilteredOnly:
      return "FilteredOnly";
    case TypeReport::Verdict::Neither:
      return "Neither";
  }
  return "?";
}

TypeReport check_graded_type(const AlgebraPresentation& p, const DegreeFunction& d) {
  if (d.size() != p.nvars()) {
    throw DimensionError("degree function on " + std::to_string(d.size()) +
                         " generators for a presentation on " + std::to_string(p.nvars()));
  }
  std::vector<TypeReport::Witness> below;
  std::vector<TypeReport::Witness> above;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    for (std::size_t j = i + 1; j < p.nvars(); ++j) {
      const std::uint64_t required = d.weight(i) + d.weight(j);
      for (const auto& [m, c] : p.relation(j, i).tail.terms()) {
        const std::uint64_t deg = d(m);
        if (deg < required) below.push_back({j, i, m, deg, required});
        if (deg > required) above.push_back({j, i, m, deg, required});
      }
    }
  }
  TypeReport report;
  if (!above.empty()) {
    report.verdict = TypeReport::Verdict::Neither;
    report.witnesses = std::move(above);
  } else if (!below.empty()) {
    report.verdict = TypeReport::Verdict::FilteredOnly;
    report.witnesses = std::move(below);
  }
  return report;
}

TypeReport check_filtered_type(const AlgebraPresentation& p, const DegreeFunction& d) {
  return check_graded_type(p, d);
}

std::optional<DegreeFunction> find_weights(const AlgebraPresentation& p, WeightMode mode,
                                           std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("find_weights: bound must be at least 1");
  const std::size_t n = p.nvars();
  // Unknowns m_0..m_{n-1}, then the weight sum s.
  detail::LinearSystem sys(n + 1);
  auto row = [&] { return detail::LinearConstraint{std::vector<BigInt>(n + 1, 0), 0, false}; };
  for (std::size_t k = 0; k < n; ++k) {
    auto lo = row();
    lo.a[k] = -1;
    lo.b = -1;
    sys.add(lo);
    auto hi = row();
    hi.a[k] = 1;
    hi.b = bound;
    sys.add(hi);
  }
  auto sum = row();
  sum.equality = true;
  for (std::size_t k = 0; k < n; ++k) sum.a[k] = 1;
  sum.a[n] = -1;
  sys.add(sum);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const auto& [m, c] : p.relation(j, i).tail.terms()) {
        // sum_k m_k alpha_k - m_i - m_j (= or <=) 0
        auto r = row();
        r.equality = mode == WeightMode::Graded;
        for (std::size_t k = 0; k < n; ++k) r.a[k] = m[k];
        r.a[i] -= 1;
        r.a[j] -= 1;
        sys.add(r);
      }
    }
  }
  if (!sys.consistent()) return std::nullopt;
  // Fix the smallest feasible sum first, then take the lexicographic minimum.
  const auto srange = sys.range_of(n);
  if (!srange) return std::nullopt;
  for (BigInt s = *srange->lo; s <= *srange->hi; ++s) {
    const detail::LinearSystem fixed = sys.substitute(n, s);
    if (!fixed.consistent()) continue;
    auto point = detail::lex_min_integer_point(fixed, n);
    if (!point) continue;
    std::vector<std::int64_t> weights(n);
    for (std::size_t k = 0; k < n; ++k) weights[k] = (*point)[k].convert_to<std::int64_t>();
    return DegreeFunction(weights);
  }
  return std::nullopt;
}

namespace {

struct TripleEntry {
  bool zero = true;
  bool unit = false;  // LH_d is the constant 1
  std::uint64_t degree = 0;
};

std::string describe(const Monomial& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

}  // namespace

DegreeLawReport verify_degree_laws(const SolvableAlgebra& alg, const DegreeFunction& d,
                                   Exponent box) {
  const std::size_t n = alg.nvars();
  if (d.size() != n) {
    throw DimensionError("degree function on " + std::to_string(d.size()) +
                         " generators for an algebra on " + std::to_string(n));
  }
  const std::vector<Monomial> mons = box_monomials(n, box);
  const std::size_t N = mons.size();
  const Field field = alg.field();
  const Scalar one = Scalar::one(field);
  DegreeLawReport report;
  auto fail = [&](char law, std::vector<Monomial> witness, std::string detail) {
    report.pass = false;
    report.law = law;
    report.witness = std::move(witness);
    report.detail = std::move(detail);
    return report;
  };

  std::vector<std::uint64_t> deg(N);
  for (std::size_t a = 0; a < N; ++a) deg[a] = d(mons[a]);

  std::vector<Polynomial> pair_products;
  pair_products.reserve(N * N);
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      Polynomial prod = alg.mul_monomials(mons[a], mons[b]);
      const std::uint64_t want = deg[a] + deg[b];
      if (prod.is_zero() || deg_poly(d, prod) != want) {
        return fail('a', {mons[a], mons[b]},
                    "d(product) = " + (prod.is_zero() ? std::string("undefined")
                                                      : std::to_string(deg_poly(d, prod))) +
                        ", expected " + std::to_string(want));
      }
      pair_products.push_back(std::move(prod));
    }
  }

  // table[(g * N + x) * N + h] describes a^g a^x a^h.
  std::vector<TripleEntry> table(N * N * N);
  for (std::size_t g = 0; g < N; ++g) {
    for (std::size_t x = 0; x < N; ++x) {
      const Polynomial& gx = pair_products[g * N + x];
      for (std::size_t h = 0; h < N; ++h) {
        const Polynomial prod = alg.mul(gx, Polynomial::term(mons[h], one));
        TripleEntry& e = table[(g * N + x) * N + h];
        if (prod.is_zero()) continue;
        e.zero = false;
        const Polynomial lh = leading_homogeneous(d, prod);
        e.degree = deg_poly(d, prod);
        e.unit = lh == Polynomial::constant(n, one);
        if (!e.unit && lh != Polynomial::term(mons[x], one) && !(deg[x] < e.degree)) {
          return fail('b', {mons[g], mons[x], mons[h]},
                      "d" + describe(mons[x]) + " = " + std::to_string(deg[x]) +
                          " is not below d(LH) = " + std::to_string(e.degree));
        }
      }
    }
  }

  for (std::size_t g = 0; g < N; ++g) {
    for (std::size_t h = 0; h < N; ++h) {
      for (std::size_t x = 0; x < N; ++x) {
        const TripleEntry& ex = table[(g * N + x) * N + h];
        if (ex.zero) continue;
        for (std::size_t y = 0; y < N; ++y) {
          if (!(deg[x] < deg[y])) continue;
          const TripleEntry& ey = table[(g * N + y) * N + h];
          if (ey.zero || ey.unit) continue;
          if (!(ex.degree < ey.degree)) {
            return fail('c', {mons[g], mons[x], mons[y], mons[h]},
                        "d(x) < d(y) but d(g x h) = " + std::to_string(ex.degree) +
                            " >= d(g y h) = " + std::to_string(ey.degree));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace solvalg

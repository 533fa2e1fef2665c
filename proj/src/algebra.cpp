#include "solvalg/algebra.hpp"

#include <mutex>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "solvalg/errors.hpp"

namespace solvalg {

struct SolvableAlgebra::Cache {
  struct PairHash {
    std::size_t operator()(const std::pair<Monomial, Monomial>& p) const noexcept {
      std::size_t seed = MonomialHash{}(p.first);
      boost::hash_combine(seed, MonomialHash{}(p.second));
      return seed;
    }
  };
  std::mutex mutex;
  // Node-based, so references to stored products survive later insertions.
  std::unordered_map<std::pair<Monomial, Monomial>, Polynomial, PairHash> products;
};

SolvableAlgebra::SolvableAlgebra(AlgebraPresentation presentation, MonomialOrdering ordering,
                                 std::uint64_t budget)
    : rewriter_(std::move(presentation), std::move(ordering), budget),
      cache_(std::make_shared<Cache>()) {}

namespace {

constexpr std::size_t kMaxDepth = 20000;

std::size_t last_nonzero(const Monomial& m) {
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] != 0) return i;
  }
  return m.size();
}

std::size_t first_nonzero(const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) return i;
  }
  return m.size();
}

bool already_sorted(const Monomial& alpha, const Monomial& beta) {
  const std::size_t last = last_nonzero(alpha);
  if (last == alpha.size()) return true;
  return first_nonzero(beta) >= last;
}

void add_scaled(Polynomial& out, const Polynomial& p, const Scalar& c) {
  if (c.is_one()) {
    for (const auto& [m, cm] : p.terms()) out.add_term(m, cm);
  } else {
    for (const auto& [m, cm] : p.terms()) out.add_term(m, c * cm);
  }
}

}  // namespace

// Products are built by peeling generators: a^alpha a^beta = a^alpha' (a_j a^beta)
// with a_j the last generator of alpha, and a_j a_i a^beta' is rewritten with the
// relation for (j, i). Every recursive call lands on a product whose leading
// monomial is smaller, or equal with a shorter left factor, so this terminates
// exactly when word rewriting does.
struct SolvableAlgebra::Run {
  const SolvableAlgebra& alg;
  std::uint64_t steps = 0;
  std::size_t depth = 0;

  const Polynomial& product(const Monomial& alpha, const Monomial& beta) {
    auto& products = alg.cache_->products;
    auto key = std::make_pair(alpha, beta);
    if (auto it = products.find(key); it != products.end()) return it->second;
    if (++depth > kMaxDepth) throw BudgetExceededError(alg.rewriter_.budget());
    const std::size_t n = alg.nvars();
    Polynomial result(n, alg.field());
    const std::size_t j = last_nonzero(alpha);
    if (alpha.total_degree() > 1) {
      Monomial rest = alpha;
      --rest[j];
      const Monomial aj = Monomial::generator(n, j);
      if (already_sorted(aj, beta)) {
        accumulate(result, rest, aj + beta, Scalar::one(alg.field()));
      } else {
        for (const auto& [m, c] : product(aj, beta).terms()) accumulate(result, rest, m, c);
      }
    } else {
      if (++steps > alg.rewriter_.budget()) throw BudgetExceededError(alg.rewriter_.budget());
      const std::size_t i = first_nonzero(beta);
      Monomial rest = beta;
      --rest[i];
      const Relation& rel = alg.presentation().relation(j, i);
      const Monomial ai = Monomial::generator(n, i);
      if (already_sorted(alpha, rest)) {
        accumulate(result, ai, alpha + rest, rel.lambda);
      } else {
        for (const auto& [m, c] : product(alpha, rest).terms()) {
          accumulate(result, ai, m, c * rel.lambda);
        }
      }
      for (const auto& [g, c] : rel.tail.terms()) accumulate(result, g, rest, c);
    }
    --depth;
    return products.emplace(std::move(key), std::move(result)).first->second;
  }

  // out += c * a^alpha a^beta; sorted pairs skip the cache.
  void accumulate(Polynomial& out, const Monomial& alpha, const Monomial& beta, const Scalar& c) {
    if (already_sorted(alpha, beta)) {
      out.add_term(alpha + beta, c);
    } else {
      add_scaled(out, product(alpha, beta), c);
    }
  }
};

Polynomial SolvableAlgebra::mul_monomials(const Monomial& alpha, const Monomial& beta) const {
  if (alpha.size() != nvars() || beta.size() != nvars()) {
    throw DimensionError("mul_monomials: monomials on " + std::to_string(alpha.size()) + " and " +
                         std::to_string(beta.size()) + " generators in an algebra on " +
                         std::to_string(nvars()));
  }
  if (already_sorted(alpha, beta)) return Polynomial::term(alpha + beta, Scalar::one(field()));
  std::lock_guard lock(cache_->mutex);
  Run run{*this};
  return run.product(alpha, beta);
}

Polynomial SolvableAlgebra::mul(const Polynomial& f, const Polynomial& g) const {
  if (f.nvars() != nvars() || g.nvars() != nvars()) {
    throw DimensionError("mul: operands on " + std::to_string(f.nvars()) + " and " +
                         std::to_string(g.nvars()) + " generators in an algebra on " +
                         std::to_string(nvars()));
  }
  if (f.field() != field() || g.field() != field()) {
    throw FieldMismatchError("mul: operands are not over " + field().to_string());
  }
  Polynomial out(nvars(), field());
  std::lock_guard lock(cache_->mutex);
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      const Scalar c = ca * cb;
      if (already_sorted(a, b)) {
        out.add_term(a + b, c);
        continue;
      }
      Run run{*this};
      add_scaled(out, run.product(a, b), c);
    }
  }
  return out;
}

Polynomial SolvableAlgebra::pow(const Polynomial& f, unsigned k) const {
  Polynomial out = presentation().one();
  for (unsigned i = 0; i < k; ++i) out = mul(out, f);
  return out;
}

Polynomial mul_monomials(const AlgebraPresentation& p, const MonomialOrdering& ord,
                         const Monomial& alpha, const Monomial& beta) {
  return SolvableAlgebra(p, ord).mul_monomials(alpha, beta);
}

Polynomial mul(const AlgebraPresentation& p, const MonomialOrdering& ord, const Polynomial& f,
               const Polynomial& g) {
  return SolvableAlgebra(p, ord).mul(f, g);
}

SolvabilityReport check_solvable(const AlgebraPresentation& p, const MonomialOrdering& ord) {
  if (ord.nvars() != p.nvars()) {
    throw DimensionError("check_solvable: ordering and presentation disagree on generator count");
  }
  const std::size_t n = p.nvars();
  SolvabilityReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Relation& rel = p.relation(j, i);
      Monomial pair(n);
      ++pair[i];
      ++pair[j];
      if (rel.lambda.is_zero()) {
        report.pass = false;
        report.violation = SolvabilityReport::Violation{j, i, pair};
        return report;
      }
      if (rel.tail.is_zero()) continue;
      Monomial lm = leading_monomial(ord, rel.tail);
      if (ord.compare(lm, pair) >= 0) {
        report.pass = false;
        report.violation = SolvabilityReport::Violation{j, i, std::move(lm)};
        return report;
      }
    }
  }
  return report;
}

ConfluenceReport check_pbw_confluence(const AlgebraPresentation& p, const MonomialOrdering& ord,
                                      std::uint64_t budget) {
  const WordRewriter rewriter(p, ord, budget);
  const std::size_t n = p.nvars();
  const Scalar one = Scalar::one(p.field());
  ConfluenceReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Word word{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j),
                        static_cast<std::uint32_t>(i)};
        ++report.triples_checked;
        try {
          Polynomial left = rewriter.normalize(rewriter.rewrite_at(word, 0, one));
          Polynomial right = rewriter.normalize(rewriter.rewrite_at(word, 1, one));
          if (left != right) {
            report.status = ConfluenceReport::Status::Fail;
            report.triple = std::array<std::size_t, 3>{k, j, i};
            report.left = std::move(left);
            report.right = std::move(right);
            return report;
          }
        } catch (const BudgetExceededError&) {
          report.status = ConfluenceReport::Status::BudgetExceeded;
          report.triple = std::array<std::size_t, 3>{k, j, i};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace solvalg

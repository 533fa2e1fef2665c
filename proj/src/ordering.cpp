#include "solvalg/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "solvalg/errors.hpp"

namespace solvalg {

namespace {

void validate_priority(const std::vector<std::size_t>& priority) {
  std::vector<bool> seen(priority.size(), false);
  for (std::size_t g : priority) {
    if (g >= priority.size() || seen[g]) {
      throw InvalidOrderingError("generator priority list must be a permutation");
    }
    seen[g] = true;
  }
}

std::uint64_t span_degree(const DegreeFunction& d, std::span<const Exponent> e) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(e[i]), d.weight(i), &term) ||
        __builtin_add_overflow(sum, term, &sum)) {
      throw OverflowError("degree overflow");
    }
  }
  return sum;
}

}  // namespace

MonomialOrdering MonomialOrdering::lex(std::vector<std::size_t> priority) {
  validate_priority(priority);
  MonomialOrdering ord(OrderingKind::Lex, priority.size());
  ord.priority_ = std::move(priority);
  return ord;
}

MonomialOrdering MonomialOrdering::natural_lex(std::size_t nvars) {
  std::vector<std::size_t> priority(nvars);
  std::iota(priority.begin(), priority.end(), std::size_t{0});
  return lex(std::move(priority));
}

MonomialOrdering MonomialOrdering::grlex(DegreeFunction d, std::vector<std::size_t> priority) {
  validate_priority(priority);
  if (d.size() != priority.size()) {
    throw InvalidDegreeFunctionError("grlex: weight vector length differs from generator count");
  }
  MonomialOrdering ord(OrderingKind::GrLex, priority.size());
  ord.priority_ = std::move(priority);
  ord.degree_ = std::move(d);
  return ord;
}

MonomialOrdering MonomialOrdering::grevlex(DegreeFunction d, std::vector<std::size_t> priority) {
  validate_priority(priority);
  if (d.size() != priority.size()) {
    throw InvalidDegreeFunctionError("grevlex: weight vector length differs from generator count");
  }
  MonomialOrdering ord(OrderingKind::GrevLex, priority.size());
  ord.priority_ = std::move(priority);
  ord.degree_ = std::move(d);
  return ord;
}

MonomialOrdering MonomialOrdering::graded(const MonomialOrdering& base, DegreeFunction d) {
  if (d.size() != base.nvars()) {
    throw InvalidDegreeFunctionError("graded ordering: weight vector length differs from base");
  }
  MonomialOrdering ord(OrderingKind::Graded, base.nvars());
  ord.degree_ = std::move(d);
  ord.base_ = std::make_shared<const MonomialOrdering>(base);
  return ord;
}

MonomialOrdering MonomialOrdering::rees(const MonomialOrdering& base) {
  MonomialOrdering ord(OrderingKind::Rees, base.nvars() + 1);
  ord.base_ = std::make_shared<const MonomialOrdering>(base);
  return ord;
}

std::strong_ordering MonomialOrdering::compare_lex(std::span<const Exponent> a,
                                                   std::span<const Exponent> b) const {
  for (std::size_t g : priority_) {
    if (a[g] != b[g]) return a[g] <=> b[g];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrdering::compare_revlex(std::span<const Exponent> a,
                                                      std::span<const Exponent> b) const {
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    const std::size_t g = *it;
    if (a[g] != b[g]) return b[g] <=> a[g];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrdering::compare(std::span<const Exponent> a,
                                               std::span<const Exponent> b) const {
  switch (kind_) {
    case OrderingKind::Lex:
      return compare_lex(a, b);
    case OrderingKind::GrLex:
    case OrderingKind::GrevLex: {
      const auto da = span_degree(*degree_, a);
      const auto db = span_degree(*degree_, b);
      if (da != db) return da <=> db;
      return kind_ == OrderingKind::GrLex ? compare_lex(a, b) : compare_revlex(a, b);
    }
    case OrderingKind::Graded: {
      const auto da = span_degree(*degree_, a);
      const auto db = span_degree(*degree_, b);
      if (da != db) return da <=> db;
      return base_->compare(a, b);
    }
    case OrderingKind::Rees: {
      const std::size_t n = nvars_ - 1;
      const auto head = base_->compare(a.first(n), b.first(n));
      if (head != 0) return head;
      return a[n] <=> b[n];
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrdering::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != nvars_ || b.size() != nvars_) {
    throw DimensionError("ordering on " + std::to_string(nvars_) +
                         " generators applied to monomials on " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  }
  return compare(a.exps(), b.exps());
}

bool MonomialOrdering::is_degree_first(const DegreeFunction& d) const {
  switch (kind_) {
    case OrderingKind::GrLex:
    case OrderingKind::GrevLex:
    case OrderingKind::Graded:
      return degree_ && *degree_ == d;
    default:
      return false;
  }
}

bool operator==(const MonomialOrdering& a, const MonomialOrdering& b) {
  if (a.kind_ != b.kind_ || a.nvars_ != b.nvars_ || a.priority_ != b.priority_ ||
      a.degree_ != b.degree_) {
    return false;
  }
  if (static_cast<bool>(a.base_) != static_cast<bool>(b.base_)) return false;
  return !a.base_ || *a.base_ == *b.base_;
}

std::strong_ordering compare(const MonomialOrdering& ord, const Monomial& a, const Monomial& b) {
  return ord.compare(a, b);
}

MonomialOrdering make_graded(const MonomialOrdering& base, const DegreeFunction& d) {
  return MonomialOrdering::graded(base, d);
}

MonomialOrdering graded_ordering_for(const MonomialOrdering& ord, const DegreeFunction& d) {
  return ord.is_degree_first(d) ? ord : make_graded(ord, d);
}

Monomial leading_monomial(const MonomialOrdering& ord, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("leading monomial of the zero polynomial");
  if (f.nvars() != ord.nvars()) {
    throw DimensionError("ordering on " + std::to_string(ord.nvars()) +
                         " generators applied to a polynomial on " + std::to_string(f.nvars()));
  }
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (best == nullptr || ord.compare(m.exps(), best->exps()) > 0) best = &m;
  }
  return *best;
}

GradedOrderingReport is_graded_wrt(const MonomialOrdering& ord, const DegreeFunction& d,
                                   Exponent box) {
  if (d.size() != ord.nvars()) {
    throw DimensionError("degree function and ordering disagree on the generator count");
  }
  const auto monomials = box_monomials(ord.nvars(), box);
  std::vector<std::uint64_t> degrees;
  degrees.reserve(monomials.size());
  for (const auto& m : monomials) degrees.push_back(d(m));

  GradedOrderingReport report;
  for (std::size_t x = 0; x < monomials.size(); ++x) {
    std::optional<std::size_t> partner;
    for (std::size_t y = 0; y < monomials.size(); ++y) {
      if (degrees[x] >= degrees[y]) continue;
      if (ord.compare(monomials[x], monomials[y]) <= 0) continue;
      if (!partner || degrees[y] > degrees[*partner]) partner = y;
    }
    if (partner) {
      report.pass = false;
      report.witness = std::make_pair(monomials[x], monomials[*partner]);
      return report;
    }
  }
  return report;
}

}  // namespace solvalg

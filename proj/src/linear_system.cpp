#include "linear_system.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace solvalg::detail {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

LinearConstraint combine(const BigInt& s, const LinearConstraint& r, const BigInt& t,
                         const LinearConstraint& e, bool equality) {
  LinearConstraint out;
  out.a.resize(r.a.size());
  for (std::size_t k = 0; k < r.a.size(); ++k) out.a[k] = s * r.a[k] + t * e.a[k];
  out.b = s * r.b + t * e.b;
  out.equality = equality;
  return out;
}

}  // namespace

void LinearSystem::add(LinearConstraint row) {
  if (!consistent_) return;
  BigInt g = 0;
  for (const auto& c : row.a) g = gcd(g, BigInt(abs(c)));
  if (g == 0) {
    if (row.equality ? row.b != 0 : row.b < 0) consistent_ = false;
    return;
  }
  if (row.equality) {
    if (row.b % g != 0) {
      consistent_ = false;
      return;
    }
    for (auto& c : row.a) c /= g;
    row.b /= g;
    // Canonical sign: first nonzero coefficient positive.
    auto first = std::find_if(row.a.begin(), row.a.end(), [](const BigInt& c) { return c != 0; });
    if (*first < 0) {
      for (auto& c : row.a) c = -c;
      row.b = -row.b;
    }
  } else {
    for (auto& c : row.a) c /= g;
    row.b = floor_div(row.b, g);
  }
  for (const auto& existing : rows_) {
    if (existing.equality == row.equality && existing.a == row.a) {
      if (row.equality) {
        if (existing.b != row.b) consistent_ = false;
        return;
      }
      if (existing.b <= row.b) return;
    }
  }
  if (!row.equality) {
    std::erase_if(rows_, [&](const LinearConstraint& e) {
      return !e.equality && e.a == row.a && e.b > row.b;
    });
  }
  rows_.push_back(std::move(row));
}

LinearSystem LinearSystem::eliminate(std::size_t v) const {
  LinearSystem out(nvars_);
  if (!consistent_) {
    out.consistent_ = false;
    return out;
  }
  auto pivot = std::find_if(rows_.begin(), rows_.end(),
                            [v](const LinearConstraint& r) { return r.equality && r.a[v] != 0; });
  if (pivot != rows_.end()) {
    const LinearConstraint& e = *pivot;
    const BigInt ev = abs(e.a[v]);
    const int es = sign(e.a[v]);
    for (const auto& r : rows_) {
      if (&r == &e) continue;
      if (r.a[v] == 0) {
        out.add(r);
        continue;
      }
      out.add(combine(ev, r, BigInt(-es * r.a[v]), e, r.equality));
    }
    return out;
  }
  std::vector<const LinearConstraint*> pos, neg;
  for (const auto& r : rows_) {
    if (r.a[v] > 0) {
      pos.push_back(&r);
    } else if (r.a[v] < 0) {
      neg.push_back(&r);
    } else {
      out.add(r);
    }
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) out.add(combine(BigInt(-q->a[v]), *p, p->a[v], *q, false));
  }
  return out;
}

LinearSystem LinearSystem::substitute(std::size_t v, const BigInt& value) const {
  LinearSystem out(nvars_);
  out.consistent_ = consistent_;
  for (auto r : rows_) {
    r.b -= r.a[v] * value;
    r.a[v] = 0;
    out.add(std::move(r));
  }
  return out;
}

std::optional<LinearSystem::Range> LinearSystem::range_of(std::size_t v) const {
  LinearSystem sys = *this;
  for (std::size_t k = 0; k < nvars_ && sys.consistent(); ++k) {
    if (k != v) sys = sys.eliminate(k);
  }
  if (!sys.consistent()) return std::nullopt;
  Range range;
  auto tighten_lo = [&](BigInt x) {
    if (!range.lo || x > *range.lo) range.lo = std::move(x);
  };
  auto tighten_hi = [&](BigInt x) {
    if (!range.hi || x < *range.hi) range.hi = std::move(x);
  };
  for (const auto& r : sys.rows_) {
    const BigInt& c = r.a[v];
    if (r.equality) {
      if (r.b % c != 0) return std::nullopt;
      tighten_lo(r.b / c);
      tighten_hi(r.b / c);
    } else if (c > 0) {
      tighten_hi(floor_div(r.b, c));
    } else {
      tighten_lo(ceil_div(r.b, c));
    }
  }
  if (range.lo && range.hi && *range.lo > *range.hi) return std::nullopt;
  return range;
}

namespace {

bool search(const LinearSystem& sys, std::size_t v, std::vector<BigInt>& point) {
  if (v == point.size()) return sys.consistent();
  const auto range = sys.range_of(v);
  if (!range) return false;
  if (!range->lo || !range->hi) throw std::logic_error("lex_min_integer_point: unbounded unknown");
  for (BigInt x = *range->lo; x <= *range->hi; ++x) {
    point[v] = x;
    if (search(sys.substitute(v, x), v + 1, point)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<BigInt>> lex_min_integer_point(const LinearSystem& sys,
                                                         std::size_t count) {
  std::vector<BigInt> point(count);
  if (!search(sys, 0, point)) return std::nullopt;
  return point;
}

}  // namespace solvalg::detail

#include "solvalg/monomial.hpp"

#include <limits>
#include <string>

#include <boost/container_hash/hash.hpp>

#include "solvalg/errors.hpp"

namespace solvalg {

Monomial Monomial::generator(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("generator index out of range");
  Monomial m(nvars);
  m.exps_[i] = 1;
  return m;
}

bool Monomial::is_one() const {
  for (Exponent e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t sum = 0;
  for (Exponent e : exps_) sum += e;
  return sum;
}

Monomial Monomial::operator+(const Monomial& rhs) const {
  if (size() != rhs.size()) {
    throw DimensionError("monomials on " + std::to_string(size()) + " and " +
                         std::to_string(rhs.size()) + " generators");
  }
  Monomial out(*this);
  for (std::size_t i = 0; i < size(); ++i) {
    if (out.exps_[i] > std::numeric_limits<Exponent>::max() - rhs.exps_[i]) {
      throw OverflowError("exponent overflow");
    }
    out.exps_[i] += rhs.exps_[i];
  }
  return out;
}

Monomial Monomial::extended(Exponent last) const {
  Monomial out(*this);
  out.exps_.push_back(last);
  return out;
}

Monomial Monomial::truncated() const {
  if (exps_.empty()) throw DimensionError("cannot truncate an empty monomial");
  Monomial out(*this);
  out.exps_.pop_back();
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  const auto e = m.exps();
  return boost::hash_range(e.begin(), e.end());
}

std::vector<Monomial> box_monomials(std::size_t nvars, Exponent max_exp) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  while (true) {
    out.push_back(cur);
    std::size_t k = nvars;
    while (k > 0) {
      --k;
      if (cur[k] < max_exp) {
        ++cur[k];
        break;
      }
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (nvars == 0) return out;
  }
}

}  // namespace solvalg

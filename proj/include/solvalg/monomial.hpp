#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace solvalg {

using Exponent = std::uint32_t;

/// Exponent vector alpha of the PBW basis element a^alpha = a_1^alpha_1 ... a_n^alpha_n.
/// The all-zero vector is the identity monomial.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {}
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  /// The generator a_i as a monomial on nvars generators.
  static Monomial generator(std::size_t nvars, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exps() const { return {exps_.data(), exps_.size()}; }

  bool is_one() const;
  std::uint64_t total_degree() const;

  /// Exponent-wise sum (the PBW index of a^alpha a^beta in the commutative image).
  /// Throws DimensionError on length mismatch, OverflowError on exponent overflow.
  Monomial operator+(const Monomial& rhs) const;

  /// Monomial with one more trailing coordinate (used for the Rees variable).
  Monomial extended(Exponent last) const;
  /// Monomial with the last coordinate dropped.
  Monomial truncated() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Canonical storage order: lexicographic on the raw exponent vector.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  Storage exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials on nvars generators with every exponent in [0, max_exp],
/// in odometer order (last coordinate fastest).
std::vector<Monomial> box_monomials(std::size_t nvars, Exponent max_exp);

}  // namespace solvalg

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace solvalg {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Ground field descriptor: the rationals Q or a prime field GF(p).
class Field {
 public:
  /// Largest accepted characteristic; keeps residue products inside 64 bits.
  static constexpr std::uint64_t kMaxPrime = 4294967291ULL;

  static Field rationals() { return Field(0); }
  /// Throws InvalidPresentationError unless p is a prime <= kMaxPrime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Exact element of a Field. Rationals are kept reduced with a positive
/// denominator; GF(p) residues live in [0, p). Rationals whose numerator and
/// denominator fit in 64 bits are stored inline and only spill to GMP when
/// they grow past that.
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals()) {}
  explicit Scalar(Field field) : field_(field) {}
  Scalar(Field field, std::int64_t value);
  Scalar(Field field, const Rational& value);

  static Scalar zero(Field field) { return Scalar(field); }
  static Scalar one(Field field) { return Scalar(field, 1); }

  /// Parses "n" or "n/d" (optional leading sign) into the given field.
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// True for rationals below zero; always false in GF(p).
  bool is_negative() const;

  Rational rational() const;
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;
  void set_rational(const Rational& v);
  void set_small(__int128 num, __int128 den);

  Field field_;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Rational> big_;  // set only when the value leaves 64 bits
  std::uint64_t r_ = 0;
};

}  // namespace solvalg

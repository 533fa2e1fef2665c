#include "solvalg/scalar.hpp"

#include <cctype>
#include <limits>

#include "solvalg/errors.hpp"

namespace solvalg {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce_mod(const BigInt& v, std::uint64_t p) {
  BigInt r = v % BigInt(p);
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

constexpr __int128 kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v <= kSmallMax && v >= -kSmallMax; }

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt to_big(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

}  // namespace

void Scalar::set_small(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (fits(num) && fits(den)) {
    big_.reset();
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    return;
  }
  big_ = std::make_shared<const Rational>(to_big(num), to_big(den));
}

void Scalar::set_rational(const Rational& v) {
  const BigInt& n = boost::multiprecision::numerator(v);
  const BigInt& d = boost::multiprecision::denominator(v);
  const BigInt lim = std::numeric_limits<std::int64_t>::max();
  if (n <= lim && n >= -lim && d <= lim) {
    big_.reset();
    num_ = n.convert_to<std::int64_t>();
    den_ = d.convert_to<std::int64_t>();
    return;
  }
  big_ = std::make_shared<const Rational>(v);
}

Rational Scalar::rational() const {
  if (big_) return *big_;
  return Rational(BigInt(num_), BigInt(den_));
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw InvalidPresentationError("GF(" + std::to_string(p) +
                                   "): characteristic must be a prime below 2^32");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field field, std::int64_t value) : field_(field) {
  if (field_.is_rational()) {
    set_small(value, 1);
  } else {
    r_ = reduce_mod(BigInt(value), field_.characteristic());
  }
}

Scalar::Scalar(Field field, const Rational& value) : field_(field) {
  if (field_.is_rational()) {
    set_rational(value);
    return;
  }
  const std::uint64_t p = field_.characteristic();
  const std::uint64_t num = reduce_mod(boost::multiprecision::numerator(value), p);
  const std::uint64_t den = reduce_mod(boost::multiprecision::denominator(value), p);
  if (den == 0) {
    throw AlgebraError("denominator vanishes in " + field_.to_string());
  }
  r_ = num * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  auto bad = [&] { return AlgebraError("malformed number '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](BigInt& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw bad();
    out = BigInt(std::string(text.substr(start, pos - start)));
  };
  BigInt num;
  BigInt den = 1;
  digits(num);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    digits(den);
    if (den == 0) throw AlgebraError("zero denominator in '" + std::string(text) + "'");
  }
  if (pos != text.size()) throw bad();
  if (negative) num = -num;
  return Scalar(field, Rational(num, den));
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? !big_ && num_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? !big_ && num_ == 1 && den_ == 1 : r_ == 1;
}

bool Scalar::is_negative() const {
  if (!field_.is_rational()) return false;
  return big_ ? *big_ < 0 : num_ < 0;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatchError("cannot combine scalars of " + field_.to_string() + " and " +
                             other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rational()) {
    if (big_) {
      out.set_rational(-*big_);
    } else {
      out.num_ = -num_;
      out.den_ = den_;
    }
  } else {
    out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  Scalar out(field_);
  if (field_.is_rational()) {
    if (big_) {
      out.set_rational(1 / *big_);
    } else {
      out.set_small(den_, num_);
    }
  } else {
    const std::uint64_t p = field_.characteristic();
    out.r_ = pow_mod(r_, p - 2, p);
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    if (!big_ && !rhs.big_) {
      if (den_ == 1 && rhs.den_ == 1) {
        set_small(static_cast<__int128>(num_) + rhs.num_, 1);
      } else {
        set_small(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                  static_cast<__int128>(den_) * rhs.den_);
      }
    } else {
      set_rational(rational() + rhs.rational());
    }
  } else {
    r_ = (r_ + rhs.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    *this += -rhs;
  } else {
    const std::uint64_t p = field_.characteristic();
    r_ = (r_ + p - rhs.r_) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    if (!big_ && !rhs.big_) {
      if (rhs.den_ == 1 && den_ == 1) {
        set_small(static_cast<__int128>(num_) * rhs.num_, 1);
      } else {
        set_small(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
      }
    } else {
      set_rational(rational() * rhs.rational());
    }
  } else {
    r_ = r_ * rhs.r_ % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (!a.field_.is_rational()) return a.r_ == b.r_;
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return a.big_ ? *a.big_ == *b.big_ : a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rational()) return std::to_string(r_);
  if (big_) return big_->str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace solvalg

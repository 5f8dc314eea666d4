#include "heckeforge/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace heckeforge {

namespace {

mpz_class to_mpz_value(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

bool fits_int64(const mpz_class& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

}  // namespace

Integer::Integer(const mpz_class& v) : big_(std::make_unique<mpz_class>(v)) { normalize(); }

Integer::Integer(std::string_view decimal) {
  std::string s(decimal);
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
  big_ = std::make_unique<mpz_class>(v);
  normalize();
}

Integer::Integer(const Integer& other) : small_(other.small_) {
  if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
  if (this == &other) return *this;
  small_ = other.small_;
  if (other.big_) {
    big_ = std::make_unique<mpz_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Integer::normalize() {
  if (big_ && fits_int64(*big_)) {
    small_ = big_->get_si();
    big_.reset();
  }
}

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits");
  return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : to_mpz_value(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() + rhs.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() - rhs.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() * rhs.to_mpz());
  normalize();
  return *this;
}

Integer Integer::operator-() const {
  Integer r;
  r -= *this;
  return r;
}

bool Integer::divisible_by(const Integer& rhs) const {
  if (rhs.is_zero()) return is_zero();
  if (!big_ && !rhs.big_) {
    if (rhs.small_ == -1) return true;
    return small_ % rhs.small_ == 0;
  }
  mpz_class a = to_mpz();
  mpz_class b = rhs.to_mpz();
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

Integer Integer::divexact(const Integer& rhs) const {
  if (rhs.is_zero() || !divisible_by(rhs)) {
    throw std::domain_error("inexact integer division: " + to_string() + " / " + rhs.to_string());
  }
  if (!big_ && !rhs.big_ && !(small_ == std::numeric_limits<std::int64_t>::min() && rhs.small_ == -1)) {
    return Integer(small_ / rhs.small_);
  }
  mpz_class a = to_mpz();
  mpz_class b = rhs.to_mpz();
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return Integer(q);
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer pow(const Integer& base, unsigned exponent) {
  Integer result(1);
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace heckeforge

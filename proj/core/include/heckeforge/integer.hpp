#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace heckeforge {

// Arbitrary-precision integer with an inline int64 fast path.  Values that
// fit in 64 bits never touch the heap; overflow promotes to GMP and results
// that shrink back are demoted again.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : small_(v) {}  // NOLINT: implicit by design of arithmetic use
  Integer(int v) : small_(v) {}           // NOLINT
  explicit Integer(const mpz_class& v);
  explicit Integer(std::string_view decimal);

  Integer(const Integer& other);
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_small() const { return !big_; }
  int sign() const;
  std::int64_t to_int64() const;  // throws std::overflow_error if too large
  mpz_class to_mpz() const;
  std::string to_string() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  Integer operator-() const;

  // Exact division; throws std::domain_error when rhs does not divide *this.
  Integer divexact(const Integer& rhs) const;
  bool divisible_by(const Integer& rhs) const;

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  void normalize();

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer pow(const Integer& base, unsigned exponent);

}  // namespace heckeforge

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "heckeforge/integer.hpp"

namespace heckeforge {

// Laurent polynomial in q with integer coefficients, stored sparsely as
// (exponent, coefficient) pairs sorted by ascending exponent.  Zero
// coefficients are never stored, so the zero polynomial has no terms.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT: constants promote implicitly
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}  // NOLINT

  static LaurentPoly monomial(int exponent, Integer coeff = 1);
  static LaurentPoly q() { return monomial(1); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()
  Integer coeff(int exponent) const;

  // True iff every exponent is nonnegative (membership in Z[q]).
  bool is_polynomial() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  // Multiply by q^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const Integer& c) const;

  // In-place this += c * q^k * p, the inner step of every Hecke product.
  void add_scaled(const LaurentPoly& p, int k, const Integer& c);

  Integer eval(const Integer& q0) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

 private:
  std::vector<Term> terms_;
};

// Returns c with a == b * c in Z[q, q^-1]; throws Error(NotDivisible) otherwise.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace heckeforge

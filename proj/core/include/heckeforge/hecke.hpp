#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "heckeforge/affine_weyl.hpp"
#include "heckeforge/integer.hpp"
#include "heckeforge/laurent_poly.hpp"

namespace heckeforge {

// Element of the generic Iwahori-Hecke algebra: a finitely supported
// Z[q, q^-1]-combination of the basis {T_x : x in W}.
class HeckeElement {
 public:
  using TermMap = std::unordered_map<ExtAffineElement, LaurentPoly, ExtAffineHash>;

  HeckeElement() = default;
  explicit HeckeElement(AffineWeylPtr group) : group_(std::move(group)) {}

  static HeckeElement basis(AffineWeylPtr group, const ExtAffineElement& x, LaurentPoly coeff = 1);
  static HeckeElement unit(AffineWeylPtr group);

  const AffineWeylPtr& group() const { return group_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const ExtAffineElement& x) const;

  // Terms in canonical (length, lam, w) order.
  std::vector<std::pair<ExtAffineElement, LaurentPoly>> sorted_terms() const;

  // All coefficients lie in Z[q].
  bool is_polynomial() const;

  void add_term(const ExtAffineElement& x, const LaurentPoly& c);
  // this += c * h
  void add_scaled(const HeckeElement& h, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& rhs);
  HeckeElement& operator-=(const HeckeElement& rhs);
  HeckeElement operator-() const;
  HeckeElement scaled(const LaurentPoly& c) const;
  HeckeElement shifted(int k) const;  // multiply by q^k

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  // T_s * this and this * T_s for an affine simple reflection s.
  HeckeElement left_mul_generator(int label) const;
  HeckeElement right_mul_generator(int label) const;
  // T_x * this and this * T_x for a single basis element.
  HeckeElement left_mul_basis(const ExtAffineElement& x) const;
  HeckeElement right_mul_basis(const ExtAffineElement& x) const;
  // Multiplication by length-zero elements just relabels the support.
  HeckeElement left_mul_omega(const ExtAffineElement& omega) const;
  HeckeElement right_mul_omega(const ExtAffineElement& omega) const;

 private:
  void prune();

  AffineWeylPtr group_;
  TermMap terms_;
};

// Product in H^I(q): T_s T_w = T_{sw} if l(sw) > l(w), else
// q T_{sw} + (q-1) T_w, applied along reduced words.  Throws
// Error(ContextMismatch) when the operands live over different groups.
HeckeElement h_mul(const HeckeElement& a, const HeckeElement& b);
inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return h_mul(a, b); }

// T_w^{-1}, built from T_s^{-1} = q^{-1} T_s + (q^{-1} - 1).
HeckeElement h_invert_basis(const AffineWeylPtr& group, const ExtAffineElement& w);

// [Delta_w] = (-1)^{l(w)} T_w.
HeckeElement standard_class(const AffineWeylPtr& group, const ExtAffineElement& w);
// [nabla_w] = prod over a reduced word of (-T_s + (q-1)), times T_omega.
HeckeElement costandard_class(const AffineWeylPtr& group, const ExtAffineElement& w);
// [nabla_w]^{-1}, from [nabla_s]^{-1} = -q^{-1} T_s.
HeckeElement costandard_inverse(const AffineWeylPtr& group, const ExtAffineElement& w);

// Element of the Hecke algebra specialized at an integer q0, with its own
// multiplication (the quadratic relation read with q = q0).
class SpecializedHeckeElement {
 public:
  using TermMap = std::unordered_map<ExtAffineElement, Integer, ExtAffineHash>;

  SpecializedHeckeElement(AffineWeylPtr group, Integer q0) : group_(std::move(group)), q0_(std::move(q0)) {}

  const AffineWeylPtr& group() const { return group_; }
  const Integer& q0() const { return q0_; }
  const TermMap& terms() const { return terms_; }
  void add_term(const ExtAffineElement& x, const Integer& c);
  std::vector<std::pair<ExtAffineElement, Integer>> sorted_terms() const;
  SpecializedHeckeElement left_mul_generator(int label) const;
  SpecializedHeckeElement left_mul_basis(const ExtAffineElement& x) const;
  friend bool operator==(const SpecializedHeckeElement& a, const SpecializedHeckeElement& b);

 private:
  AffineWeylPtr group_;
  Integer q0_;
  TermMap terms_;
};

SpecializedHeckeElement h_specialize(const HeckeElement& a, const Integer& q0);
SpecializedHeckeElement specialized_mul(const SpecializedHeckeElement& a, const SpecializedHeckeElement& b);

}  // namespace heckeforge

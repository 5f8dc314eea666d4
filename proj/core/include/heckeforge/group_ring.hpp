#pragma once

#include <map>
#include <string>

#include "heckeforge/cocharacter.hpp"
#include "heckeforge/integer.hpp"
#include "heckeforge/root_datum.hpp"

namespace heckeforge {

// Formal sum  sum_lam c_lam e^lam  in the group ring Z[X_*(T)].
class GroupRingElement {
 public:
  using TermMap = std::map<Cocharacter, Integer>;

  GroupRingElement() = default;
  static GroupRingElement monomial(const Cocharacter& lam, Integer c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Cocharacter& lam) const;
  void add_term(const Cocharacter& lam, const Integer& c);

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement scaled(const Integer& c) const;
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return gr_mul(a, b); }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);

// sum over w in W0 of det(w) * (w . a).
GroupRingElement gr_weyl_symmetrize(const RootDatum& rd, const GroupRingElement& a);

// Exact quotient a / b using the monomial order (<2 rho, lam>, then lex).
// Throws Error(NotDivisible).
GroupRingElement gr_divide_exact(const RootDatum& rd, const GroupRingElement& a, const GroupRingElement& b);

}  // namespace heckeforge

#include "heckeforge/group_ring.hpp"

#include <sstream>

#include "heckeforge/error.hpp"

namespace heckeforge {

GroupRingElement GroupRingElement::monomial(const Cocharacter& lam, Integer c) {
  GroupRingElement g;
  g.add_term(lam, c);
  return g;
}

Integer GroupRingElement::coeff(const Cocharacter& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const Cocharacter& lam, const Integer& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [lam, c] : rhs.terms_) add_term(lam, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [lam, c] : rhs.terms_) add_term(lam, -c);
  return *this;
}

GroupRingElement GroupRingElement::scaled(const Integer& c) const {
  GroupRingElement r;
  for (const auto& [lam, d] : terms_) r.add_term(lam, d * c);
  return r;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r;
  for (const auto& [x, c] : a.terms_) {
    for (const auto& [y, d] : b.terms_) r.add_term(x + y, c * d);
  }
  return r;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*e^" << lam;
  }
  return os.str();
}

GroupRingElement gr_weyl_symmetrize(const RootDatum& rd, const GroupRingElement& a) {
  GroupRingElement r;
  for (std::uint32_t w = 0; w < rd.weyl_order(); ++w) {
    const Integer sign(rd.det({w}));
    for (const auto& [lam, c] : a.terms()) r.add_term(rd.act({w}, lam), c * sign);
  }
  return r;
}

GroupRingElement gr_divide_exact(const RootDatum& rd, const GroupRingElement& a, const GroupRingElement& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero in the group ring");
  // Additive total order on X_*: compare <2rho, .>, then lexicographically.
  auto greater = [&rd](const Cocharacter& x, const Cocharacter& y) {
    const int hx = rd.rho2_pairing(x);
    const int hy = rd.rho2_pairing(y);
    if (hx != hy) return hx > hy;
    return x > y;
  };
  auto leading = [&](const GroupRingElement& g) {
    auto it = g.terms().begin();
    auto best = it;
    for (; it != g.terms().end(); ++it) {
      if (greater(it->first, best->first)) best = it;
    }
    return *best;
  };
  const auto [blam, bc] = leading(b);
  auto lowest = [&](const GroupRingElement& g) {
    Cocharacter low = g.terms().begin()->first;
    for (const auto& [x, d] : g.terms()) {
      if (greater(low, x)) low = x;
    }
    return low;
  };
  // An exact quotient has lowest term lowest(a) - lowest(b); anything below
  // that proves the division cannot terminate.
  const Cocharacter floor = a.is_zero() ? Cocharacter() : lowest(a) - lowest(b);
  GroupRingElement rem = a;
  GroupRingElement quotient;
  while (!rem.is_zero()) {
    const auto [lam, c] = leading(rem);
    const Cocharacter qlam = lam - blam;
    if (!c.divisible_by(bc) || greater(floor, qlam)) {
      throw Error(ErrorKind::NotDivisible, "group ring element is not divisible");
    }
    GroupRingElement t = GroupRingElement::monomial(qlam, c.divexact(bc));
    quotient += t;
    rem -= gr_mul(t, b);
  }
  return quotient;
}

}  // namespace heckeforge

#include "heckeforge/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "heckeforge/error.hpp"

namespace heckeforge {

LaurentPoly::LaurentPoly(Integer constant) {
  if (!constant.is_zero()) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!c.is_zero()) {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

int LaurentPoly::min_exponent() const { return terms_.front().first; }
int LaurentPoly::max_exponent() const { return terms_.back().first; }

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Integer(0);
}

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.front().first >= 0; }

void LaurentPoly::add_scaled(const LaurentPoly& p, int k, const Integer& c) {
  if (p.is_zero() || c.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + p.terms_.size());
  auto a = terms_.begin();
  auto b = p.terms_.begin();
  while (a != terms_.end() || b != p.terms_.end()) {
    if (b == p.terms_.end() || (a != terms_.end() && a->first < b->first + k)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first + k < a->first) {
      out.emplace_back(b->first + k, b->second * c);
      ++b;
    } else {
      Integer sum = std::move(a->second);
      sum += b->second * c;
      if (!sum.is_zero()) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, 0, Integer(1));
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, 0, Integer(-1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  const int lo = a.min_exponent() + b.min_exponent();
  const long span = static_cast<long>(a.max_exponent()) + b.max_exponent() - lo + 1;
  LaurentPoly r;
  if (span <= 4096) {
    std::vector<Integer> dense(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    }
    for (long i = 0; i < span; ++i) {
      if (!dense[static_cast<std::size_t>(i)].is_zero()) {
        r.terms_.emplace_back(static_cast<int>(i + lo), std::move(dense[static_cast<std::size_t>(i)]));
      }
    }
    return r;
  }
  std::map<int, Integer> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
  }
  return r;
}

Integer LaurentPoly::eval(const Integer& q0) const {
  if (terms_.empty()) return Integer(0);
  if (min_exponent() < 0) {
    // Negative powers are only defined at units.
    if (!(q0 == Integer(1) || q0 == Integer(-1))) {
      Integer num(0);
      // sum c_e q0^(e - min) must be divisible by q0^(-min)
      for (const auto& [e, c] : terms_) num += c * pow(q0, static_cast<unsigned>(e - min_exponent()));
      Integer den = pow(q0, static_cast<unsigned>(-min_exponent()));
      if (!num.divisible_by(den)) {
        throw Error(ErrorKind::NotDivisible, "Laurent polynomial " + to_string() +
                                                 " has no integer value at q=" + q0.to_string());
      }
      return num.divexact(den);
    }
  }
  Integer r(0);
  for (const auto& [e, c] : terms_) {
    if (e >= 0) {
      r += c * pow(q0, static_cast<unsigned>(e));
    } else {
      r += c * pow(q0, static_cast<unsigned>(-e));  // q0 = +-1: q0^-1 = q0
    }
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Integer(1);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  if (a.is_zero()) return {};
  // Strip the unit q^k from both sides; divisibility in Z[q, q^-1] then
  // reduces to divisibility in Z[q] of polynomials with nonzero constant term.
  const int shift = a.min_exponent() - b.min_exponent();
  std::map<int, Integer> rem;
  for (const auto& [e, c] : a.terms()) rem[e - a.min_exponent()] = c;
  std::vector<LaurentPoly::Term> divisor;
  for (const auto& [e, c] : b.terms()) divisor.emplace_back(e - b.min_exponent(), c);
  const int div_deg = divisor.back().first;
  const Integer& lead = divisor.back().second;
  std::vector<LaurentPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const int deg = top->first;
    if (deg < div_deg || !top->second.divisible_by(lead)) {
      throw Error(ErrorKind::NotDivisible, a.to_string() + " is not divisible by " + b.to_string());
    }
    Integer factor = top->second.divexact(lead);
    const int k = deg - div_deg;
    for (const auto& [e, c] : divisor) {
      Integer& slot = rem[e + k];
      slot -= c * factor;
      if (slot.is_zero()) rem.erase(e + k);
    }
    quotient.emplace_back(k + shift, std::move(factor));
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

}  // namespace heckeforge

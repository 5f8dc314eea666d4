#include "heckeforge/hecke.hpp"

#include <algorithm>

#include "heckeforge/error.hpp"

namespace heckeforge {

namespace {

void check_same_group(const AffineWeylPtr& a, const AffineWeylPtr& b) {
  if (a && b && a != b && &a->root_datum() != &b->root_datum()) {
    throw Error(ErrorKind::ContextMismatch, "Hecke elements over different root data");
  }
}

const LaurentPoly& q_minus_one() {
  static const LaurentPoly p = LaurentPoly::q() - LaurentPoly(1);
  return p;
}

}  // namespace

HeckeElement HeckeElement::basis(AffineWeylPtr group, const ExtAffineElement& x, LaurentPoly coeff) {
  HeckeElement h(std::move(group));
  if (!coeff.is_zero()) h.terms_.emplace(x, std::move(coeff));
  return h;
}

HeckeElement HeckeElement::unit(AffineWeylPtr group) {
  auto e = group->identity();
  return basis(std::move(group), e);
}

LaurentPoly HeckeElement::coeff(const ExtAffineElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::vector<std::pair<ExtAffineElement, LaurentPoly>> HeckeElement::sorted_terms() const {
  std::vector<ExtAffineElement> keys;
  keys.reserve(terms_.size());
  for (const auto& [x, c] : terms_) keys.push_back(x);
  if (group_) group_->sort_canonical(keys);
  std::vector<std::pair<ExtAffineElement, LaurentPoly>> out;
  out.reserve(keys.size());
  for (const auto& x : keys) out.emplace_back(x, terms_.at(x));
  return out;
}

bool HeckeElement::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_polynomial(); });
}

void HeckeElement::prune() {
  std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
}

void HeckeElement::add_term(const ExtAffineElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElement::add_scaled(const HeckeElement& h, const LaurentPoly& c) {
  check_same_group(group_, h.group_);
  if (!group_) group_ = h.group_;
  if (c.is_zero()) return;
  const bool monomial = c.size() == 1;
  for (const auto& [x, p] : h.terms_) {
    auto [it, inserted] = terms_.try_emplace(x);
    if (monomial) {
      it->second.add_scaled(p, c.terms()[0].first, c.terms()[0].second);
    } else {
      it->second += p * c;
    }
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& rhs) {
  add_scaled(rhs, LaurentPoly(1));
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& rhs) {
  add_scaled(rhs, LaurentPoly(-1));
  return *this;
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r = *this;
  for (auto& [x, c] : r.terms_) c = -c;
  return r;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement r(group_);
  r.add_scaled(*this, c);
  return r;
}

HeckeElement HeckeElement::shifted(int k) const {
  HeckeElement r = *this;
  for (auto& [x, c] : r.terms_) c = c.shifted(k);
  return r;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [x, c] : a.terms_) {
    auto it = b.terms_.find(x);
    if (it == b.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

HeckeElement HeckeElement::left_mul_generator(int label) const {
  HeckeElement out(group_);
  out.terms_.reserve(terms_.size() * 2);
  const auto& g = *group_;
  for (const auto& [x, p] : terms_) {
    ExtAffineElement y = g.left_mul_generator(label, x);
    if (g.length(y) > g.length(x)) {
      out.terms_[y] += p;
    } else {
      out.terms_[y].add_scaled(p, 1, Integer(1));
      LaurentPoly& slot = out.terms_[x];
      slot.add_scaled(p, 1, Integer(1));
      slot.add_scaled(p, 0, Integer(-1));
    }
  }
  out.prune();
  return out;
}

HeckeElement HeckeElement::right_mul_generator(int label) const {
  HeckeElement out(group_);
  out.terms_.reserve(terms_.size() * 2);
  const auto& g = *group_;
  for (const auto& [x, p] : terms_) {
    ExtAffineElement y = g.right_mul_generator(x, label);
    if (g.length(y) > g.length(x)) {
      out.terms_[y] += p;
    } else {
      out.terms_[y].add_scaled(p, 1, Integer(1));
      LaurentPoly& slot = out.terms_[x];
      slot.add_scaled(p, 1, Integer(1));
      slot.add_scaled(p, 0, Integer(-1));
    }
  }
  out.prune();
  return out;
}

HeckeElement HeckeElement::left_mul_omega(const ExtAffineElement& omega) const {
  if (omega == group_->identity()) return *this;
  HeckeElement out(group_);
  out.terms_.reserve(terms_.size());
  for (const auto& [x, p] : terms_) out.terms_.emplace(group_->multiply(omega, x), p);
  return out;
}

HeckeElement HeckeElement::right_mul_omega(const ExtAffineElement& omega) const {
  if (omega == group_->identity()) return *this;
  HeckeElement out(group_);
  out.terms_.reserve(terms_.size());
  for (const auto& [x, p] : terms_) out.terms_.emplace(group_->multiply(x, omega), p);
  return out;
}

HeckeElement HeckeElement::left_mul_basis(const ExtAffineElement& x) const {
  ReducedWord rw = group_->reduced_word(x);
  HeckeElement cur = left_mul_omega(rw.omega);
  for (auto it = rw.indices.rbegin(); it != rw.indices.rend(); ++it) cur = cur.left_mul_generator(*it);
  return cur;
}

HeckeElement HeckeElement::right_mul_basis(const ExtAffineElement& x) const {
  ReducedWord rw = group_->reduced_word(x);
  HeckeElement cur = *this;
  for (int s : rw.indices) cur = cur.right_mul_generator(s);
  return cur.right_mul_omega(rw.omega);
}

HeckeElement h_mul(const HeckeElement& a, const HeckeElement& b) {
  check_same_group(a.group(), b.group());
  const AffineWeylPtr& group = a.group() ? a.group() : b.group();
  HeckeElement out(group);
  if (a.is_zero() || b.is_zero()) return out;
  const auto& g = *group;
  // Rewrite along whichever side needs fewer generator steps.
  std::size_t left_cost = 0;
  std::size_t right_cost = 0;
  for (const auto& [x, c] : a.terms()) left_cost += static_cast<std::size_t>(g.length(x)) + 1;
  for (const auto& [x, c] : b.terms()) right_cost += static_cast<std::size_t>(g.length(x)) + 1;
  left_cost *= b.size();
  right_cost *= a.size();
  if (left_cost <= right_cost) {
    for (const auto& [x, c] : a.terms()) out.add_scaled(b.left_mul_basis(x), c);
  } else {
    for (const auto& [x, c] : b.terms()) out.add_scaled(a.right_mul_basis(x), c);
  }
  return out;
}

HeckeElement h_invert_basis(const AffineWeylPtr& group, const ExtAffineElement& w) {
  // T_w = T_{s1} ... T_{sk} T_omega  =>  T_w^{-1} = T_{omega^{-1}} T_{sk}^{-1} ... T_{s1}^{-1}
  ReducedWord rw = group->reduced_word(w);
  HeckeElement cur = HeckeElement::basis(group, group->inverse(rw.omega));
  for (auto it = rw.indices.rbegin(); it != rw.indices.rend(); ++it) {
    // cur * (q^-1 T_s + (q^-1 - 1))
    HeckeElement ts = cur.right_mul_generator(*it);
    HeckeElement next = ts.shifted(-1);
    next.add_scaled(cur, LaurentPoly::monomial(-1) - LaurentPoly(1));
    cur = std::move(next);
  }
  return cur;
}

HeckeElement standard_class(const AffineWeylPtr& group, const ExtAffineElement& w) {
  const int l = group->length(w);
  return HeckeElement::basis(group, w, LaurentPoly(l % 2 == 0 ? 1 : -1));
}

HeckeElement costandard_class(const AffineWeylPtr& group, const ExtAffineElement& w) {
  ReducedWord rw = group->reduced_word(w);
  HeckeElement cur = HeckeElement::basis(group, rw.omega);
  for (auto it = rw.indices.rbegin(); it != rw.indices.rend(); ++it) {
    // (-T_s + (q - 1)) * cur
    HeckeElement next = -cur.left_mul_generator(*it);
    next.add_scaled(cur, q_minus_one());
    cur = std::move(next);
  }
  return cur;
}

HeckeElement costandard_inverse(const AffineWeylPtr& group, const ExtAffineElement& w) {
  ReducedWord rw = group->reduced_word(w);
  HeckeElement cur = HeckeElement::basis(group, group->inverse(rw.omega));
  for (auto it = rw.indices.rbegin(); it != rw.indices.rend(); ++it) {
    cur = cur.right_mul_generator(*it).scaled(LaurentPoly::monomial(-1, Integer(-1)));
  }
  return cur;
}

// ------------------------------------------------------------ specialized

void SpecializedHeckeElement::add_term(const ExtAffineElement& x, const Integer& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<std::pair<ExtAffineElement, Integer>> SpecializedHeckeElement::sorted_terms() const {
  std::vector<ExtAffineElement> keys;
  for (const auto& [x, c] : terms_) keys.push_back(x);
  group_->sort_canonical(keys);
  std::vector<std::pair<ExtAffineElement, Integer>> out;
  for (const auto& x : keys) out.emplace_back(x, terms_.at(x));
  return out;
}

SpecializedHeckeElement SpecializedHeckeElement::left_mul_generator(int label) const {
  SpecializedHeckeElement out(group_, q0_);
  const Integer qm1 = q0_ - Integer(1);
  for (const auto& [x, c] : terms_) {
    ExtAffineElement y = group_->left_mul_generator(label, x);
    if (group_->length(y) > group_->length(x)) {
      out.add_term(y, c);
    } else {
      out.add_term(y, q0_ * c);
      out.add_term(x, qm1 * c);
    }
  }
  return out;
}

SpecializedHeckeElement SpecializedHeckeElement::left_mul_basis(const ExtAffineElement& x) const {
  ReducedWord rw = group_->reduced_word(x);
  SpecializedHeckeElement cur(group_, q0_);
  for (const auto& [y, c] : terms_) cur.add_term(group_->multiply(rw.omega, y), c);
  for (auto it = rw.indices.rbegin(); it != rw.indices.rend(); ++it) cur = cur.left_mul_generator(*it);
  return cur;
}

bool operator==(const SpecializedHeckeElement& a, const SpecializedHeckeElement& b) {
  if (!(a.q0_ == b.q0_) || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [x, c] : a.terms_) {
    auto it = b.terms_.find(x);
    if (it == b.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

SpecializedHeckeElement h_specialize(const HeckeElement& a, const Integer& q0) {
  SpecializedHeckeElement out(a.group(), q0);
  for (const auto& [x, c] : a.terms()) out.add_term(x, c.eval(q0));
  return out;
}

SpecializedHeckeElement specialized_mul(const SpecializedHeckeElement& a, const SpecializedHeckeElement& b) {
  check_same_group(a.group(), b.group());
  SpecializedHeckeElement out(a.group(), a.q0());
  for (const auto& [x, c] : a.terms()) {
    const SpecializedHeckeElement prod = b.left_mul_basis(x);
    for (const auto& [y, d] : prod.terms()) out.add_term(y, c * d);
  }
  return out;
}

}  // namespace heckeforge

#include "heckeforge/parahoric.hpp"

#include <algorithm>
#include <unordered_set>

#include "heckeforge/bernstein.hpp"
#include "heckeforge/error.hpp"

namespace heckeforge {

ParahoricAlgebra::ParahoricAlgebra(AffineWeylPtr group, Facet facet)
    : group_(std::move(group)), facet_(std::move(facet)), sum_(group_) {
  poincare_ = group_->poincare_polynomial(facet_);
  for (const auto& w : group_->parabolic_elements(facet_)) sum_.add_term(w, LaurentPoly(1));
}

ParahoricElement ParahoricAlgebra::embed(const DoubleCoset& c) const {
  HeckeElement h(group_);
  for (const auto& x : c.elements) h.add_term(x, LaurentPoly(1));
  return {facet_, std::move(h)};
}

ParahoricElement ParahoricAlgebra::embed(const ExtAffineElement& x) const {
  return embed(group_->double_coset(facet_, x, facet_));
}

ParahoricElement ParahoricAlgebra::unit() const { return {facet_, sum_}; }

ParahoricElement ParahoricAlgebra::from_carrier(HeckeElement carrier) const {
  ParahoricElement a{facet_, std::move(carrier)};
  decompose(a);
  return a;
}

CosetExpansion ParahoricAlgebra::decompose(const ParahoricElement& a) const {
  if (!(a.facet == facet_)) throw Error(ErrorKind::ContextMismatch, "parahoric elements over different facets");
  CosetExpansion out;
  std::unordered_set<ExtAffineElement, ExtAffineHash> covered;
  for (const auto& [x, c] : a.carrier.terms()) {
    if (covered.contains(x)) continue;
    DoubleCoset dc = group_->double_coset(facet_, x, facet_);
    for (const auto& y : dc.elements) {
      if (!(a.carrier.coeff(y) == c)) {
        throw Error(ErrorKind::BasisEscape, "coefficient not constant on the double coset of " + group_->format(x));
      }
      covered.insert(y);
    }
    out.emplace_back(std::move(dc), c);
  }
  std::sort(out.begin(), out.end(),
            [this](const auto& p, const auto& q) { return group_->canonical_less(p.first.min_rep, q.first.min_rep); });
  return out;
}

ParahoricElement ParahoricAlgebra::mul(const ParahoricElement& a, const ParahoricElement& b) const {
  if (!(a.facet == facet_) || !(b.facet == facet_)) {
    throw Error(ErrorKind::ContextMismatch, "parahoric elements over different facets");
  }
  HeckeElement prod = h_mul(a.carrier, b.carrier);
  HeckeElement out(group_);
  for (const auto& [x, c] : prod.terms()) out.add_term(x, divide_exact(c, poincare_));
  return from_carrier(std::move(out));
}

ParahoricElement ParahoricAlgebra::phi(const HeckeElement& h) const {
  if (!is_central(h)) throw Error(ErrorKind::NotCentralInput, "phi^f needs a central element");
  return from_carrier(h_mul(h, sum_));
}

std::vector<DoubleCoset> ParahoricAlgebra::cosets(int max_len) const {
  return group_->enumerate_double_cosets(facet_, facet_, max_len);
}

CosetExpansion ParahoricAlgebra::structure_constants(const DoubleCoset& c, const DoubleCoset& d) const {
  auto key = std::make_pair(c.min_rep, d.min_rep);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  CosetExpansion e = decompose(mul(embed(c), embed(d)));
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(key, std::move(e)).first->second;
}

std::vector<StructureEntry> ParahoricAlgebra::structure_table(int max_len) const {
  const auto cs = cosets(max_len);
  std::vector<StructureEntry> out;
  for (const auto& c : cs) {
    for (const auto& d : cs) out.push_back({c, d, structure_constants(c, d)});
  }
  return out;
}

bool ParahoricAlgebra::commutes_with_cosets(const ParahoricElement& a, int max_len) const {
  for (const auto& c : cosets(max_len)) {
    const ParahoricElement m = embed(c);
    if (!(mul(a, m) == mul(m, a))) return false;
  }
  return true;
}

}  // namespace heckeforge

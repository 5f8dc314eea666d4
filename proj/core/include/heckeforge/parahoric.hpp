#pragma once

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckeforge/affine_weyl.hpp"
#include "heckeforge/hecke.hpp"

namespace heckeforge {

// Element of H^f(q), carried by an element of T_{W_f} H^I(q) T_{W_f}.
struct ParahoricElement {
  Facet facet;
  HeckeElement carrier;

  friend bool operator==(const ParahoricElement& a, const ParahoricElement& b) {
    return a.facet == b.facet && a.carrier == b.carrier;
  }
};

using CosetExpansion = std::vector<std::pair<DoubleCoset, LaurentPoly>>;

struct StructureEntry {
  DoubleCoset left;
  DoubleCoset right;
  CosetExpansion expansion;
};

class ParahoricAlgebra {
 public:
  // Throws Error(InfiniteParabolic).
  ParahoricAlgebra(AffineWeylPtr group, Facet facet);

  const AffineWeylPtr& group() const { return group_; }
  const Facet& facet() const { return facet_; }
  const LaurentPoly& poincare() const { return poincare_; }
  // T_{W_f} = sum over W_f of T_w.
  const HeckeElement& parabolic_sum() const { return sum_; }

  // m_C = sum over C of T_x.
  ParahoricElement embed(const DoubleCoset& c) const;
  ParahoricElement embed(const ExtAffineElement& x) const;
  ParahoricElement unit() const;
  // Coefficients must be constant on double cosets; Error(BasisEscape).
  ParahoricElement from_carrier(HeckeElement carrier) const;

  // (carrier(a) carrier(b)) / P_f(q).  Throws Error(NotDivisible | BasisEscape).
  ParahoricElement mul(const ParahoricElement& a, const ParahoricElement& b) const;
  // h T_{W_f} for central h.  Throws Error(NotCentralInput | BasisEscape).
  ParahoricElement phi(const HeckeElement& h) const;

  // In canonical order of the minimal representatives.  Error(BasisEscape).
  CosetExpansion decompose(const ParahoricElement& a) const;

  // Double cosets with minimal length <= max_len.
  std::vector<DoubleCoset> cosets(int max_len) const;
  // m_C * m_D, cached.
  CosetExpansion structure_constants(const DoubleCoset& c, const DoubleCoset& d) const;
  std::vector<StructureEntry> structure_table(int max_len) const;

  // Commutes with m_C for every coset of length <= max_len.
  bool commutes_with_cosets(const ParahoricElement& a, int max_len) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<ExtAffineElement, ExtAffineElement>& p) const noexcept {
      std::size_t h = p.first.hash();
      hash_mix(h, p.second.hash());
      return h;
    }
  };

  AffineWeylPtr group_;
  Facet facet_;
  LaurentPoly poincare_;
  HeckeElement sum_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::pair<ExtAffineElement, ExtAffineElement>, CosetExpansion, PairHash> cache_;
};

}  // namespace heckeforge

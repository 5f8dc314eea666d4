#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "heckeforge/bernstein.hpp"
#include "heckeforge/dual_weights.hpp"

namespace heckeforge {

using CenterExpansion = std::map<Cocharacter, LaurentPoly>;

// Dominant mu with l(t(mu)) <= length_bound.  When X_*/ZPhi^vee has a free
// part the set is infinite, so coordinates are also capped at coord_box.
std::vector<Cocharacter> dominant_coweights(const AffineWeylGroup& g, int length_bound, int coord_box);

struct CentralCheck {
  Cocharacter mu;
  bool central = false;
  bool unitriangular = false;
  bool integral = false;
  bool character = false;  // q = 1 image is the character of V(mu)
};

struct ProductCheck {
  Cocharacter mu;
  Cocharacter mu2;
  bool commute = false;
  bool integral = false;
  bool tensor = false;  // constants at q = 1 match the tensor oracle
};

struct VerifyReport {
  std::string group;
  int bound = 0;
  std::vector<CentralCheck> checks;
  std::vector<ProductCheck> products;
  bool pass = true;
  std::string counterexample;  // first failure, empty on success
};

class CentralMap {
 public:
  explicit CentralMap(AffineWeylPtr group);

  const AffineWeylGroup& group() const { return *group_; }
  const Bernstein& bernstein() const { return bernstein_; }
  const DualWeights& dual_weights() const { return dual_; }

  // z_mu, memoized.
  const HeckeElement& z(const Cocharacter& mu) const;
  // Z_mu = sum_nu m_mu(nu) q^{(l(t(mu)) - l(t(nu)))/2} theta_nu, memoized.
  // Throws Error(ParityViolation | IntegralityViolation | CentralityViolation).
  const HeckeElement& central_ic_class(const Cocharacter& mu) const;

  // h = sum c_mu z_mu.  Throws Error(NotInThetaSpan).
  CenterExpansion expand_in_z_basis(const HeckeElement& h) const;
  // Z_mu Z_mu2 = sum c Z_nu.  Throws Error(BasisEscape).
  CenterExpansion satake_structure_constants(const Cocharacter& mu, const Cocharacter& mu2) const;
  CenterExpansion expand_in_central_basis(const HeckeElement& h) const;

  CentralCheck check(const Cocharacter& mu) const;
  ProductCheck check_product(const Cocharacter& mu, const Cocharacter& mu2) const;
  VerifyReport verify(int length_bound) const;

 private:
  // Dominant translation of largest <2 rho, .> in the support (ties: lex).
  std::optional<Cocharacter> leading_dominant(const HeckeElement& h) const;
  CenterExpansion expand(const HeckeElement& h, bool central_basis) const;

  AffineWeylPtr group_;
  Bernstein bernstein_;
  DualWeights dual_;
  mutable std::mutex mutex_;
  mutable std::map<Cocharacter, HeckeElement> z_cache_;
  mutable std::map<Cocharacter, HeckeElement> zz_cache_;
};

}  // namespace heckeforge

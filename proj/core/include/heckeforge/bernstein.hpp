#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "heckeforge/affine_weyl.hpp"
#include "heckeforge/hecke.hpp"

namespace heckeforge {

// Which Weyl chamber plays the role of the positive cone.  Standard: theta
// is the twisted costandard class on dominant lam.  Opposite: on
// antidominant lam.
enum class Borel { Standard, Opposite };

// lam = plus - minus with plus, minus in the positive cone of the Borel.
struct ThetaDecomposition {
  Cocharacter plus;
  Cocharacter minus;
};

class Bernstein {
 public:
  explicit Bernstein(AffineWeylPtr group, Borel borel = Borel::Standard);

  const AffineWeylPtr& group() const { return group_; }
  const RootDatum& root_datum() const { return group_->root_datum(); }
  Borel borel() const { return borel_; }

  bool in_positive_cone(const Cocharacter& lam) const;
  ThetaDecomposition canonical_decomposition(const Cocharacter& lam) const;

  // Memoized.  Throws Error(IntegralityViolation | ParityViolation).
  const HeckeElement& theta(const Cocharacter& lam) const;
  // Uncached, from an explicit decomposition (used to test independence).
  HeckeElement theta(const Cocharacter& lam, const ThetaDecomposition& d) const;

  // (l(t(lam)) + l(t(mu)) - l(t(lam + mu))) / 2.  Throws Error(ParityViolation).
  int relation_exponent(const Cocharacter& lam, const Cocharacter& mu) const;

  // z_mu = sum over W0(mu) of theta_lam.  Throws Error(CentralityViolation).
  HeckeElement z(const Cocharacter& mu) const;

 private:
  int half_exponent(int twice, const Cocharacter& where) const;

  AffineWeylPtr group_;
  Borel borel_;
  mutable std::mutex mutex_;
  mutable std::map<Cocharacter, HeckeElement> cache_;
};

// Commutes with T_s for every affine simple reflection and with T_omega for
// generators of Omega.
bool is_central(const HeckeElement& h);

}  // namespace heckeforge

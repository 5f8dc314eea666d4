#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "heckeforge/cocharacter.hpp"
#include "heckeforge/group_ring.hpp"
#include "heckeforge/integer.hpp"
#include "heckeforge/root_datum.hpp"

namespace heckeforge {

// Weights of the irreducible representation V(mu) of the Langlands dual
// group.  The dual's roots are the coroots of G and its weight lattice is
// X_*(T), so weights are cocharacters of G.
struct Character {
  Cocharacter highest_weight;
  std::map<Cocharacter, Integer> mults;

  Integer multiplicity(const Cocharacter& nu) const;
  Integer dimension() const;
  GroupRingElement to_group_ring() const;
};

// Freudenthal's recursion on the dual root system.
Character freudenthal_multiplicities(const RootDatum& rd, const Cocharacter& mu);
// Weyl character formula: A_{mu + rho} / A_{rho}, evaluated in doubled
// coordinates so that rho of the dual need not lie in X_*(T).
Character weyl_character_multiplicities(const RootDatum& rd, const Cocharacter& mu);

// Freudenthal, checked against the Weyl character oracle.  Throws
// Error(OracleMismatch) if they disagree.
Character weight_multiplicities(const RootDatum& rd, const Cocharacter& mu);

// prod over positive roots alpha of <alpha, mu + rho^vee> / <alpha, rho^vee>.
Integer weyl_dimension(const RootDatum& rd, const Cocharacter& mu);

// Multiplicities of V(mu'') in V(mu) (x) V(mu').  Throws
// Error(NegativeMultiplicity) on an invariant breach.
std::map<Cocharacter, Integer> tensor_multiplicities(const RootDatum& rd, const Cocharacter& mu,
                                                     const Cocharacter& mu2);

// Memoizing front end, one per root datum.
class DualWeights {
 public:
  explicit DualWeights(RootDatumPtr rd) : rd_(std::move(rd)) {}
  const RootDatum& root_datum() const { return *rd_; }
  Character weights(const Cocharacter& mu) const;

 private:
  RootDatumPtr rd_;
  mutable std::mutex mutex_;
  mutable std::map<Cocharacter, Character> cache_;
};

}  // namespace heckeforge

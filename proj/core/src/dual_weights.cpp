#include "heckeforge/dual_weights.hpp"

#include <deque>
#include <set>

#include "heckeforge/error.hpp"

namespace heckeforge {

namespace {

// W0-invariant form on X_*(T): B(u, v) = sum_{alpha > 0} <alpha, u><alpha, v>.
// Positive definite on the coroot span, zero against the center.
long invariant_form(const RootDatum& rd, const Cocharacter& u, const Cocharacter& v) {
  long s = 0;
  for (const auto& p : rd.positive_roots()) s += static_cast<long>(pair(p.root, u)) * pair(p.root, v);
  return s;
}

void require_dominant(const RootDatum& rd, const Cocharacter& mu) {
  if (!rd.is_dominant(mu)) throw std::invalid_argument("highest weight " + mu.to_string() + " is not dominant");
}

}  // namespace

Integer Character::multiplicity(const Cocharacter& nu) const {
  auto it = mults.find(nu);
  return it == mults.end() ? Integer(0) : it->second;
}

Integer Character::dimension() const {
  Integer d(0);
  for (const auto& [nu, m] : mults) d += m;
  return d;
}

GroupRingElement Character::to_group_ring() const {
  GroupRingElement g;
  for (const auto& [nu, m] : mults) g.add_term(nu, m);
  return g;
}

Character freudenthal_multiplicities(const RootDatum& rd, const Cocharacter& mu) {
  require_dominant(rd, mu);
  Character ch;
  ch.highest_weight = mu;
  const Cocharacter& two_rho = rd.two_rho_vee();

  // Weights in order of depth below mu.
  std::vector<Cocharacter> order{mu};
  std::set<Cocharacter> seen{mu};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i = 0; i < rd.num_simple(); ++i) {
      Cocharacter nu = order[head] - rd.simple_coroot(i);
      if (seen.contains(nu)) continue;
      if (!rd.dominance_leq(rd.dominant_representative(nu).first, mu)) continue;
      seen.insert(nu);
      order.push_back(nu);
    }
  }

  const long mu_norm = invariant_form(rd, mu, mu);
  ch.mults[mu] = Integer(1);
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Cocharacter& nu = order[idx];
    const long lhs = mu_norm - invariant_form(rd, nu, nu) + invariant_form(rd, mu - nu, two_rho);
    Integer rhs(0);
    for (const auto& p : rd.positive_roots()) {
      const Cocharacter& beta = p.coroot;
      const long bb = invariant_form(rd, beta, beta);
      Cocharacter shifted = nu + beta;
      for (long k = 1; seen.contains(shifted); ++k, shifted += beta) {
        auto it = ch.mults.find(shifted);
        if (it == ch.mults.end()) continue;
        rhs += it->second * Integer(invariant_form(rd, nu, beta) + k * bb);
      }
    }
    rhs *= Integer(2);
    if (lhs <= 0 || !rhs.divisible_by(Integer(lhs))) {
      throw Error(ErrorKind::OracleMismatch, "Freudenthal recursion is not integral at " + nu.to_string());
    }
    Integer m = rhs.divexact(Integer(lhs));
    if (!m.is_zero()) ch.mults[nu] = m;
  }
  return ch;
}

Character weyl_character_multiplicities(const RootDatum& rd, const Cocharacter& mu) {
  require_dominant(rd, mu);
  const Cocharacter& two_rho = rd.two_rho_vee();
  const Cocharacter top = 2 * mu + two_rho;
  GroupRingElement num = gr_weyl_symmetrize(rd, GroupRingElement::monomial(top));
  GroupRingElement den = gr_weyl_symmetrize(rd, GroupRingElement::monomial(two_rho));
  GroupRingElement quotient = gr_divide_exact(rd, num, den);
  Character ch;
  ch.highest_weight = mu;
  for (const auto& [lam, c] : quotient.terms()) {
    Cocharacter half = lam;
    for (std::size_t i = 0; i < lam.rank(); ++i) {
      if (lam[i] % 2 != 0) throw Error(ErrorKind::OracleMismatch, "odd exponent in doubled character");
      half[i] = lam[i] / 2;
    }
    if (c.sign() < 0) throw Error(ErrorKind::OracleMismatch, "negative coefficient in Weyl character");
    ch.mults[half] = c;
  }
  return ch;
}

Character weight_multiplicities(const RootDatum& rd, const Cocharacter& mu) {
  Character f = freudenthal_multiplicities(rd, mu);
  Character w = weyl_character_multiplicities(rd, mu);
  if (f.mults != w.mults) {
    throw Error(ErrorKind::OracleMismatch, "Freudenthal and Weyl character formula disagree for " + mu.to_string());
  }
  return f;
}

Integer weyl_dimension(const RootDatum& rd, const Cocharacter& mu) {
  require_dominant(rd, mu);
  const Cocharacter& two_rho = rd.two_rho_vee();
  const Cocharacter shifted = 2 * mu + two_rho;
  Integer num(1);
  Integer den(1);
  for (const auto& p : rd.positive_roots()) {
    num *= Integer(pair(p.root, shifted));
    den *= Integer(pair(p.root, two_rho));
  }
  return num.divexact(den);
}

std::map<Cocharacter, Integer> tensor_multiplicities(const RootDatum& rd, const Cocharacter& mu,
                                                     const Cocharacter& mu2) {
  GroupRingElement prod = gr_mul(weight_multiplicities(rd, mu).to_group_ring(),
                                 weight_multiplicities(rd, mu2).to_group_ring());
  std::map<Cocharacter, Integer> out;
  while (!prod.is_zero()) {
    // The <2 rho, .>-maximal term of a W0-invariant sum is dominant.
    auto best = prod.terms().begin();
    for (auto it = prod.terms().begin(); it != prod.terms().end(); ++it) {
      const int a = rd.rho2_pairing(it->first);
      const int b = rd.rho2_pairing(best->first);
      if (a > b || (a == b && it->first > best->first)) best = it;
    }
    const Cocharacter hw = best->first;
    const Integer c = best->second;
    if (c.sign() < 0 || !rd.is_dominant(hw)) {
      throw Error(ErrorKind::NegativeMultiplicity, "tensor product stripping failed at " + hw.to_string());
    }
    out[hw] = c;
    prod -= weight_multiplicities(rd, hw).to_group_ring().scaled(c);
  }
  return out;
}

Character DualWeights::weights(const Cocharacter& mu) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
  }
  Character ch = weight_multiplicities(*rd_, mu);
  std::lock_guard lock(mutex_);
  cache_.emplace(mu, ch);
  return ch;
}

}  // namespace heckeforge

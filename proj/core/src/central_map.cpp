#include "heckeforge/central_map.hpp"

#include <cstdlib>
#include <algorithm>
#include <sstream>

#include "heckeforge/error.hpp"

namespace heckeforge {

namespace {

bool expansion_integral(const CenterExpansion& e) {
  for (const auto& [mu, c] : e) {
    if (!c.is_polynomial()) return false;
  }
  return true;
}

}  // namespace

std::vector<Cocharacter> dominant_coweights(const AffineWeylGroup& g, int length_bound, int coord_box) {
  const RootDatum& rd = g.root_datum();
  std::vector<Cocharacter> out;
  if (length_bound < 0) return out;
  const std::size_t r = static_cast<std::size_t>(rd.rank());
  // Shell by shell in the sup norm.  The sublevel sets of lam -> l(t(lam))
  // are convex, so two empty shells in a row end the search.
  int empty = 0;
  for (int radius = 0; radius <= coord_box && empty < 2; ++radius) {
    bool hit = false;
    Cocharacter c = Cocharacter::zero(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = -radius;
    for (;;) {
      int sup = 0;
      for (std::size_t i = 0; i < r; ++i) sup = std::max(sup, std::abs(c[i]));
      if (sup == radius && g.length(g.translation(c)) <= length_bound) {
        hit = true;
        if (rd.is_dominant(c)) out.push_back(c);
      }
      std::size_t i = 0;
      while (i < r && c[i] == radius) c[i++] = -radius;
      if (i == r) break;
      ++c[i];
    }
    empty = hit ? 0 : empty + 1;
  }
  std::sort(out.begin(), out.end(), [&](const Cocharacter& a, const Cocharacter& b) {
    const int la = g.length(g.translation(a));
    const int lb = g.length(g.translation(b));
    return la != lb ? la < lb : a < b;
  });
  return out;
}

CentralMap::CentralMap(AffineWeylPtr group)
    : group_(group), bernstein_(group), dual_(group->root_datum_ptr()) {}

const HeckeElement& CentralMap::z(const Cocharacter& mu) const {
  {
    std::lock_guard lock(mutex_);
    auto it = z_cache_.find(mu);
    if (it != z_cache_.end()) return it->second;
  }
  HeckeElement h = bernstein_.z(mu);
  std::lock_guard lock(mutex_);
  return z_cache_.try_emplace(mu, std::move(h)).first->second;
}

const HeckeElement& CentralMap::central_ic_class(const Cocharacter& mu) const {
  {
    std::lock_guard lock(mutex_);
    auto it = zz_cache_.find(mu);
    if (it != zz_cache_.end()) return it->second;
  }
  const AffineWeylGroup& g = *group_;
  const int lmu = g.length(g.translation(mu));
  HeckeElement h(group_);
  for (const auto& [nu, m] : dual_.weights(mu).mults) {
    const int twice = lmu - g.length(g.translation(nu));
    if (twice < 0 || twice % 2 != 0) {
      throw Error(ErrorKind::ParityViolation, "(l(t(mu)) - l(t(nu))) / 2 is not a nonnegative integer at mu = " +
                                                  mu.to_string() + ", nu = " + nu.to_string());
    }
    h.add_scaled(bernstein_.theta(nu), LaurentPoly::monomial(twice / 2, m));
  }
  if (!h.is_polynomial()) throw Error(ErrorKind::IntegralityViolation, "Z_" + mu.to_string() + " leaves Z[q]");
  if (!is_central(h)) throw Error(ErrorKind::CentralityViolation, "Z_" + mu.to_string() + " is not central");
  std::lock_guard lock(mutex_);
  return zz_cache_.try_emplace(mu, std::move(h)).first->second;
}

std::optional<Cocharacter> CentralMap::leading_dominant(const HeckeElement& h) const {
  const RootDatum& rd = group_->root_datum();
  std::optional<Cocharacter> best;
  int best_h = 0;
  for (const auto& [x, c] : h.terms()) {
    if (x.w != rd.identity() || !rd.is_dominant(x.lam)) continue;
    const int hx = rd.rho2_pairing(x.lam);
    if (!best || hx > best_h || (hx == best_h && x.lam > *best)) {
      best = x.lam;
      best_h = hx;
    }
  }
  return best;
}

CenterExpansion CentralMap::expand(const HeckeElement& h, bool central_basis) const {
  const AffineWeylGroup& g = *group_;
  const ErrorKind failure = central_basis ? ErrorKind::BasisEscape : ErrorKind::NotInThetaSpan;
  CenterExpansion out;
  HeckeElement rem = h;
  while (!rem.is_zero()) {
    auto mu = leading_dominant(rem);
    if (!mu) throw Error(failure, "no dominant translation left in the support");
    if (out.contains(*mu)) throw Error(failure, "leading weight " + mu->to_string() + " repeated");
    // Both bases have T_{t(mu)}-coefficient (-1)^{l(t(mu))}.
    LaurentPoly c = rem.coeff(g.translation(*mu));
    if (g.length(g.translation(*mu)) % 2 != 0) c = -c;
    rem.add_scaled(central_basis ? central_ic_class(*mu) : z(*mu), -c);
    out.emplace(*mu, std::move(c));
  }
  return out;
}

CenterExpansion CentralMap::expand_in_z_basis(const HeckeElement& h) const { return expand(h, false); }

CenterExpansion CentralMap::expand_in_central_basis(const HeckeElement& h) const { return expand(h, true); }

CenterExpansion CentralMap::satake_structure_constants(const Cocharacter& mu, const Cocharacter& mu2) const {
  return expand(h_mul(central_ic_class(mu), central_ic_class(mu2)), true);
}

CentralCheck CentralMap::check(const Cocharacter& mu) const {
  const AffineWeylGroup& g = *group_;
  const RootDatum& rd = g.root_datum();
  CentralCheck c;
  c.mu = mu;
  HeckeElement zz(group_);
  try {
    zz = central_ic_class(mu);
    c.central = true;
    c.integral = true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CentralityViolation) {
      c.integral = true;
    } else if (e.kind() != ErrorKind::IntegralityViolation) {
      throw;
    }
    return c;
  }
  try {
    CenterExpansion e = expand_in_z_basis(zz);
    c.integral = expansion_integral(e);
    bool tri = e.contains(mu) && e.at(mu) == LaurentPoly(1);
    for (const auto& [nu, coeff] : e) {
      if (nu != mu && !(rd.dominance_leq(nu, mu))) tri = false;
    }
    c.unitriangular = tri;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInThetaSpan) throw;
  }
  // q = 1: theta_lam -> (-1)^{l(t(lam))} t(lam), so Z_mu(1) is the character
  // of V(mu) up to those signs.
  const Character ch = dual_.weights(mu);
  std::size_t seen = 0;
  bool ok = true;
  for (const auto& [x, coeff] : zz.terms()) {
    const Integer v = coeff.eval(Integer(1));
    if (v.is_zero()) continue;
    if (x.w != rd.identity()) {
      ok = false;
      break;
    }
    const Integer sign(g.length(x) % 2 == 0 ? 1 : -1);
    if (!(v * sign == ch.multiplicity(x.lam))) {
      ok = false;
      break;
    }
    ++seen;
  }
  c.character = ok && seen == ch.mults.size();
  return c;
}

ProductCheck CentralMap::check_product(const Cocharacter& mu, const Cocharacter& mu2) const {
  ProductCheck p;
  p.mu = mu;
  p.mu2 = mu2;
  const HeckeElement ab = h_mul(central_ic_class(mu), central_ic_class(mu2));
  const HeckeElement ba = h_mul(central_ic_class(mu2), central_ic_class(mu));
  p.commute = ab == ba;
  CenterExpansion constants;
  try {
    constants = expand_in_central_basis(ab);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BasisEscape) throw;
    return p;
  }
  p.integral = expansion_integral(constants);
  const auto oracle = tensor_multiplicities(group_->root_datum(), mu, mu2);
  bool match = true;
  std::size_t nonzero = 0;
  for (const auto& [nu, c] : constants) {
    const Integer v = c.eval(Integer(1));
    if (v.is_zero()) continue;
    ++nonzero;
    auto it = oracle.find(nu);
    if (it == oracle.end() || !(it->second == v)) match = false;
  }
  p.tensor = match && nonzero == oracle.size();
  return p;
}

VerifyReport CentralMap::verify(int length_bound) const {
  const RootDatum& rd = group_->root_datum();
  VerifyReport report;
  report.group = rd.name();
  report.bound = length_bound;
  const int box = rd.is_semisimple() ? length_bound : (length_bound + 1) / 2;
  const std::vector<Cocharacter> mus = dominant_coweights(*group_, length_bound, box);
  auto fail = [&report](const std::string& what) {
    report.pass = false;
    report.counterexample = what;
  };
  for (const Cocharacter& mu : mus) {
    CentralCheck c = check(mu);
    report.checks.push_back(c);
    if (!(c.central && c.unitriangular && c.integral && c.character)) {
      fail("mu = " + mu.to_string());
      return report;
    }
  }
  // Products with l(t(mu)) + l(t(mu')) within the bound; at least the
  // square of the shortest nontrivial mu is always checked.
  int product_bound = length_bound;
  for (const Cocharacter& mu : mus) {
    const int l = group_->length(group_->translation(mu));
    if (l > 0) {
      product_bound = std::max(product_bound, 2 * l);
      break;
    }
  }
  for (std::size_t i = 0; i < mus.size(); ++i) {
    for (std::size_t j = i; j < mus.size(); ++j) {
      const int la = group_->length(group_->translation(mus[i]));
      const int lb = group_->length(group_->translation(mus[j]));
      if (la + lb > product_bound || la == 0 || lb == 0) continue;
      ProductCheck p = check_product(mus[i], mus[j]);
      report.products.push_back(p);
      if (!(p.commute && p.integral && p.tensor)) {
        fail("mu = " + mus[i].to_string() + ", mu' = " + mus[j].to_string());
        return report;
      }
    }
  }
  return report;
}

}  // namespace heckeforge

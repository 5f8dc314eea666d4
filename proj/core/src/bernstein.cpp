#include "heckeforge/bernstein.hpp"

#include <cstdlib>
#include <stdexcept>
#include <tuple>

#include "heckeforge/error.hpp"

namespace heckeforge {

namespace {

constexpr long kDecompositionSearchCap = 200'000;

const LaurentPoly& minus_q_inverse() {
  static const LaurentPoly p = LaurentPoly::monomial(-1, Integer(-1));
  return p;
}

// h * [nabla_w]^{-1}, [nabla_w]^{-1} = T_{omega^-1} (-q^-1 T_{s_k}) ... (-q^-1 T_{s_1})
HeckeElement right_mul_costandard_inverse(const AffineWeylGroup& g, HeckeElement h, const ExtAffineElement& w) {
  ReducedWord rw = g.reduced_word(w);
  h = h.right_mul_omega(g.inverse(rw.omega));
  for (auto it = rw.indices.rbegin(); it != rw.indices.rend(); ++it) {
    h = h.right_mul_generator(*it).scaled(minus_q_inverse());
  }
  return h;
}

}  // namespace

Bernstein::Bernstein(AffineWeylPtr group, Borel borel) : group_(std::move(group)), borel_(borel) {}

bool Bernstein::in_positive_cone(const Cocharacter& lam) const {
  return borel_ == Borel::Standard ? root_datum().is_dominant(lam) : root_datum().is_antidominant(lam);
}

int Bernstein::half_exponent(int twice, const Cocharacter& where) const {
  if (twice % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "odd length combination at " + where.to_string());
  }
  return twice / 2;
}

ThetaDecomposition Bernstein::canonical_decomposition(const Cocharacter& lam) const {
  const RootDatum& rd = root_datum();
  const int sign = borel_ == Borel::Standard ? 1 : -1;
  const Cocharacter x = sign * lam;  // work in the dominant picture

  // Baseline: minus = N * 2rho^vee, N minimal.  <alpha_i, 2rho^vee> = 2.
  int n = 0;
  for (int i = 0; i < rd.num_simple(); ++i) {
    const int p = pair(rd.simple_root(i), x);
    if (p < 0) n = std::max(n, (-p + 1) / 2);
  }
  Cocharacter best = n * rd.two_rho_vee();
  if (n == 0) {
    best = rd.zero();
  } else {
    // Smallest valid minus in the box spanned by the baseline: by <2rho, .>,
    // then by l1 norm, then lexicographically.
    int bound = 0;
    for (std::size_t i = 0; i < best.rank(); ++i) bound = std::max(bound, std::abs(best[i]));
    const std::size_t r = best.rank();
    long points = 1;
    for (std::size_t i = 0; i < r && points <= kDecompositionSearchCap; ++i) points *= 2L * bound + 1;
    if (points <= kDecompositionSearchCap) {
      auto key = [&rd](const Cocharacter& c) {
        int l1 = 0;
        for (std::size_t i = 0; i < c.rank(); ++i) l1 += std::abs(c[i]);
        return std::make_tuple(rd.rho2_pairing(c), l1, c);
      };
      auto best_key = key(best);
      Cocharacter c = Cocharacter::zero(r);
      for (std::size_t i = 0; i < r; ++i) c[i] = -bound;
      for (;;) {
        if (rd.is_dominant(c) && rd.is_dominant(x + c)) {
          auto k = key(c);
          if (k < best_key) {
            best_key = k;
            best = c;
          }
        }
        std::size_t i = 0;
        while (i < r && c[i] == bound) c[i++] = -bound;
        if (i == r) break;
        ++c[i];
      }
    }
  }
  return {sign * (x + best), sign * best};
}

HeckeElement Bernstein::theta(const Cocharacter& lam, const ThetaDecomposition& d) const {
  const AffineWeylGroup& g = *group_;
  if (!(d.plus - d.minus == lam) || !in_positive_cone(d.plus) || !in_positive_cone(d.minus)) {
    throw std::invalid_argument("invalid decomposition of " + lam.to_string());
  }
  const int e = half_exponent(g.length(g.translation(lam)) + g.length(g.translation(d.minus)) -
                                  g.length(g.translation(d.plus)),
                              lam);
  HeckeElement h = costandard_class(group_, g.translation(d.plus));
  if (!d.minus.is_zero()) h = right_mul_costandard_inverse(g, std::move(h), g.translation(d.minus));
  h = h.shifted(e);
  if (!h.is_polynomial()) {
    throw Error(ErrorKind::IntegralityViolation, "theta_" + lam.to_string() + " has a negative power of q");
  }
  return h;
}

const HeckeElement& Bernstein::theta(const Cocharacter& lam) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(lam);
    if (it != cache_.end()) return it->second;
  }
  HeckeElement h;
  if (in_positive_cone(lam)) {
    h = costandard_class(group_, group_->translation(lam));
  } else if (in_positive_cone(-lam)) {
    h = standard_class(group_, group_->translation(lam));
  } else {
    h = theta(lam, canonical_decomposition(lam));
  }
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(lam, std::move(h)).first->second;
}

int Bernstein::relation_exponent(const Cocharacter& lam, const Cocharacter& mu) const {
  const AffineWeylGroup& g = *group_;
  return half_exponent(g.length(g.translation(lam)) + g.length(g.translation(mu)) -
                           g.length(g.translation(lam + mu)),
                       lam + mu);
}

HeckeElement Bernstein::z(const Cocharacter& mu) const {
  if (!root_datum().is_dominant(mu)) throw std::invalid_argument(mu.to_string() + " is not dominant");
  HeckeElement sum(group_);
  for (const Cocharacter& lam : root_datum().orbit(mu)) sum += theta(lam);
  if (!is_central(sum)) throw Error(ErrorKind::CentralityViolation, "z_" + mu.to_string() + " is not central");
  return sum;
}

bool is_central(const HeckeElement& h) {
  if (!h.group()) return true;
  const AffineWeylGroup& g = *h.group();
  for (int s = 0; s < g.num_generators(); ++s) {
    if (!(h.left_mul_generator(s) == h.right_mul_generator(s))) return false;
  }
  for (const ExtAffineElement& omega : g.omega_generators()) {
    if (!(h.left_mul_omega(omega) == h.right_mul_omega(omega))) return false;
  }
  return true;
}

}  // namespace heckeforge

#include <gtest/gtest.h>

#include "heckeforge/bernstein.hpp"
#include "heckeforge/error.hpp"
#include "oracles.hpp"

using namespace heckeforge;

namespace {

AffineWeylPtr group(const char* name) { return AffineWeylGroup::create(preset(name)); }

HeckeElement qpow(const AffineWeylPtr& g, int e) {
  return HeckeElement::basis(g, g->identity(), LaurentPoly::monomial(e));
}

// theta from the defining formula, built only from the public class
// constructors: q^e [nabla_plus] [nabla_minus]^{-1}.
HeckeElement theta_oracle(const AffineWeylPtr& g, const Cocharacter& plus, const Cocharacter& minus) {
  const Cocharacter lam = plus - minus;
  const int twice = g->length(g->translation(lam)) + g->length(g->translation(minus)) -
                    g->length(g->translation(plus));
  return (costandard_class(g, g->translation(plus)) * costandard_inverse(g, g->translation(minus))).shifted(twice / 2);
}

}  // namespace

TEST(Bernstein, DominantAndAntidominant) {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    auto g = group(name);
    Bernstein b(g);
    const auto& rd = g->root_datum();
    EXPECT_EQ(b.theta(rd.zero()), HeckeElement::unit(g));
    for (const auto& lam : oracle::box(rd.rank(), 2)) {
      if (rd.is_dominant(lam)) EXPECT_EQ(b.theta(lam), costandard_class(g, g->translation(lam))) << name;
      if (rd.is_antidominant(lam)) EXPECT_EQ(b.theta(lam), standard_class(g, g->translation(lam))) << name;
    }
  }
}

TEST(Bernstein, ThetaTimesInverseIsPowerOfQ) {
  for (const char* name : {"SL2", "PGL2", "GL2", "SL3"}) {
    auto g = group(name);
    Bernstein b(g);
    for (const auto& lam : oracle::box(g->root_datum().rank(), 2)) {
      EXPECT_EQ(b.theta(lam) * b.theta(-lam), qpow(g, g->length(g->translation(lam)))) << name << " " << lam;
    }
  }
}

TEST(Bernstein, MatchesFormulaOracle) {
  for (const char* name : {"SL2", "PGL3", "SO5"}) {
    auto g = group(name);
    Bernstein b(g);
    const auto& rd = g->root_datum();
    for (const auto& lam : oracle::box(rd.rank(), 2)) {
      const auto d = b.canonical_decomposition(lam);
      EXPECT_TRUE(rd.is_dominant(d.plus));
      EXPECT_TRUE(rd.is_dominant(d.minus));
      EXPECT_EQ(d.plus - d.minus, lam);
      EXPECT_EQ(b.theta(lam), theta_oracle(g, d.plus, d.minus)) << name << " " << lam;
    }
  }
}

TEST(Bernstein, DecompositionIndependence) {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4", "GL2"}) {
    auto g = group(name);
    Bernstein b(g);
    const auto& rd = g->root_datum();
    for (const auto& lam : oracle::box(rd.rank(), 2)) {
      const auto d = b.canonical_decomposition(lam);
      for (int k = 1; k <= 3; ++k) {
        const Cocharacter shift = k * rd.two_rho_vee();
        const ThetaDecomposition other{d.plus + shift, d.minus + shift};
        EXPECT_EQ(b.theta(lam, other), b.theta(lam)) << name << " " << lam << " k=" << k;
      }
    }
  }
}

TEST(Bernstein, RejectsInvalidDecomposition) {
  auto g = group("SL2");
  Bernstein b(g);
  EXPECT_THROW(b.theta(Cocharacter{1}, {Cocharacter{2}, Cocharacter{0}}), std::invalid_argument);
  EXPECT_THROW(b.theta(Cocharacter{1}, {Cocharacter{0}, Cocharacter{-1}}), std::invalid_argument);
}

TEST(Bernstein, RelationExponent) {
  auto g = group("SL2");
  Bernstein b(g);
  EXPECT_EQ(b.relation_exponent(Cocharacter{1}, Cocharacter{-2}), 2);
  EXPECT_EQ(b.relation_exponent(Cocharacter{3}, Cocharacter{-3}), 6);
  EXPECT_EQ(b.relation_exponent(Cocharacter{1}, Cocharacter{2}), 0);
  auto sl3 = group("SL3");
  Bernstein b3(sl3);
  for (const auto& lam : oracle::box(2, 2)) {
    for (const auto& mu : oracle::box(2, 2)) EXPECT_GE(b3.relation_exponent(lam, mu), 0);
  }
}

TEST(Bernstein, CommutativityAndRelation) {
  for (const char* name : {"SL2", "PGL2", "Sp4"}) {
    auto g = group(name);
    Bernstein b(g);
    const auto box = oracle::box(g->root_datum().rank(), g->root_datum().rank() == 1 ? 3 : 1);
    for (const auto& lam : box) {
      for (const auto& mu : box) {
        const auto prod = b.theta(lam) * b.theta(mu);
        EXPECT_EQ(prod, b.theta(mu) * b.theta(lam));
        EXPECT_EQ(prod, b.theta(lam + mu).shifted(b.relation_exponent(lam, mu))) << name << " " << lam << " " << mu;
      }
    }
  }
}

TEST(Bernstein, Integrality) {
  for (const auto& name : preset_names()) {
    auto g = AffineWeylGroup::create(preset(name));
    Bernstein b(g);
    for (const auto& lam : oracle::box(g->root_datum().rank(), name == "G2" ? 1 : 2)) {
      EXPECT_TRUE(b.theta(lam).is_polynomial()) << name << " " << lam;
    }
  }
}

TEST(Bernstein, LinearIndependence) {
  for (const char* name : {"SL3", "GL2"}) {
    auto g = group(name);
    Bernstein b(g);
    std::vector<HeckeElement> rows;
    for (const auto& lam : oracle::box(g->root_datum().rank(), 2)) rows.push_back(b.theta(lam));
    EXPECT_EQ(oracle::specialized_rank(rows, 3), static_cast<int>(rows.size())) << name;
  }
}

TEST(Bernstein, Centrality) {
  auto sl2 = group("SL2");
  EXPECT_TRUE(is_central(HeckeElement::unit(sl2)));
  EXPECT_FALSE(is_central(HeckeElement::basis(sl2, sl2->generator(1))));
  Bernstein b(sl2);
  EXPECT_EQ(b.z(Cocharacter{0}), HeckeElement::unit(sl2));
  const auto z1 = b.z(Cocharacter{1});
  EXPECT_EQ(z1, b.theta(Cocharacter{1}) + b.theta(Cocharacter{-1}));
  // Commutators with both affine generators, computed directly.
  for (int s = 0; s < 2; ++s) {
    const auto Ts = HeckeElement::basis(sl2, sl2->generator(s));
    EXPECT_EQ(Ts * z1, z1 * Ts);
  }
  EXPECT_THROW(b.z(Cocharacter{-1}), std::invalid_argument);

  auto pgl2 = group("PGL2");
  Bernstein bp(pgl2);
  const auto zw = bp.z(Cocharacter{1});
  EXPECT_EQ(zw, bp.theta(Cocharacter{1}) + bp.theta(Cocharacter{-1}));
  for (const auto& x : pgl2->omega_elements().elements) {
    const auto Tx = HeckeElement::basis(pgl2, x);
    EXPECT_EQ(Tx * zw, zw * Tx);
  }
  // A single theta is not central.
  EXPECT_FALSE(is_central(bp.theta(Cocharacter{1})));
}

TEST(Bernstein, OppositeBorel) {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    auto g = group(name);
    Bernstein standard(g, Borel::Standard);
    Bernstein opposite(g, Borel::Opposite);
    const auto& rd = g->root_datum();
    for (const auto& lam : oracle::box(rd.rank(), 1)) {
      if (rd.is_antidominant(lam)) EXPECT_EQ(opposite.theta(lam), costandard_class(g, g->translation(lam)));
      EXPECT_TRUE(opposite.theta(lam).is_polynomial());
    }
    for (const auto& mu : oracle::box(rd.rank(), 2)) {
      if (!rd.is_dominant(mu) || g->length(g->translation(mu)) > 6) continue;
      EXPECT_EQ(opposite.z(mu), standard.z(mu)) << name << " " << mu;
    }
  }
}

#include <gtest/gtest.h>

#include "heckeforge/central_map.hpp"
#include "heckeforge/error.hpp"
#include "oracles.hpp"

using namespace heckeforge;

namespace {

AffineWeylPtr group(const char* name) { return AffineWeylGroup::create(preset(name)); }

LaurentPoly q() { return LaurentPoly::q(); }

// Z_mu from the defining sum, using only Bernstein and the Weyl-formula
// multiplicities.
HeckeElement z_oracle(const AffineWeylPtr& g, const Cocharacter& mu) {
  Bernstein b(g);
  HeckeElement out(g);
  const int top = g->length(g->translation(mu));
  for (const auto& [nu, m] : weyl_character_multiplicities(g->root_datum(), mu).mults) {
    const int twice = top - g->length(g->translation(nu));
    out.add_scaled(b.theta(nu), LaurentPoly::monomial(twice / 2, m));
  }
  return out;
}

}  // namespace

TEST(CentralMap, DominantCoweights) {
  auto sl2 = group("SL2");
  EXPECT_EQ(dominant_coweights(*sl2, 8, 8),
            (std::vector<Cocharacter>{Cocharacter{0}, Cocharacter{1}, Cocharacter{2}, Cocharacter{3}, Cocharacter{4}}));
  auto pgl2 = group("PGL2");
  EXPECT_EQ(dominant_coweights(*pgl2, 3, 8).size(), 4u);
  auto gl2 = group("GL2");
  for (const auto& mu : dominant_coweights(*gl2, 2, 1)) {
    EXPECT_TRUE(gl2->root_datum().is_dominant(mu));
    EXPECT_LE(gl2->length(gl2->translation(mu)), 2);
  }
  auto sl3 = group("SL3");
  std::size_t expected = 0;
  for (const auto& mu : oracle::box(2, 8)) {
    expected += sl3->root_datum().is_dominant(mu) && sl3->length(sl3->translation(mu)) <= 8;
  }
  EXPECT_EQ(dominant_coweights(*sl3, 8, 8).size(), expected);
}

TEST(CentralMap, CentralClassExamples) {
  auto sl2 = group("SL2");
  CentralMap cm(sl2);
  const auto& b = cm.bernstein();
  EXPECT_EQ(cm.central_ic_class(Cocharacter{0}), HeckeElement::unit(sl2));
  EXPECT_EQ(cm.central_ic_class(Cocharacter{1}),
            b.theta(Cocharacter{1}) + b.theta(Cocharacter{0}).scaled(q()) + b.theta(Cocharacter{-1}));
  auto pgl2 = group("PGL2");
  CentralMap cp(pgl2);
  EXPECT_EQ(cp.central_ic_class(Cocharacter{1}), cp.z(Cocharacter{1}));
}

TEST(CentralMap, MatchesDefiningSum) {
  for (const char* name : {"SL2", "PGL2", "GL2", "SL3", "Sp4"}) {
    auto g = group(name);
    CentralMap cm(g);
    for (const auto& mu : dominant_coweights(*g, 6, 2)) {
      const auto& Z = cm.central_ic_class(mu);
      EXPECT_EQ(Z, z_oracle(g, mu)) << name << " " << mu;
      EXPECT_TRUE(Z.is_polynomial());
      for (int s = 0; s < g->num_generators(); ++s) {
        const auto Ts = HeckeElement::basis(g, g->generator(s));
        EXPECT_EQ(Ts * Z, Z * Ts) << name << " " << mu << " s" << s;
      }
    }
  }
}

TEST(CentralMap, ZBasisExpansions) {
  auto sl2 = group("SL2");
  CentralMap cm(sl2);
  EXPECT_EQ(cm.expand_in_z_basis(cm.z(Cocharacter{2})), (CenterExpansion{{Cocharacter{2}, 1}}));
  EXPECT_EQ(cm.expand_in_z_basis(cm.central_ic_class(Cocharacter{1})),
            (CenterExpansion{{Cocharacter{0}, q()}, {Cocharacter{1}, 1}}));
  EXPECT_EQ(cm.expand_in_z_basis(cm.central_ic_class(Cocharacter{2})),
            (CenterExpansion{{Cocharacter{0}, q() * q()}, {Cocharacter{1}, q()}, {Cocharacter{2}, 1}}));
  try {
    cm.expand_in_z_basis(HeckeElement::basis(sl2, sl2->generator(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInThetaSpan);
  }
  EXPECT_EQ(cm.expand_in_central_basis(cm.central_ic_class(Cocharacter{3})), (CenterExpansion{{Cocharacter{3}, 1}}));
}

TEST(CentralMap, Unitriangularity) {
  for (const char* name : {"SL3", "Sp4", "G2"}) {
    auto g = group(name);
    CentralMap cm(g);
    const auto& rd = g->root_datum();
    for (const auto& mu : dominant_coweights(*g, name == std::string("G2") ? 10 : 8, 4)) {
      const auto e = cm.expand_in_z_basis(cm.central_ic_class(mu));
      ASSERT_TRUE(e.count(mu));
      EXPECT_EQ(e.at(mu), LaurentPoly(1));
      for (const auto& [nu, c] : e) {
        EXPECT_TRUE(rd.dominance_leq(nu, mu)) << name << " " << nu << " vs " << mu;
        EXPECT_TRUE(c.is_polynomial());
      }
    }
  }
}

TEST(CentralMap, SatakeStructureConstants) {
  auto sl2 = group("SL2");
  CentralMap cm(sl2);
  EXPECT_EQ(cm.satake_structure_constants(Cocharacter{0}, Cocharacter{2}), (CenterExpansion{{Cocharacter{2}, 1}}));
  const auto c11 = cm.satake_structure_constants(Cocharacter{1}, Cocharacter{1});
  std::map<Cocharacter, Integer> at_one;
  for (const auto& [nu, c] : c11) at_one[nu] = c.eval(Integer(1));
  EXPECT_EQ(at_one, tensor_multiplicities(sl2->root_datum(), Cocharacter{1}, Cocharacter{1}));

  auto pgl2 = group("PGL2");
  CentralMap cp(pgl2);
  std::map<Cocharacter, Integer> p_one;
  for (const auto& [nu, c] : cp.satake_structure_constants(Cocharacter{1}, Cocharacter{1})) p_one[nu] = c.eval(Integer(1));
  EXPECT_EQ(p_one, (std::map<Cocharacter, Integer>{{Cocharacter{0}, 1}, {Cocharacter{2}, 1}}));

  auto sp4 = group("Sp4");
  CentralMap cs(sp4);
  const Cocharacter a{1, 0};
  const Cocharacter b{1, 1};
  EXPECT_EQ(cs.satake_structure_constants(a, b), cs.satake_structure_constants(b, a));
}

TEST(CentralMap, ChecksAndVerify) {
  auto sl2 = group("SL2");
  CentralMap cm(sl2);
  const auto c = cm.check(Cocharacter{2});
  EXPECT_TRUE(c.central && c.unitriangular && c.integral && c.character);
  const auto p = cm.check_product(Cocharacter{1}, Cocharacter{2});
  EXPECT_TRUE(p.commute && p.integral && p.tensor);

  const auto r0 = cm.verify(0);
  EXPECT_TRUE(r0.pass);
  EXPECT_EQ(r0.checks.size(), 1u);
  const auto r = cm.verify(8);
  EXPECT_TRUE(r.pass) << r.counterexample;
  EXPECT_EQ(r.checks.size(), 5u);
  EXPECT_TRUE(r.counterexample.empty());

  auto pgl2 = group("PGL2");
  EXPECT_TRUE(CentralMap(pgl2).verify(6).pass);
}

TEST(CentralMap, CharacterAtQEqualsOne) {
  for (const char* name : {"SL3", "GL2"}) {
    auto g = group(name);
    CentralMap cm(g);
    for (const auto& mu : dominant_coweights(*g, 6, 2)) {
      const auto& Z = cm.central_ic_class(mu);
      const auto ch = weyl_character_multiplicities(g->root_datum(), mu);
      std::map<Cocharacter, Integer> seen;
      for (const auto& [x, coeff] : Z.terms()) {
        const Integer v = coeff.eval(Integer(1));
        if (v.is_zero()) continue;
        ASSERT_EQ(x.w, g->root_datum().identity());
        seen[x.lam] = g->length(x) % 2 == 0 ? v : -v;
      }
      EXPECT_EQ(seen, ch.mults) << name << " " << mu;
    }
  }
}

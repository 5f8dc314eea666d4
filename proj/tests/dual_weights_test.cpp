#include <gtest/gtest.h>

#include <set>

#include "heckeforge/dual_weights.hpp"
#include "heckeforge/error.hpp"
#include "oracles.hpp"

using namespace heckeforge;

namespace {

// V(k a^) for SL2: each j a^ with |j| <= k, once.
std::map<Cocharacter, Integer> rank_one_oracle(const RootDatum& rd, int k) {
  std::map<Cocharacter, Integer> out;
  const Cocharacter a = rd.simple_coroot(0);
  for (int j = -k; j <= k; ++j) out[j * a] = 1;
  return out;
}

}  // namespace

TEST(DualWeights, TrivialRepresentation) {
  for (const auto& name : preset_names()) {
    const auto rd = preset(name);
    const auto ch = weight_multiplicities(*rd, rd->zero());
    ASSERT_EQ(ch.mults.size(), 1u);
    EXPECT_EQ(ch.multiplicity(rd->zero()), Integer(1));
    EXPECT_EQ(weyl_dimension(*rd, rd->zero()), Integer(1));
  }
}

TEST(DualWeights, RankOne) {
  const auto sl2 = preset("SL2");
  for (int k = 0; k <= 6; ++k) {
    const auto ch = weight_multiplicities(*sl2, Cocharacter{k});
    EXPECT_EQ(ch.mults, rank_one_oracle(*sl2, k));
    EXPECT_EQ(ch.dimension(), Integer(2 * k + 1));
    EXPECT_EQ(weyl_dimension(*sl2, Cocharacter{k}), Integer(2 * k + 1));
  }
  // PGL2: weights of Sym^k of the standard representation of SL2.
  const auto pgl2 = preset("PGL2");
  for (int k = 0; k <= 6; ++k) {
    const auto ch = weight_multiplicities(*pgl2, Cocharacter{k});
    EXPECT_EQ(ch.dimension(), Integer(k + 1));
    for (int j = -k; j <= k; j += 2) EXPECT_EQ(ch.multiplicity(Cocharacter{j}), Integer(1));
  }
}

TEST(DualWeights, AdjointOfSL3) {
  const auto sl3 = preset("SL3");
  const auto ch = weight_multiplicities(*sl3, Cocharacter{1, 1});
  EXPECT_EQ(ch.dimension(), Integer(8));
  EXPECT_EQ(ch.multiplicity(Cocharacter{0, 0}), Integer(2));
  EXPECT_EQ(weyl_dimension(*sl3, Cocharacter{1, 1}), Integer(8));
  EXPECT_EQ(ch.mults.size(), 7u);
}

TEST(DualWeights, KnownDimensions) {
  // Dual of Sp4 is SO5: short fundamental coweight of Sp4 gives the 5-dim
  // standard representation.
  const auto sp4 = preset("Sp4");
  EXPECT_EQ(weight_multiplicities(*sp4, Cocharacter{1, 0}).dimension(), Integer(5));
  EXPECT_EQ(weyl_dimension(*sp4, Cocharacter{1, 0}), Integer(5));
  EXPECT_EQ(weyl_dimension(*sp4, Cocharacter{1, 1}), Integer(10));
  // G2 fundamental coweights in the coroot basis: 7 and 14.
  const auto g2 = preset("G2");
  std::set<std::string> dims;
  for (const auto& mu : {Cocharacter{2, 3}, Cocharacter{1, 2}}) {
    ASSERT_TRUE(g2->is_dominant(mu));
    dims.insert(weyl_dimension(*g2, mu).to_string());
  }
  EXPECT_EQ(dims, (std::set<std::string>{"14", "7"}));
  // GL2: V(1,0) is the standard representation of GL2.
  const auto gl2 = preset("GL2");
  const auto std_rep = weight_multiplicities(*gl2, Cocharacter{1, 0});
  EXPECT_EQ(std_rep.dimension(), Integer(2));
  EXPECT_EQ(std_rep.multiplicity(Cocharacter{0, 1}), Integer(1));
}

TEST(DualWeights, FreudenthalMatchesWeylOracle) {
  for (const auto& name : preset_names()) {
    const auto rd = preset(name);
    const int box = rd->is_semisimple() ? 6 : 3;
    for (const auto& mu : oracle::box(rd->rank(), box)) {
      if (!rd->is_dominant(mu) || rd->rho2_pairing(mu) > 12) continue;
      const auto f = freudenthal_multiplicities(*rd, mu);
      const auto w = weyl_character_multiplicities(*rd, mu);
      EXPECT_EQ(f.mults, w.mults) << name << " " << mu;
      EXPECT_EQ(f.dimension(), weyl_dimension(*rd, mu)) << name << " " << mu;
    }
  }
}

TEST(DualWeights, CharacterInvariants) {
  for (const char* name : {"SL3", "Sp4", "G2"}) {
    const auto rd = preset(name);
    for (const auto& mu : oracle::box(2, 2)) {
      if (!rd->is_dominant(mu)) continue;
      const auto ch = weight_multiplicities(*rd, mu);
      for (const auto& [nu, m] : ch.mults) {
        EXPECT_GT(m, Integer(0));
        EXPECT_TRUE(rd->dominance_leq(rd->dominant_representative(nu).first, mu));
        for (const auto& x : oracle::orbit(*rd, nu)) EXPECT_EQ(ch.multiplicity(x), m);
      }
      for (const auto& x : oracle::orbit(*rd, mu)) EXPECT_EQ(ch.multiplicity(x), Integer(1));
    }
  }
}

TEST(DualWeights, TensorProducts) {
  const auto sl2 = preset("SL2");
  const auto t = tensor_multiplicities(*sl2, Cocharacter{1}, Cocharacter{1});
  EXPECT_EQ(t, (std::map<Cocharacter, Integer>{{Cocharacter{0}, 1}, {Cocharacter{1}, 1}, {Cocharacter{2}, 1}}));
  const auto pgl2 = preset("PGL2");
  EXPECT_EQ(tensor_multiplicities(*pgl2, Cocharacter{1}, Cocharacter{1}),
            (std::map<Cocharacter, Integer>{{Cocharacter{0}, 1}, {Cocharacter{2}, 1}}));
  const auto sl3 = preset("SL3");
  EXPECT_EQ(tensor_multiplicities(*sl3, Cocharacter{0, 0}, Cocharacter{1, 1}),
            (std::map<Cocharacter, Integer>{{Cocharacter{1, 1}, 1}}));
  // 8 x 8 = 27 + 10 + 10* + 8 + 8 + 1 for the adjoint of PGL3.
  const auto adj = tensor_multiplicities(*sl3, Cocharacter{1, 1}, Cocharacter{1, 1});
  Integer total = 0;
  for (const auto& [nu, c] : adj) total += c * weyl_dimension(*sl3, nu);
  EXPECT_EQ(total, Integer(64));
  EXPECT_EQ(adj.at(Cocharacter{1, 1}), Integer(2));
  EXPECT_EQ(adj.size(), 5u);
}

TEST(DualWeights, Memoization) {
  DualWeights dw(preset("Sp4"));
  const auto a = dw.weights(Cocharacter{2, 1});
  const auto b = dw.weights(Cocharacter{2, 1});
  EXPECT_EQ(a.mults, b.mults);
  EXPECT_EQ(a.to_group_ring().terms().size(), a.mults.size());
}

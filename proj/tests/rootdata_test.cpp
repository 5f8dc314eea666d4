#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "heckeforge/error.hpp"
#include "heckeforge/root_datum.hpp"
#include "oracles.hpp"

using namespace heckeforge;

namespace {

ErrorKind build_error(const RootDatumSpec& spec, std::size_t cap = RootDatum::kDefaultWeylCap) {
  try {
    RootDatum::build(spec, cap);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::ParseError;
}

// Coxeter exponent m_ij from the Cartan product a_ij a_ji.
int coxeter_m(int prod) {
  switch (prod) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  return 0;
}

}  // namespace

TEST(RootData, WeylGroupOrders) {
  EXPECT_EQ(preset("SL2")->weyl_order(), 2u);
  EXPECT_EQ(preset("PGL2")->weyl_order(), 2u);
  EXPECT_EQ(preset("GL2")->weyl_order(), 2u);
  EXPECT_EQ(preset("SL3")->weyl_order(), 6u);
  EXPECT_EQ(preset("PGL3")->weyl_order(), 6u);
  EXPECT_EQ(preset("Sp4")->weyl_order(), 8u);
  EXPECT_EQ(preset("SO5")->weyl_order(), 8u);
  EXPECT_EQ(preset("G2")->weyl_order(), 12u);
}

TEST(RootData, PositiveRoots) {
  EXPECT_EQ(preset("SL2")->positive_roots().size(), 1u);
  const auto sl3 = preset("SL3");
  ASSERT_EQ(sl3->positive_roots().size(), 3u);
  EXPECT_EQ(sl3->positive_roots()[0].root, (std::vector<int>{2, -1}));
  EXPECT_EQ(sl3->positive_roots()[1].root, (std::vector<int>{-1, 2}));
  EXPECT_EQ(sl3->positive_roots()[2].root, (std::vector<int>{1, 1}));
  EXPECT_EQ(sl3->positive_roots()[2].height, 2);
  EXPECT_EQ(preset("Sp4")->positive_roots().size(), 4u);
  EXPECT_EQ(preset("G2")->positive_roots().size(), 6u);
}

TEST(RootData, PresetGL2) {
  const auto gl2 = preset("GL2");
  EXPECT_EQ(gl2->rank(), 2);
  EXPECT_EQ(gl2->num_simple(), 1);
  EXPECT_EQ(std::vector<int>(gl2->simple_root(0).begin(), gl2->simple_root(0).end()), (std::vector<int>{1, -1}));
  EXPECT_EQ(gl2->simple_coroot(0), (Cocharacter{1, -1}));
  EXPECT_FALSE(gl2->is_semisimple());
  EXPECT_TRUE(preset("SL3")->is_semisimple());
}

TEST(RootData, RhoPairing) {
  EXPECT_EQ(preset("SL2")->rho2_pairing(Cocharacter{1}), 2);
  EXPECT_EQ(preset("PGL2")->rho2_pairing(Cocharacter{1}), 1);
  EXPECT_EQ(preset("SL3")->rho2_pairing(Cocharacter{1, 1}), 4);
}

TEST(RootData, DominantRepresentative) {
  const auto sl2 = preset("SL2");
  auto [d, w] = sl2->dominant_representative(Cocharacter{-1});
  EXPECT_EQ(d, Cocharacter{1});
  EXPECT_EQ(w, sl2->simple_reflection(0));
  auto [d0, w0] = sl2->dominant_representative(Cocharacter{3});
  EXPECT_EQ(d0, Cocharacter{3});
  EXPECT_EQ(w0, sl2->identity());

  const auto sl3 = preset("SL3");
  for (const auto& lam : oracle::box(2, 3)) {
    auto [dom, w] = sl3->dominant_representative(lam);
    EXPECT_TRUE(sl3->is_dominant(dom));
    EXPECT_EQ(sl3->act(w, lam), dom);
    const auto orb = oracle::orbit(*sl3, lam);
    EXPECT_EQ(std::count_if(orb.begin(), orb.end(), [&](const Cocharacter& x) { return sl3->is_dominant(x); }), 1);
    EXPECT_NE(std::find(orb.begin(), orb.end(), dom), orb.end());
    // Minimal length among all elements mapping lam to dom.
    int best = 1 << 20;
    for (std::uint32_t i = 0; i < sl3->weyl_order(); ++i) {
      if (sl3->act({i}, lam) == dom) best = std::min(best, sl3->length({i}));
    }
    EXPECT_EQ(sl3->length(w), best);
  }
}

TEST(RootData, OrbitMatchesClosure) {
  for (const auto& name : preset_names()) {
    const auto rd = preset(name);
    for (const auto& lam : oracle::box(rd->rank(), 2)) EXPECT_EQ(rd->orbit(lam), oracle::orbit(*rd, lam)) << name;
  }
}

TEST(RootData, SumOfAbsolutePairingsIsInvariant) {
  for (const auto& name : preset_names()) {
    const auto rd = preset(name);
    auto abs_sum = [&](const Cocharacter& lam) {
      int s = 0;
      for (const auto& r : rd->positive_roots()) s += std::abs(pair(r.root, lam));
      return s;
    };
    for (const auto& lam : oracle::box(rd->rank(), 2)) {
      if (rd->is_dominant(lam)) EXPECT_EQ(abs_sum(lam), rd->rho2_pairing(lam));
      for (std::uint32_t i = 0; i < rd->weyl_order(); ++i) EXPECT_EQ(abs_sum(rd->act({i}, lam)), abs_sum(lam));
    }
  }
}

TEST(RootData, CoxeterRelations) {
  for (const auto& name : preset_names()) {
    const auto rd = preset(name);
    for (int i = 0; i < rd->num_simple(); ++i) {
      const auto si = rd->simple_reflection(i);
      EXPECT_EQ(rd->multiply(si, si), rd->identity());
      for (int j = 0; j < rd->num_simple(); ++j) {
        if (i == j) continue;
        const int m = coxeter_m(rd->cartan(i, j) * rd->cartan(j, i));
        ASSERT_GT(m, 0);
        const auto prod = rd->multiply(si, rd->simple_reflection(j));
        auto x = rd->identity();
        for (int k = 1; k <= m; ++k) {
          x = rd->multiply(x, prod);
          if (k < m) EXPECT_NE(x, rd->identity());
        }
        EXPECT_EQ(x, rd->identity()) << name << " " << i << " " << j;
      }
    }
  }
}

TEST(RootData, RootsAreDisjointFromNegatives) {
  for (const auto& name : preset_names()) {
    const auto rd = preset(name);
    std::set<std::vector<int>> pos;
    for (const auto& r : rd->positive_roots()) pos.insert(r.root);
    ASSERT_EQ(rd->all_roots().size(), 2 * pos.size());
    for (const auto& r : rd->positive_roots()) {
      std::vector<int> neg = r.root;
      for (int& v : neg) v = -v;
      EXPECT_FALSE(pos.count(neg));
    }
    // W0 permutes the roots.
    std::set<Cocharacter> coroots;
    for (const auto& r : rd->all_roots()) coroots.insert(r.coroot);
    for (std::uint32_t i = 0; i < rd->weyl_order(); ++i) {
      for (const auto& c : coroots) EXPECT_TRUE(coroots.count(rd->act({i}, c)));
    }
  }
}

TEST(RootData, ValidationErrors) {
  EXPECT_EQ(build_error({"bad", 2, {{1}}, {{1, 0}}}), ErrorKind::RankMismatch);
  EXPECT_EQ(build_error({"bad", 1, {{1}}, {{1}}}), ErrorKind::NotGCM);
  // Affine A1 Cartan matrix [[2,-2],[-2,2]] generates an infinite group.
  EXPECT_EQ(build_error({"dep", 2, {{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}}}), ErrorKind::NotGCM);
  EXPECT_EQ(build_error({"A1aff", 3, {{2, -2, 1}, {-2, 2, 1}}, {{1, 0, 0}, {0, 1, 0}}}, 1000), ErrorKind::NotFiniteType);
  EXPECT_EQ(build_error(preset_spec("G2"), 6), ErrorKind::NotFiniteType);
  try {
    preset("E8");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownPreset);
  }
}

TEST(RootData, DominanceOrder) {
  const auto sl3 = preset("SL3");
  EXPECT_TRUE(sl3->dominance_leq(Cocharacter{0, 0}, Cocharacter{1, 1}));
  EXPECT_TRUE(sl3->dominance_leq(Cocharacter{1, 0}, Cocharacter{2, 0}));
  EXPECT_FALSE(sl3->dominance_leq(Cocharacter{1, 0}, Cocharacter{0, 1}));
  EXPECT_FALSE(sl3->dominance_leq(Cocharacter{0, 1}, Cocharacter{1, 0}));
  EXPECT_FALSE(preset("PGL2")->dominance_leq(Cocharacter{0}, Cocharacter{1}));
  EXPECT_EQ(sl3->two_rho_vee(), (Cocharacter{2, 2}));
}

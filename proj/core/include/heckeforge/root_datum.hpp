#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckeforge/cocharacter.hpp"

namespace heckeforge {

// Handle to an element of the finite Weyl group W0 of a particular
// RootDatum.  Elements are enumerated once at construction; the index is the
// position in graded-lex order (by length, then by reduced word).
struct FiniteWeylElement {
  std::uint32_t index = 0;
  friend bool operator==(FiniteWeylElement, FiniteWeylElement) = default;
  friend auto operator<=>(FiniteWeylElement, FiniteWeylElement) = default;
};

struct RootDatumSpec {
  std::string name;
  int rank = 0;
  std::vector<std::vector<int>> simple_roots;    // characters
  std::vector<std::vector<int>> simple_coroots;  // cocharacters
};

struct Root {
  std::vector<int> root;          // in X^*(T)
  Cocharacter coroot;             // in X_*(T)
  std::vector<int> simple_coords; // root = sum simple_coords[i] * alpha_i
  int height = 0;
};

class RootDatum {
 public:
  static constexpr std::size_t kDefaultWeylCap = 1'000'000;

  // Validates the spec and enumerates W0.  Throws Error(RankMismatch |
  // NotGCM | NotFiniteType).
  static std::shared_ptr<const RootDatum> build(const RootDatumSpec& spec,
                                                std::size_t weyl_cap = kDefaultWeylCap);

  const RootDatumSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  int rank() const { return spec_.rank; }
  int num_simple() const { return static_cast<int>(spec_.simple_roots.size()); }
  std::span<const int> simple_root(int i) const { return spec_.simple_roots[static_cast<std::size_t>(i)]; }
  const Cocharacter& simple_coroot(int i) const { return simple_coroots_[static_cast<std::size_t>(i)]; }
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * num_simple() + j)]; }

  // Positive roots in graded-lex order (height, then simple coordinates).
  const std::vector<Root>& positive_roots() const { return positive_; }
  // Positive roots followed by their negatives, index-aligned.
  const std::vector<Root>& all_roots() const { return roots_; }

  // Irreducible components as lists of simple-root indices, ordered by
  // smallest member; highest_root(c) is an index into positive_roots().
  const std::vector<std::vector<int>>& components() const { return components_; }
  std::size_t highest_root(std::size_t component) const { return highest_[component]; }

  // <2 rho, lambda> = sum over positive roots of <alpha, lambda>.
  int rho2_pairing(const Cocharacter& lambda) const;
  bool is_dominant(const Cocharacter& lambda) const;
  bool is_antidominant(const Cocharacter& lambda) const;
  Cocharacter zero() const { return Cocharacter::zero(static_cast<std::size_t>(rank())); }
  // Sum of the positive coroots (= 2 rho^vee), strictly dominant.
  const Cocharacter& two_rho_vee() const { return two_rho_vee_; }

  // nu <= mu in dominance order: mu - nu is a nonnegative integer combination
  // of simple coroots.
  bool dominance_leq(const Cocharacter& nu, const Cocharacter& mu) const;

  // Unique dominant element of the W0-orbit and the shortest w with
  // w(lambda) = lambda_dom.
  std::pair<Cocharacter, FiniteWeylElement> dominant_representative(const Cocharacter& lambda) const;
  // W0-orbit, sorted lexicographically.
  std::vector<Cocharacter> orbit(const Cocharacter& lambda) const;

  // Finite Weyl group.
  std::size_t weyl_order() const { return weyl_words_.size(); }
  FiniteWeylElement identity() const { return {0}; }
  FiniteWeylElement simple_reflection(int i) const { return simple_refl_[static_cast<std::size_t>(i)]; }
  FiniteWeylElement multiply(FiniteWeylElement a, FiniteWeylElement b) const;
  FiniteWeylElement inverse(FiniteWeylElement w) const { return {weyl_inverse_[w.index]}; }
  const std::vector<int>& word(FiniteWeylElement w) const { return weyl_words_[w.index]; }
  int length(FiniteWeylElement w) const { return static_cast<int>(weyl_words_[w.index].size()); }
  std::span<const int> matrix(FiniteWeylElement w) const;
  Cocharacter act(FiniteWeylElement w, const Cocharacter& lambda) const;
  // Reads a word of simple reflection indices (0-based) into an element.
  FiniteWeylElement from_word(std::span<const int> word) const;
  std::optional<FiniteWeylElement> find(std::span<const int> matrix) const;
  int det(FiniteWeylElement w) const { return length(w) % 2 == 0 ? 1 : -1; }

  // For w and the k-th positive root alpha: true iff w^{-1}(alpha) < 0.
  bool inverse_negates(FiniteWeylElement w, std::size_t k) const {
    return inv_neg_[w.index * positive_.size() + k] != 0;
  }

  // Index of a coroot vector among all_roots(), or -1.
  int coroot_index(const Cocharacter& coroot) const;

  // Dimension of the span of the simple coroots equals rank().
  bool is_semisimple() const { return coroot_rank_ == rank(); }

 private:
  RootDatum() = default;
  void enumerate_weyl(std::size_t cap);
  void enumerate_roots();

  RootDatumSpec spec_;
  std::vector<Cocharacter> simple_coroots_;
  std::vector<int> cartan_;
  int coroot_rank_ = 0;

  std::vector<Root> positive_;
  std::vector<Root> roots_;
  std::unordered_map<Cocharacter, int> coroot_index_;
  std::vector<std::vector<int>> components_;
  std::vector<std::size_t> highest_;
  Cocharacter two_rho_vee_;
  std::vector<long> cartan_adj_;  // adjugate of the Cartan matrix
  long cartan_det_ = 1;

  std::vector<std::vector<int>> weyl_words_;
  std::vector<int> weyl_matrices_;  // flat, rank*rank per element
  std::vector<std::uint32_t> weyl_inverse_;
  std::vector<std::uint32_t> weyl_mult_;  // flat table when small enough
  std::vector<FiniteWeylElement> simple_refl_;
  std::unordered_map<std::string, std::uint32_t> weyl_lookup_;
  std::vector<std::uint8_t> inv_neg_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

// Standard based root data: SL2, PGL2, GL2, SL3, PGL3, Sp4, SO5, G2.
// Throws Error(UnknownPreset).
RootDatumPtr preset(std::string_view name);
const std::vector<std::string>& preset_names();
RootDatumSpec preset_spec(std::string_view name);

}  // namespace heckeforge

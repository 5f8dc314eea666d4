#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "heckeforge/cocharacter.hpp"
#include "heckeforge/laurent_poly.hpp"
#include "heckeforge/root_datum.hpp"

namespace heckeforge {

// t(lam) * w in W = X_*(T) x| W0.
struct ExtAffineElement {
  Cocharacter lam;
  FiniteWeylElement w;

  friend bool operator==(const ExtAffineElement&, const ExtAffineElement&) = default;
  std::size_t hash() const {
    std::size_t h = lam.hash();
    hash_mix(h, w.index);
    return h;
  }
};

struct ExtAffineHash {
  std::size_t operator()(const ExtAffineElement& x) const noexcept { return x.hash(); }
};

// A facet of the base alcove, named by the affine simple reflections fixing
// it.  Generator labels: 0 is the affine node of the first irreducible
// component, 1..r are the finite simple reflections, r+1.. are the affine
// nodes of further components.
struct Facet {
  std::vector<int> gens;  // sorted, unique
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

struct ReducedWord {
  std::vector<int> indices;  // generator labels, leftmost first
  ExtAffineElement omega;    // length-zero part: x = s_{i1} ... s_{ik} * omega
};

struct OmegaListing {
  std::vector<ExtAffineElement> elements;
  bool truncated = false;  // X_*/Z Phi^vee infinite; listing covers a box only
};

struct DoubleCoset {
  Facet left;
  Facet right;
  ExtAffineElement min_rep;
  std::vector<ExtAffineElement> elements;  // canonical order
  int length = 0;                          // length of min_rep
};

class AffineWeylGroup {
 public:
  static std::shared_ptr<const AffineWeylGroup> create(RootDatumPtr rd);

  const RootDatum& root_datum() const { return *rd_; }
  const RootDatumPtr& root_datum_ptr() const { return rd_; }

  ExtAffineElement identity() const { return {rd_->zero(), rd_->identity()}; }
  ExtAffineElement translation(const Cocharacter& lam) const { return {lam, rd_->identity()}; }
  ExtAffineElement finite(FiniteWeylElement w) const { return {rd_->zero(), w}; }
  ExtAffineElement multiply(const ExtAffineElement& a, const ExtAffineElement& b) const;
  ExtAffineElement inverse(const ExtAffineElement& x) const;

  // Affine simple reflections, indexed by generator label.
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const ExtAffineElement& generator(int label) const { return gens_[static_cast<std::size_t>(label)].element; }
  int finite_label(int simple_index) const { return simple_index + 1; }
  int affine_label(std::size_t component) const;
  ExtAffineElement left_mul_generator(int label, const ExtAffineElement& x) const;
  ExtAffineElement right_mul_generator(const ExtAffineElement& x, int label) const;

  // Iwahori-Matsumoto length.
  int length(const ExtAffineElement& x) const;
  ReducedWord reduced_word(const ExtAffineElement& x) const;
  ExtAffineElement omega_part(const ExtAffineElement& x) const { return reduced_word(x).omega; }
  // Smallest generator label s with l(s x) < l(x), or -1.
  int first_left_descent(const ExtAffineElement& x) const;

  bool bruhat_leq(const ExtAffineElement& v, const ExtAffineElement& w) const;
  std::vector<ExtAffineElement> lower_interval(const ExtAffineElement& w) const;

  OmegaListing omega_elements(int box = 2) const;
  // Elements of Omega generating it as a group.
  std::vector<ExtAffineElement> omega_generators() const;

  // All elements of length <= max_len (W_aff times the Omega listing).
  std::vector<ExtAffineElement> enumerate(int max_len, int omega_box = 2) const;

  Facet alcove() const { return {}; }
  Facet hyperspecial() const;
  bool is_proper(const Facet& f) const;
  // Throws Error(InfiniteParabolic) unless W_f is finite.
  const std::vector<ExtAffineElement>& parabolic_elements(const Facet& f) const;
  LaurentPoly poincare_polynomial(const Facet& f) const;

  DoubleCoset double_coset(const Facet& left, const ExtAffineElement& x, const Facet& right) const;
  std::vector<DoubleCoset> enumerate_double_cosets(const Facet& left, const Facet& right, int length_bound) const;

  // {w : w <= t(lam) for some lam in W0(mu)}, mu dominant.
  std::vector<ExtAffineElement> admissible_set(const Cocharacter& mu) const;
  std::vector<DoubleCoset> admissible_set(const Cocharacter& mu, const Facet& f) const;

  // (length, lam, w) ordering used for every deterministic listing.
  bool canonical_less(const ExtAffineElement& a, const ExtAffineElement& b) const;
  void sort_canonical(std::vector<ExtAffineElement>& xs) const;

  std::string format(const ExtAffineElement& x) const;  // "lam:word", word 1-based

 private:
  explicit AffineWeylGroup(RootDatumPtr rd);

  struct Generator {
    ExtAffineElement element;
    std::size_t root = 0;    // index into positive roots
    int shift = 0;           // 0 for finite reflections, 1 for affine nodes
    FiniteWeylElement reflection;
  };

  RootDatumPtr rd_;
  std::vector<Generator> gens_;
  std::vector<int> pos_flat_;  // positive roots, rank entries each
  std::size_t npos_ = 0;

  mutable std::mutex cache_mutex_;
  mutable std::map<Facet, std::vector<ExtAffineElement>> parabolic_cache_;
};

using AffineWeylPtr = std::shared_ptr<const AffineWeylGroup>;

}  // namespace heckeforge

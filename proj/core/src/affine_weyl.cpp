#include "heckeforge/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "heckeforge/error.hpp"

namespace heckeforge {

namespace {

constexpr std::size_t kParabolicCap = 1'000'000;

long integer_det(std::vector<std::vector<long>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  long sign = 1;
  long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::shared_ptr<const AffineWeylGroup> AffineWeylGroup::create(RootDatumPtr rd) {
  return std::shared_ptr<const AffineWeylGroup>(new AffineWeylGroup(std::move(rd)));
}

AffineWeylGroup::AffineWeylGroup(RootDatumPtr rd) : rd_(std::move(rd)) {
  const auto& pos = rd_->positive_roots();
  npos_ = pos.size();
  for (const auto& p : pos) pos_flat_.insert(pos_flat_.end(), p.root.begin(), p.root.end());

  const int r = rd_->num_simple();
  auto reflection_for = [&](std::size_t root_index) {
    // Find r_beta in W0 by its matrix: y -> y - <beta, y> beta^vee.
    const auto n = static_cast<std::size_t>(rd_->rank());
    std::vector<int> m(n * n);
    const auto& root = pos[root_index];
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) m[a * n + b] = (a == b ? 1 : 0) - root.coroot[a] * root.root[b];
    }
    return *rd_->find(m);
  };
  auto simple_root_index = [&](int i) {
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (pos[k].height == 1 && pos[k].simple_coords[static_cast<std::size_t>(i)] == 1) return k;
    }
    return std::size_t{0};
  };

  if (r == 0) return;
  gens_.resize(static_cast<std::size_t>(r) + rd_->components().size());
  for (std::size_t c = 0; c < rd_->components().size(); ++c) {
    const std::size_t theta = rd_->highest_root(c);
    Generator g;
    g.root = theta;
    g.shift = 1;
    g.reflection = reflection_for(theta);
    g.element = {pos[theta].coroot, g.reflection};  // s_0 = t(theta^vee) s_theta
    gens_[static_cast<std::size_t>(affine_label(c))] = g;
  }
  for (int i = 0; i < r; ++i) {
    Generator g;
    g.root = simple_root_index(i);
    g.shift = 0;
    g.reflection = rd_->simple_reflection(i);
    g.element = {rd_->zero(), g.reflection};
    gens_[static_cast<std::size_t>(finite_label(i))] = g;
  }
}

int AffineWeylGroup::affine_label(std::size_t component) const {
  return component == 0 ? 0 : rd_->num_simple() + static_cast<int>(component);
}

ExtAffineElement AffineWeylGroup::multiply(const ExtAffineElement& a, const ExtAffineElement& b) const {
  return {a.lam + rd_->act(a.w, b.lam), rd_->multiply(a.w, b.w)};
}

ExtAffineElement AffineWeylGroup::inverse(const ExtAffineElement& x) const {
  FiniteWeylElement winv = rd_->inverse(x.w);
  return {-rd_->act(winv, x.lam), winv};
}

ExtAffineElement AffineWeylGroup::left_mul_generator(int label, const ExtAffineElement& x) const {
  const Generator& g = gens_[static_cast<std::size_t>(label)];
  const Root& root = rd_->positive_roots()[g.root];
  // (t(k beta^vee) r_beta)(t(lam) w) = t(lam - (<beta,lam> - k) beta^vee) r_beta w
  const int c = pair(root.root, x.lam) - g.shift;
  ExtAffineElement y{x.lam, rd_->multiply(g.reflection, x.w)};
  if (c != 0) y.lam -= c * root.coroot;
  return y;
}

ExtAffineElement AffineWeylGroup::right_mul_generator(const ExtAffineElement& x, int label) const {
  const Generator& g = gens_[static_cast<std::size_t>(label)];
  ExtAffineElement y{x.lam, rd_->multiply(x.w, g.reflection)};
  if (g.shift != 0) y.lam += g.shift * rd_->act(x.w, rd_->positive_roots()[g.root].coroot);
  return y;
}

int AffineWeylGroup::length(const ExtAffineElement& x) const {
  const auto n = static_cast<std::size_t>(rd_->rank());
  int len = 0;
  for (std::size_t k = 0; k < npos_; ++k) {
    int a = 0;
    const int* root = &pos_flat_[k * n];
    for (std::size_t i = 0; i < n; ++i) a += root[i] * x.lam[i];
    if (rd_->inverse_negates(x.w, k)) a -= 1;
    len += std::abs(a);
  }
  return len;
}

int AffineWeylGroup::first_left_descent(const ExtAffineElement& x) const {
  const int l = length(x);
  if (l == 0) return -1;
  for (int s = 0; s < num_generators(); ++s) {
    if (length(left_mul_generator(s, x)) < l) return s;
  }
  return -1;
}

ReducedWord AffineWeylGroup::reduced_word(const ExtAffineElement& x) const {
  ReducedWord rw;
  ExtAffineElement cur = x;
  for (int s = first_left_descent(cur); s >= 0; s = first_left_descent(cur)) {
    rw.indices.push_back(s);
    cur = left_mul_generator(s, cur);
  }
  rw.omega = cur;
  return rw;
}

bool AffineWeylGroup::bruhat_leq(const ExtAffineElement& v, const ExtAffineElement& w) const {
  ExtAffineElement a = v;
  ExtAffineElement b = w;
  int la = length(a);
  int lb = length(b);
  while (lb > 0) {
    if (la > lb) return false;
    const int s = first_left_descent(b);
    b = left_mul_generator(s, b);
    --lb;
    ExtAffineElement sa = left_mul_generator(s, a);
    const int lsa = length(sa);
    if (lsa < la) {
      a = sa;
      la = lsa;
    }
  }
  return a == b;
}

std::vector<ExtAffineElement> AffineWeylGroup::lower_interval(const ExtAffineElement& w) const {
  ReducedWord rw = reduced_word(w);
  std::unordered_set<ExtAffineElement, ExtAffineHash> set{rw.omega};
  for (auto it = rw.indices.rbegin(); it != rw.indices.rend(); ++it) {
    std::vector<ExtAffineElement> add;
    add.reserve(set.size());
    for (const auto& y : set) add.push_back(left_mul_generator(*it, y));
    set.insert(add.begin(), add.end());
  }
  std::vector<ExtAffineElement> out(set.begin(), set.end());
  sort_canonical(out);
  return out;
}

OmegaListing AffineWeylGroup::omega_elements(int box) const {
  const auto n = static_cast<std::size_t>(rd_->rank());
  OmegaListing out;
  std::unordered_set<ExtAffineElement, ExtAffineHash> seen;
  long expected = -1;
  if (rd_->is_semisimple()) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = rd_->simple_coroot(static_cast<int>(i))[j];
    }
    expected = std::labs(integer_det(m));
  } else {
    out.truncated = true;
  }
  auto scan = [&](int radius) {
    std::vector<int> c(n, -radius);
    while (true) {
      ExtAffineElement om = omega_part(translation(Cocharacter(std::span<const int>(c))));
      seen.insert(om);
      std::size_t i = 0;
      while (i < n && c[i] == radius) c[i++] = -radius;
      if (i == n) break;
      ++c[i];
    }
  };
  if (expected > 0) {
    for (int radius = 0; static_cast<long>(seen.size()) < expected; ++radius) scan(radius);
  } else {
    scan(box);
  }
  out.elements.assign(seen.begin(), seen.end());
  sort_canonical(out.elements);
  return out;
}

std::vector<ExtAffineElement> AffineWeylGroup::omega_generators() const {
  const auto n = static_cast<std::size_t>(rd_->rank());
  std::vector<ExtAffineElement> gens;
  for (std::size_t j = 0; j < n; ++j) {
    Cocharacter e = rd_->zero();
    e[j] = 1;
    ExtAffineElement om = omega_part(translation(e));
    if (om == identity()) continue;
    if (std::find(gens.begin(), gens.end(), om) == gens.end()) gens.push_back(om);
  }
  return gens;
}

std::vector<ExtAffineElement> AffineWeylGroup::enumerate(int max_len, int omega_box) const {
  std::unordered_set<ExtAffineElement, ExtAffineHash> seen{identity()};
  std::vector<ExtAffineElement> frontier{identity()};
  for (int len = 0; len < max_len; ++len) {
    std::vector<ExtAffineElement> next;
    for (const auto& x : frontier) {
      for (int s = 0; s < num_generators(); ++s) {
        ExtAffineElement y = left_mul_generator(s, x);
        if (length(y) == len + 1 && seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ExtAffineElement> out;
  for (const auto& om : omega_elements(omega_box).elements) {
    for (const auto& x : seen) out.push_back(multiply(x, om));
  }
  sort_canonical(out);
  return out;
}

Facet AffineWeylGroup::hyperspecial() const {
  Facet f;
  for (int i = 0; i < rd_->num_simple(); ++i) f.gens.push_back(finite_label(i));
  return f;
}

bool AffineWeylGroup::is_proper(const Facet& f) const {
  for (int g : f.gens) {
    if (g < 0 || g >= num_generators()) return false;
  }
  for (std::size_t c = 0; c < rd_->components().size(); ++c) {
    bool all = std::binary_search(f.gens.begin(), f.gens.end(), affine_label(c));
    for (int i : rd_->components()[c]) all = all && std::binary_search(f.gens.begin(), f.gens.end(), finite_label(i));
    if (all) return false;
  }
  return true;
}

const std::vector<ExtAffineElement>& AffineWeylGroup::parabolic_elements(const Facet& f) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = parabolic_cache_.find(f);
    if (it != parabolic_cache_.end()) return it->second;
  }
  if (!std::is_sorted(f.gens.begin(), f.gens.end()) || !is_proper(f)) {
    throw Error(ErrorKind::InfiniteParabolic, "facet generators do not form a proper subset of affine nodes");
  }
  std::unordered_set<ExtAffineElement, ExtAffineHash> seen{identity()};
  std::vector<ExtAffineElement> queue{identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s : f.gens) {
      ExtAffineElement y = left_mul_generator(s, queue[head]);
      if (seen.insert(y).second) {
        if (seen.size() > kParabolicCap) throw Error(ErrorKind::InfiniteParabolic, "parabolic enumeration cap hit");
        queue.push_back(y);
      }
    }
  }
  sort_canonical(queue);
  std::lock_guard lock(cache_mutex_);
  return parabolic_cache_.emplace(f, std::move(queue)).first->second;
}

LaurentPoly AffineWeylGroup::poincare_polynomial(const Facet& f) const {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& x : parabolic_elements(f)) terms.emplace_back(length(x), Integer(1));
  return LaurentPoly::from_terms(std::move(terms));
}

DoubleCoset AffineWeylGroup::double_coset(const Facet& left, const ExtAffineElement& x, const Facet& right) const {
  const auto& wl = parabolic_elements(left);
  const auto& wr = parabolic_elements(right);
  std::unordered_set<ExtAffineElement, ExtAffineHash> set;
  for (const auto& u : wl) {
    ExtAffineElement ux = multiply(u, x);
    for (const auto& v : wr) set.insert(multiply(ux, v));
  }
  DoubleCoset dc;
  dc.left = left;
  dc.right = right;
  dc.elements.assign(set.begin(), set.end());
  sort_canonical(dc.elements);
  dc.min_rep = dc.elements.front();
  dc.length = length(dc.min_rep);
  return dc;
}

std::vector<DoubleCoset> AffineWeylGroup::enumerate_double_cosets(const Facet& left, const Facet& right,
                                                                  int length_bound) const {
  std::vector<DoubleCoset> out;
  std::unordered_set<ExtAffineElement, ExtAffineHash> covered;
  for (const auto& x : enumerate(length_bound)) {
    if (covered.contains(x)) continue;
    DoubleCoset dc = double_coset(left, x, right);
    covered.insert(dc.elements.begin(), dc.elements.end());
    out.push_back(std::move(dc));
  }
  std::sort(out.begin(), out.end(),
            [this](const DoubleCoset& a, const DoubleCoset& b) { return canonical_less(a.min_rep, b.min_rep); });
  return out;
}

std::vector<ExtAffineElement> AffineWeylGroup::admissible_set(const Cocharacter& mu) const {
  std::unordered_set<ExtAffineElement, ExtAffineHash> set;
  for (const auto& lam : rd_->orbit(mu)) {
    auto lower = lower_interval(translation(lam));
    set.insert(lower.begin(), lower.end());
  }
  std::vector<ExtAffineElement> out(set.begin(), set.end());
  sort_canonical(out);
  return out;
}

std::vector<DoubleCoset> AffineWeylGroup::admissible_set(const Cocharacter& mu, const Facet& f) const {
  std::vector<DoubleCoset> out;
  std::unordered_set<ExtAffineElement, ExtAffineHash> covered;
  for (const auto& x : admissible_set(mu)) {
    if (covered.contains(x)) continue;
    DoubleCoset dc = double_coset(f, x, f);
    covered.insert(dc.elements.begin(), dc.elements.end());
    out.push_back(std::move(dc));
  }
  std::sort(out.begin(), out.end(),
            [this](const DoubleCoset& a, const DoubleCoset& b) { return canonical_less(a.min_rep, b.min_rep); });
  return out;
}

bool AffineWeylGroup::canonical_less(const ExtAffineElement& a, const ExtAffineElement& b) const {
  const int la = length(a);
  const int lb = length(b);
  if (la != lb) return la < lb;
  if (a.lam != b.lam) return a.lam < b.lam;
  return a.w < b.w;
}

void AffineWeylGroup::sort_canonical(std::vector<ExtAffineElement>& xs) const {
  std::vector<std::pair<int, std::size_t>> keys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) keys[i] = {length(xs[i]), i};
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    const auto& x = xs[a.second];
    const auto& y = xs[b.second];
    if (x.lam != y.lam) return x.lam < y.lam;
    return x.w < y.w;
  });
  std::vector<ExtAffineElement> sorted;
  sorted.reserve(xs.size());
  for (const auto& k : keys) sorted.push_back(xs[k.second]);
  xs = std::move(sorted);
}

std::string AffineWeylGroup::format(const ExtAffineElement& x) const {
  std::string s = x.lam.to_string() + ":";
  const auto& word = rd_->word(x.w);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word[i] + 1);
  }
  return s;
}

}  // namespace heckeforge

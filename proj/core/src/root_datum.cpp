#include "heckeforge/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include <gmpxx.h>

#include "heckeforge/error.hpp"

namespace heckeforge {

namespace {

constexpr std::size_t kMultTableLimit = 4096;

int matrix_rank(std::vector<std::vector<mpq_class>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / prow[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * prow[k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpq_class>> to_rational(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<mpq_class>> r;
  for (const auto& row : m) {
    std::vector<mpq_class> rr;
    for (int v : row) rr.emplace_back(v);
    r.push_back(std::move(rr));
  }
  return r;
}

std::string matrix_key(std::span<const int> m) {
  return {reinterpret_cast<const char*>(m.data()), m.size() * sizeof(int)};
}

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::build(const RootDatumSpec& spec, std::size_t weyl_cap) {
  if (spec.rank <= 0 || static_cast<std::size_t>(spec.rank) > kMaxRank) {
    throw Error(ErrorKind::RankMismatch, "rank must be in 1.." + std::to_string(kMaxRank));
  }
  if (spec.simple_roots.size() != spec.simple_coroots.size()) {
    throw Error(ErrorKind::RankMismatch, "different numbers of simple roots and coroots");
  }
  for (const auto* list : {&spec.simple_roots, &spec.simple_coroots}) {
    for (const auto& v : *list) {
      if (v.size() != static_cast<std::size_t>(spec.rank)) {
        throw Error(ErrorKind::RankMismatch, "vector length differs from rank " + std::to_string(spec.rank));
      }
    }
  }

  std::shared_ptr<RootDatum> rd(new RootDatum());
  rd->spec_ = spec;
  const int r = rd->num_simple();
  for (const auto& v : spec.simple_coroots) rd->simple_coroots_.emplace_back(std::span<const int>(v));

  rd->cartan_.resize(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      rd->cartan_[static_cast<std::size_t>(i * r + j)] = pair(spec.simple_roots[static_cast<std::size_t>(i)],
                                                              rd->simple_coroots_[static_cast<std::size_t>(j)]);
    }
  }
  for (int i = 0; i < r; ++i) {
    if (rd->cartan(i, i) != 2) throw Error(ErrorKind::NotGCM, "diagonal Cartan entry is not 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (rd->cartan(i, j) > 0) throw Error(ErrorKind::NotGCM, "positive off-diagonal Cartan entry");
      if ((rd->cartan(i, j) == 0) != (rd->cartan(j, i) == 0)) {
        throw Error(ErrorKind::NotGCM, "Cartan zero pattern is not symmetric");
      }
    }
  }
  if (r > 0) {
    if (matrix_rank(to_rational(spec.simple_roots)) != r) {
      throw Error(ErrorKind::NotGCM, "simple roots are linearly dependent");
    }
    if (matrix_rank(to_rational(spec.simple_coroots)) != r) {
      throw Error(ErrorKind::NotGCM, "simple coroots are linearly dependent");
    }
  }
  rd->coroot_rank_ = r;

  rd->enumerate_weyl(weyl_cap);
  rd->enumerate_roots();

  // Cartan adjugate for dominance tests.
  if (r > 0) {
    std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(r), std::vector<mpq_class>(static_cast<std::size_t>(2 * r)));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rd->cartan(i, j);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r + i)] = 1;
    }
    mpq_class det = 1;
    for (int c = 0; c < r; ++c) {
      int p = c;
      while (a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
      if (p != c) {
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(c)]);
        det = -det;
      }
      mpq_class piv = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
      det *= piv;
      for (auto& x : a[static_cast<std::size_t>(c)]) x /= piv;
      for (int q = 0; q < r; ++q) {
        if (q == c) continue;
        mpq_class f = a[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
        if (f == 0) continue;
        for (int k = 0; k < 2 * r; ++k) {
          a[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)] -=
              f * a[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
        }
      }
    }
    rd->cartan_det_ = det.get_num().get_si();
    rd->cartan_adj_.resize(static_cast<std::size_t>(r * r));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        mpq_class v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r + j)] * det;
        rd->cartan_adj_[static_cast<std::size_t>(i * r + j)] = v.get_num().get_si();
      }
    }
  }
  return rd;
}

void RootDatum::enumerate_weyl(std::size_t cap) {
  const auto n = static_cast<std::size_t>(rank());
  const int r = num_simple();
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < r; ++i) {
    // s_i(y) = y - <alpha_i, y> alpha_i^vee
    std::vector<int> m(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        m[a * n + b] = (a == b ? 1 : 0) - simple_coroots_[static_cast<std::size_t>(i)][a] *
                                              spec_.simple_roots[static_cast<std::size_t>(i)][b];
      }
    }
    gens.push_back(std::move(m));
  }
  std::vector<int> ident(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) ident[a * n + a] = 1;

  weyl_words_.clear();
  weyl_matrices_.clear();
  weyl_lookup_.clear();
  weyl_words_.push_back({});
  weyl_matrices_.insert(weyl_matrices_.end(), ident.begin(), ident.end());
  weyl_lookup_.emplace(matrix_key(ident), 0);

  // Breadth-first with right multiplication: the first word found for an
  // element is its shortlex-minimal reduced word.
  std::vector<int> prod(n * n);
  for (std::size_t head = 0; head < weyl_words_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      const int* cur = &weyl_matrices_[head * n * n];
      const auto& g = gens[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          long s = 0;
          for (std::size_t k = 0; k < n; ++k) s += static_cast<long>(cur[a * n + k]) * g[k * n + b];
          prod[a * n + b] = static_cast<int>(s);
        }
      }
      auto key = matrix_key(prod);
      if (weyl_lookup_.contains(key)) continue;
      if (weyl_words_.size() >= cap) {
        throw Error(ErrorKind::NotFiniteType, "finite Weyl group exceeds " + std::to_string(cap) + " elements");
      }
      auto w = weyl_words_[head];
      w.push_back(i);
      weyl_lookup_.emplace(std::move(key), static_cast<std::uint32_t>(weyl_words_.size()));
      weyl_words_.push_back(std::move(w));
      weyl_matrices_.insert(weyl_matrices_.end(), prod.begin(), prod.end());
    }
  }

  const std::size_t order = weyl_words_.size();
  simple_refl_.clear();
  for (int i = 0; i < r; ++i) simple_refl_.push_back(*find(gens[static_cast<std::size_t>(i)]));

  auto mat_mul = [&](std::uint32_t x, std::uint32_t y) {
    const int* a = &weyl_matrices_[x * n * n];
    const int* b = &weyl_matrices_[y * n * n];
    std::vector<int> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < n; ++k) s += static_cast<long>(a[i * n + k]) * b[k * n + j];
        c[i * n + j] = static_cast<int>(s);
      }
    }
    return weyl_lookup_.at(matrix_key(c));
  };

  weyl_mult_.clear();
  if (order <= kMultTableLimit) {
    weyl_mult_.resize(order * order);
    for (std::uint32_t x = 0; x < order; ++x) {
      for (std::uint32_t y = 0; y < order; ++y) weyl_mult_[x * order + y] = mat_mul(x, y);
    }
  }
  weyl_inverse_.assign(order, 0);
  for (std::uint32_t x = 0; x < order; ++x) {
    // inverse = reversed word
    std::vector<int> w(weyl_words_[x].rbegin(), weyl_words_[x].rend());
    weyl_inverse_[x] = from_word(w).index;
  }
}

void RootDatum::enumerate_roots() {
  const int r = num_simple();
  const auto n = static_cast<std::size_t>(rank());
  std::map<std::vector<int>, Root> found;  // keyed by simple coordinates
  std::deque<Root> queue;
  for (int i = 0; i < r; ++i) {
    Root root;
    root.root = spec_.simple_roots[static_cast<std::size_t>(i)];
    root.coroot = simple_coroots_[static_cast<std::size_t>(i)];
    root.simple_coords.assign(static_cast<std::size_t>(r), 0);
    root.simple_coords[static_cast<std::size_t>(i)] = 1;
    queue.push_back(root);
  }
  while (!queue.empty()) {
    Root cur = std::move(queue.front());
    queue.pop_front();
    if (found.contains(cur.simple_coords)) continue;
    found.emplace(cur.simple_coords, cur);
    for (int j = 0; j < r; ++j) {
      // s_j(beta) = beta - <beta, alpha_j^vee> alpha_j ; on coroots likewise.
      const int c = pair(cur.root, simple_coroots_[static_cast<std::size_t>(j)]);
      const int d = pair(spec_.simple_roots[static_cast<std::size_t>(j)], cur.coroot);
      Root next = cur;
      for (std::size_t a = 0; a < n; ++a) next.root[a] -= c * spec_.simple_roots[static_cast<std::size_t>(j)][a];
      next.coroot -= d * simple_coroots_[static_cast<std::size_t>(j)];
      next.simple_coords[static_cast<std::size_t>(j)] -= c;
      if (!found.contains(next.simple_coords)) queue.push_back(std::move(next));
    }
  }
  positive_.clear();
  for (auto& [coords, root] : found) {
    int h = std::accumulate(coords.begin(), coords.end(), 0);
    root.height = h;
    if (h > 0) positive_.push_back(root);
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple_coords > b.simple_coords;
  });
  roots_ = positive_;
  for (const auto& p : positive_) {
    Root neg = p;
    for (auto& v : neg.root) v = -v;
    neg.coroot = -neg.coroot;
    for (auto& v : neg.simple_coords) v = -v;
    neg.height = -neg.height;
    roots_.push_back(std::move(neg));
  }
  coroot_index_.clear();
  for (std::size_t k = 0; k < roots_.size(); ++k) coroot_index_.emplace(roots_[k].coroot, static_cast<int>(k));

  two_rho_vee_ = zero();
  for (const auto& p : positive_) two_rho_vee_ += p.coroot;

  // Components of the Dynkin diagram.
  components_.clear();
  std::vector<int> comp(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i) {
    if (comp[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> members;
    std::vector<int> stack{i};
    comp[static_cast<std::size_t>(i)] = static_cast<int>(components_.size());
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      members.push_back(a);
      for (int b = 0; b < r; ++b) {
        if (comp[static_cast<std::size_t>(b)] < 0 && cartan(a, b) != 0) {
          comp[static_cast<std::size_t>(b)] = comp[static_cast<std::size_t>(i)];
          stack.push_back(b);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  }
  highest_.clear();
  for (const auto& members : components_) {
    std::size_t best = 0;
    int best_h = -1;
    for (std::size_t k = 0; k < positive_.size(); ++k) {
      const auto& sc = positive_[k].simple_coords;
      bool inside = true;
      for (int i = 0; i < r; ++i) {
        if (sc[static_cast<std::size_t>(i)] != 0 &&
            std::find(members.begin(), members.end(), i) == members.end()) {
          inside = false;
        }
      }
      if (inside && positive_[k].height > best_h) {
        best_h = positive_[k].height;
        best = k;
      }
    }
    highest_.push_back(best);
  }

  // Sign table: inv_neg_[w][k] = [w^{-1}(alpha_k) < 0].
  const std::size_t npos = positive_.size();
  inv_neg_.assign(weyl_order() * npos, 0);
  for (std::uint32_t w = 0; w < weyl_order(); ++w) {
    FiniteWeylElement winv = inverse({w});
    for (std::size_t k = 0; k < npos; ++k) {
      int idx = coroot_index(act(winv, positive_[k].coroot));
      inv_neg_[w * npos + k] = static_cast<std::uint8_t>(idx >= static_cast<int>(npos) ? 1 : 0);
    }
  }
}

FiniteWeylElement RootDatum::multiply(FiniteWeylElement a, FiniteWeylElement b) const {
  const std::size_t order = weyl_order();
  if (!weyl_mult_.empty()) return {weyl_mult_[a.index * order + b.index]};
  const auto n = static_cast<std::size_t>(rank());
  auto ma = matrix(a);
  auto mb = matrix(b);
  std::vector<int> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += static_cast<long>(ma[i * n + k]) * mb[k * n + j];
      c[i * n + j] = static_cast<int>(s);
    }
  }
  return *find(c);
}

std::span<const int> RootDatum::matrix(FiniteWeylElement w) const {
  const auto n = static_cast<std::size_t>(rank());
  return {&weyl_matrices_[w.index * n * n], n * n};
}

Cocharacter RootDatum::act(FiniteWeylElement w, const Cocharacter& lambda) const {
  const auto n = static_cast<std::size_t>(rank());
  if (w.index == 0) return lambda;
  const int* m = &weyl_matrices_[w.index * n * n];
  Cocharacter r = Cocharacter::zero(n);
  for (std::size_t a = 0; a < n; ++a) {
    int s = 0;
    for (std::size_t b = 0; b < n; ++b) s += m[a * n + b] * lambda[b];
    r[a] = s;
  }
  return r;
}

FiniteWeylElement RootDatum::from_word(std::span<const int> word) const {
  const auto n = static_cast<std::size_t>(rank());
  std::vector<int> cur(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) cur[a * n + a] = 1;
  for (int i : word) {
    std::vector<int> next(n * n, 0);
    const auto& alpha = spec_.simple_roots.at(static_cast<std::size_t>(i));
    const auto& cov = simple_coroots_[static_cast<std::size_t>(i)];
    // cur * s_i, where s_i = I - cov (x) alpha
    for (std::size_t a = 0; a < n; ++a) {
      int dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += cur[a * n + k] * cov[k];
      for (std::size_t b = 0; b < n; ++b) next[a * n + b] = cur[a * n + b] - dot * alpha[b];
    }
    cur = std::move(next);
  }
  return *find(cur);
}

std::optional<FiniteWeylElement> RootDatum::find(std::span<const int> matrix) const {
  auto it = weyl_lookup_.find(matrix_key(matrix));
  if (it == weyl_lookup_.end()) return std::nullopt;
  return FiniteWeylElement{it->second};
}

int RootDatum::coroot_index(const Cocharacter& coroot) const {
  auto it = coroot_index_.find(coroot);
  return it == coroot_index_.end() ? -1 : it->second;
}

int RootDatum::rho2_pairing(const Cocharacter& lambda) const {
  int s = 0;
  for (const auto& p : positive_) s += pair(p.root, lambda);
  return s;
}

bool RootDatum::is_dominant(const Cocharacter& lambda) const {
  for (int i = 0; i < num_simple(); ++i) {
    if (pair(simple_root(i), lambda) < 0) return false;
  }
  return true;
}

bool RootDatum::is_antidominant(const Cocharacter& lambda) const {
  for (int i = 0; i < num_simple(); ++i) {
    if (pair(simple_root(i), lambda) > 0) return false;
  }
  return true;
}

bool RootDatum::dominance_leq(const Cocharacter& nu, const Cocharacter& mu) const {
  const Cocharacter diff = mu - nu;
  const int r = num_simple();
  if (r == 0) return diff.is_zero();
  // c = C^{-T} p with p_j = <alpha_j, diff>: diff = sum_i c_i alpha_i^vee
  // gives p_j = sum_i C[j][i] c_i.
  std::vector<long> p(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) p[static_cast<std::size_t>(j)] = pair(simple_root(j), diff);
  Cocharacter recon = zero();
  for (int i = 0; i < r; ++i) {
    long num = 0;
    for (int j = 0; j < r; ++j) num += cartan_adj_[static_cast<std::size_t>(i * r + j)] * p[static_cast<std::size_t>(j)];
    if (num % cartan_det_ != 0) return false;
    long c = num / cartan_det_;
    if (c < 0) return false;
    recon += static_cast<int>(c) * simple_coroots_[static_cast<std::size_t>(i)];
  }
  return recon == diff;
}

std::pair<Cocharacter, FiniteWeylElement> RootDatum::dominant_representative(const Cocharacter& lambda) const {
  for (std::uint32_t w = 0; w < weyl_order(); ++w) {
    Cocharacter img = act({w}, lambda);
    if (is_dominant(img)) return {img, FiniteWeylElement{w}};  // graded order: first hit is shortest
  }
  throw Error(ErrorKind::NotFiniteType, "no dominant representative found");
}

std::vector<Cocharacter> RootDatum::orbit(const Cocharacter& lambda) const {
  std::vector<Cocharacter> out;
  out.reserve(weyl_order());
  for (std::uint32_t w = 0; w < weyl_order(); ++w) out.push_back(act({w}, lambda));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- presets

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SO5", "G2"};
  return names;
}

RootDatumSpec preset_spec(std::string_view name) {
  if (name == "SL2") return {"SL2", 1, {{2}}, {{1}}};
  if (name == "PGL2") return {"PGL2", 1, {{1}}, {{2}}};
  if (name == "GL2") return {"GL2", 2, {{1, -1}}, {{1, -1}}};
  // Simply connected: coordinates in the simple coroot basis.
  if (name == "SL3") return {"SL3", 2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}};
  // Adjoint: coordinates in the fundamental coweight basis.
  if (name == "PGL3") return {"PGL3", 2, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}}};
  // Standard torus of Sp4: alpha_1 = e1 - e2 (short), alpha_2 = 2 e2 (long).
  if (name == "Sp4") return {"Sp4", 2, {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}}};
  // SO5: alpha_1 = e1 - e2 (long), alpha_2 = e2 (short).
  if (name == "SO5") return {"SO5", 2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}};
  // G2, coroot basis; alpha_1 short, alpha_2 long.
  if (name == "G2") return {"G2", 2, {{2, -1}, {-3, 2}}, {{1, 0}, {0, 1}}};
  throw Error(ErrorKind::UnknownPreset, std::string(name));
}

RootDatumPtr preset(std::string_view name) { return RootDatum::build(preset_spec(name)); }

}  // namespace heckeforge

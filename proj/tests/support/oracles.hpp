#pragma once

// Brute-force reference implementations shared by the test binaries.  None
// of these call the code paths they are used to check.

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "heckeforge/affine_weyl.hpp"
#include "heckeforge/hecke.hpp"
#include "heckeforge/root_datum.hpp"

namespace oracle {

using namespace heckeforge;

// Minimal word length over the affine simple reflections, measured from the
// length-zero elements by breadth-first search.
inline std::unordered_map<ExtAffineElement, int, ExtAffineHash> bfs_lengths(const AffineWeylGroup& g, int max_len) {
  std::unordered_map<ExtAffineElement, int, ExtAffineHash> dist;
  std::deque<ExtAffineElement> queue;
  for (const auto& w : g.omega_elements().elements) {
    dist.emplace(w, 0);
    queue.push_back(w);
  }
  while (!queue.empty()) {
    ExtAffineElement x = queue.front();
    queue.pop_front();
    const int d = dist.at(x);
    if (d == max_len) continue;
    for (int s = 0; s < g.num_generators(); ++s) {
      ExtAffineElement y = g.multiply(g.generator(s), x);
      if (dist.emplace(y, d + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

// v <= w iff v is a subword of a reduced word of w, times the same omega.
inline bool subword_leq(const AffineWeylGroup& g, const ExtAffineElement& v, const ExtAffineElement& w) {
  const ReducedWord rw = g.reduced_word(w);
  const std::size_t k = rw.indices.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    ExtAffineElement x = g.identity();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) x = g.multiply(x, g.generator(rw.indices[i]));
    }
    if (g.multiply(x, rw.omega) == v) return true;
  }
  return false;
}

// W0-orbit by closing under s_i(lam) = lam - <alpha_i, lam> alpha_i^vee.
inline std::vector<Cocharacter> orbit(const RootDatum& rd, const Cocharacter& lam) {
  std::set<Cocharacter> seen{lam};
  std::vector<Cocharacter> stack{lam};
  while (!stack.empty()) {
    Cocharacter x = stack.back();
    stack.pop_back();
    for (int i = 0; i < rd.num_simple(); ++i) {
      Cocharacter y = x - pair(rd.simple_root(i), x) * rd.simple_coroot(i);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Cocharacter> box(int rank, int bound) {
  std::vector<Cocharacter> out;
  Cocharacter c = Cocharacter::zero(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) c[static_cast<std::size_t>(i)] = -bound;
  for (;;) {
    out.push_back(c);
    int i = 0;
    while (i < rank && c[static_cast<std::size_t>(i)] == bound) c[static_cast<std::size_t>(i++)] = -bound;
    if (i == rank) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return out;
}

// Rank over Q by exact Gaussian elimination.
inline int rank(std::vector<std::vector<mpq_class>> m) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    const auto& prow = m[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / prow[c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * prow[j];
    }
    ++r;
  }
  return r;
}

// Rows are Hecke elements evaluated at q0, columns their joint support.
inline int specialized_rank(const std::vector<HeckeElement>& rows, long q0) {
  std::vector<ExtAffineElement> cols;
  std::unordered_map<ExtAffineElement, std::size_t, ExtAffineHash> index;
  for (const auto& h : rows) {
    for (const auto& [x, c] : h.terms()) {
      if (index.emplace(x, cols.size()).second) cols.push_back(x);
    }
  }
  std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [x, c] : rows[i].terms()) {
      m[i][index.at(x)] = mpq_class(c.eval(Integer(static_cast<std::int64_t>(q0))).to_mpz());
    }
  }
  return rank(std::move(m));
}

}  // namespace oracle

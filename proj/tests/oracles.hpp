#pragma once

// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls into the normal-form machinery it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "sct/fincat.hpp"
#include "sct/presheaf.hpp"
#include "sct/simpset.hpp"

namespace oracle {

/// Rewrites adjacent s_i s_j (i <= j) to s_{j+1} s_i until the word is
/// strictly decreasing; `leftmost` picks the first redex from the left,
/// otherwise from the right.
inline std::vector<int> rewrite_normal(std::vector<int> w, bool leftmost) {
  while (true) {
    int hit = -1;
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      const std::size_t p = leftmost ? t : w.size() - 2 - t;
      if (w[p] <= w[p + 1]) {
        hit = static_cast<int>(p);
        break;
      }
    }
    if (hit < 0) return w;
    const int i = w[static_cast<std::size_t>(hit)], j = w[static_cast<std::size_t>(hit) + 1];
    w[static_cast<std::size_t>(hit)] = j + 1;
    w[static_cast<std::size_t>(hit) + 1] = i;
  }
}

/// The surjection [d+k] -> [d] of a word applied to a d-simplex, composed
/// from the elementary maps sigma_j (sigma_j(t) = t for t <= j, t-1 after).
inline std::vector<int> word_surjection(const std::vector<int>& w, int d) {
  std::vector<int> phi(static_cast<std::size_t>(d) + 1);
  std::iota(phi.begin(), phi.end(), 0);
  // s_{j1} ... s_{jk} x = x o sigma_{jk} o ... o sigma_{j1}, so the map is
  // built outward starting from sigma_{jk}.
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int j = *it;
    const int m = static_cast<int>(phi.size());  // new domain has m + 1 points
    std::vector<int> next(static_cast<std::size_t>(m) + 1);
    for (int t = 0; t <= m; ++t) next[static_cast<std::size_t>(t)] = phi[static_cast<std::size_t>(t <= j ? t : t - 1)];
    phi = std::move(next);
  }
  return phi;
}

/// Strictly decreasing word read off a surjection.
inline std::vector<int> surjection_word(const std::vector<int>& phi) {
  std::vector<int> w;
  for (int t = static_cast<int>(phi.size()) - 2; t >= 0; --t)
    if (phi[static_cast<std::size_t>(t)] == phi[static_cast<std::size_t>(t) + 1]) w.push_back(t);
  return w;
}

/// All monotone maps [k] -> [n].
inline std::vector<std::vector<int>> monotone_maps(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k) + 1, 0);
  while (true) {
    out.push_back(cur);
    int p = k;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == n) --p;
    if (p < 0) return out;
    ++cur[static_cast<std::size_t>(p)];
    for (int q = p + 1; q <= k; ++q) cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(p)];
  }
}

inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
  return r;
}

/// Checks every simplicial identity on every simplex of x up to `top`.
/// Returns an empty string on success, a description of the first failure otherwise.
inline std::string check_identities(const sct::SimplicialSet& x, int top) {
  using sct::SimplexRef;
  for (int n = 0; n <= top; ++n) {
    for (const SimplexRef& r : x.simplices_at(n)) {
      auto fail = [&](const std::string& what) { return what + " on " + x.label(r); };
      for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(x.face(r, j), i) != x.face(x.face(r, i), j - 1)) return fail("d_i d_j");
      if (n + 1 > top) continue;
      for (int j = 0; j <= n; ++j) {
        const SimplexRef sj = x.degeneracy(r, j);
        for (int i = 0; i <= n + 1; ++i) {
          const SimplexRef lhs = x.face(sj, i);
          SimplexRef rhs;
          if (i < j) rhs = x.degeneracy(x.face(r, i), j - 1);
          else if (i == j || i == j + 1) rhs = r;
          else rhs = x.degeneracy(x.face(r, i - 1), j);
          if (lhs != rhs) return fail("d_i s_j");
        }
        if (n + 2 > top) continue;
        for (int i = 0; i <= j; ++i)
          if (x.degeneracy(sj, i) != x.degeneracy(x.degeneracy(r, i), j + 1)) return fail("s_i s_j");
      }
    }
  }
  return {};
}

/// Composable n-tuples of morphisms of c, optionally ending at `end` and
/// optionally without identities.
inline std::size_t tuples(const sct::FinCategory& c, int n, int end = -1, bool free = false) {
  std::vector<int> last;  // target object of each tuple
  for (int o = 0; o < c.object_count(); ++o) last.push_back(o);
  for (int len = 1; len <= n; ++len) {
    std::vector<int> next;
    for (int t : last)
      for (int m = 0; m < c.morphism_count(); ++m)
        if (c.morphism(m).src == t && !(free && c.is_identity(m))) next.push_back(c.morphism(m).dst);
    last = std::move(next);
  }
  return end < 0 ? last.size() : static_cast<std::size_t>(std::count(last.begin(), last.end(), end));
}

/// r o phi for an n-simplex r and a monotone phi : [k] -> [n]: faces for the
/// values phi misses, then degeneracies for its repeats.
inline sct::SimplexRef apply_operator(const sct::SimplicialSet& x, sct::SimplexRef r, const std::vector<int>& phi, int n) {
  std::vector<int> image(phi.begin(), phi.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (int j = n; j >= 0; --j)
    if (!std::binary_search(image.begin(), image.end(), j)) r = x.face(r, j);
  std::vector<int> psi;
  for (int v : phi) psi.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
  const auto w = surjection_word(psi);
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = x.degeneracy(r, *it);
  return r;
}

struct PushoutVerdict {
  bool injective = true;
  bool surjective = true;
  std::string detail;
};

/// The map (A x Delta^n) +_{A x Lambda^n_i} X -> Y given by f and the images
/// `cells` of the top simplices. Level k of the pushout is X_k together with
/// the operators [k] -> [n] of each copy that avoid the horn, i.e. hit every
/// vertex other than i.
inline PushoutVerdict pushout_map(const sct::SimplicialMap& f, const std::vector<sct::SimplexRef>& cells, int n, int i,
                                  int max_level) {
  PushoutVerdict v;
  const auto& y = f.target();
  for (int k = 0; k <= max_level; ++k) {
    std::unordered_set<sct::SimplexRef, sct::SimplexRefHash> seen;
    auto add = [&](const sct::SimplexRef& r, const std::string& what) {
      if (!seen.insert(r).second && v.injective) {
        v.injective = false;
        v.detail = "level " + std::to_string(k) + ": " + what + " hits " + y.label(r) + " twice";
      }
    };
    for (const auto& r : f.source().simplices_at(k)) add(f(r), "X");
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (const auto& phi : monotone_maps(k, n)) {
        bool open = true;
        for (int j = 0; j <= n; ++j)
          if (j != i && !std::binary_search(phi.begin(), phi.end(), j)) open = false;
        if (open) add(apply_operator(y, cells[a], phi, n), "cell " + std::to_string(a));
      }
    if (seen.size() != y.count_at(k) && v.surjective) {
      v.surjective = false;
      if (v.detail.empty()) v.detail = "level " + std::to_string(k) + ": " + std::to_string(seen.size()) + " of " + std::to_string(y.count_at(k)) + " hit";
    }
  }
  return v;
}

/// True iff f is injective on every level up to max_level.
inline bool injective_to(const sct::SimplicialMap& f, int max_level) {
  for (int k = 0; k <= max_level; ++k) {
    std::unordered_set<sct::SimplexRef, sct::SimplexRefHash> seen;
    for (const auto& r : f.source().simplices_at(k))
      if (!seen.insert(f(r)).second) return false;
  }
  return true;
}

/// Every family of functions A(o) -> B(o), natural or not, filtered by a
/// direct check of every naturality square.
inline std::vector<std::vector<std::vector<int>>> brute_nat(const sct::FinPresheaf& a, const sct::FinPresheaf& b) {
  const sct::FinCategory& e = *a.base;
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> comp(static_cast<std::size_t>(e.object_count()));
  std::function<void(int)> go = [&](int o) {
    if (o == e.object_count()) {
      for (int m = 0; m < e.morphism_count(); ++m) {
        const auto& mor = e.morphism(m);
        for (int x = 0; x < a.size(mor.src); ++x)
          if (b.actions[static_cast<std::size_t>(m)][static_cast<std::size_t>(comp[static_cast<std::size_t>(mor.src)][static_cast<std::size_t>(x)])] !=
              comp[static_cast<std::size_t>(mor.dst)][static_cast<std::size_t>(a.actions[static_cast<std::size_t>(m)][static_cast<std::size_t>(x)])])
            return;
      }
      out.push_back(comp);
      return;
    }
    const int n = a.size(o), d = b.size(o);
    auto& c = comp[static_cast<std::size_t>(o)];
    c.assign(static_cast<std::size_t>(n), 0);
    if (n > 0 && d == 0) return;
    while (true) {
      go(o + 1);
      int t = 0;
      while (t < n && ++c[static_cast<std::size_t>(t)] == d) c[static_cast<std::size_t>(t++)] = 0;
      if (t == n) break;
    }
  };
  go(0);
  return out;
}

/// Componentwise g o f.
inline std::vector<std::vector<int>> compose_components(const std::vector<std::vector<int>>& g, const std::vector<std::vector<int>>& f) {
  auto out = f;
  for (std::size_t o = 0; o < f.size(); ++o)
    for (auto& v : out[o]) v = g[o][static_cast<std::size_t>(v)];
  return out;
}

/// A retraction of f found by brute force.
inline bool brute_split(const sct::FinPresheaf& a, const sct::FinPresheaf& b, const std::vector<std::vector<int>>& f) {
  for (const auto& r : brute_nat(b, a)) {
    bool id = true;
    const auto rf = compose_components(r, f);
    for (std::size_t o = 0; o < rf.size() && id; ++o)
      for (std::size_t x = 0; x < rf[o].size() && id; ++x) id = rf[o][x] == static_cast<int>(x);
    if (id) return true;
  }
  return false;
}

}  // namespace oracle

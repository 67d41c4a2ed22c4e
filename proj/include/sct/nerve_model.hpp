#pragma once

// Level model of the nerve of a finite category, shared by the nerve and by
// constructions built from chains.

#include <string>
#include <vector>

#include "sct/fincat.hpp"

namespace sct {

namespace detail {

struct IntVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

// Level 0 keys are {object}; level n keys are composable chains f1..fn.
struct NerveModel {
  using Key = std::vector<int>;
  using Hash = IntVectorHash;
  const FinCategory* c;

  std::vector<Key> elements(int n) const {
    std::vector<Key> out;
    if (n == 0) {
      for (int o = 0; o < c->object_count(); ++o) out.push_back({o});
      return out;
    }
    for (int m = 0; m < c->morphism_count(); ++m) out.push_back({m});
    for (int len = 2; len <= n; ++len) {
      std::vector<Key> next;
      for (const auto& chain : out)
        for (int m = 0; m < c->morphism_count(); ++m)
          if (c->morphism(m).src == c->morphism(chain.back()).dst) {
            auto k = chain;
            k.push_back(m);
            next.push_back(std::move(k));
          }
      out = std::move(next);
    }
    return out;
  }
  int vertex(const Key& e, int k) const {
    return k == 0 ? c->morphism(e[0]).src : c->morphism(e[static_cast<std::size_t>(k) - 1]).dst;
  }
  Key face(int n, const Key& e, int k) const {
    if (n == 1) return {k == 0 ? c->morphism(e[0]).dst : c->morphism(e[0]).src};
    Key out;
    for (int t = 0; t < n; ++t) {
      if (k > 0 && k < n && t == k - 1) {
        out.push_back(c->compose(e[static_cast<std::size_t>(t) + 1], e[static_cast<std::size_t>(t)]));
        ++t;
        continue;
      }
      if ((k == 0 && t == 0) || (k == n && t == n - 1)) continue;
      out.push_back(e[static_cast<std::size_t>(t)]);
    }
    return out;
  }
  Key degeneracy(int n, const Key& e, int k) const {
    if (n == 0) return {c->identity(e[0])};
    Key out = e;
    out.insert(out.begin() + k, c->identity(vertex(e, k)));
    return out;
  }
  std::string name(int n, const Key& e) const {
    if (n == 0) return c->object(e[0]);
    std::string out;
    for (std::size_t t = 0; t < e.size(); ++t) out += (t ? "|" : "") + c->morphism(e[t]).name;
    return out;
  }
};

}  // namespace detail

}  // namespace sct

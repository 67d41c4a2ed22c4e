#include <algorithm>
#include <map>
#include <unordered_map>

#include "sct/error.hpp"
#include "sct/level_model.hpp"
#include "sct/quasicat.hpp"

namespace sct {

namespace {

std::string subset_label(std::uint32_t s) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < 32; ++v) {
    if (!((s >> v) & 1u)) continue;
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

int top_element(std::uint32_t s) { return 31 - __builtin_clz(s); }

// sd(Delta^n) together with the chain of subsets of each simplex.
struct Subdivision {
  SSetPtr set;
  std::vector<std::vector<std::uint32_t>> chain;  // per simplex id
  std::map<std::vector<std::uint32_t>, int> id;

  // Normal form of a weakly increasing chain.
  SimplexRef ref(const std::vector<std::uint32_t>& c) const {
    std::vector<std::uint32_t> strict;
    std::uint32_t mask = 0;
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t && c[t] == c[t - 1]) {
        mask |= 1u << (t - 1);
        continue;
      }
      strict.push_back(c[t]);
    }
    return {id.at(strict), static_cast<int>(c.size()) - 1, mask};
  }
};

Subdivision subdivide(int n) {
  if (n < 0 || n > 6) throw ParameterError("sd_standard: n out of range");
  Subdivision sd;
  SimplicialSet x("sd" + std::to_string(n), n);
  const std::uint32_t full = (1u << (n + 1)) - 1u;
  std::vector<std::vector<std::uint32_t>> current;
  for (std::uint32_t s = 1; s <= full; ++s) current.push_back({s});
  // Chains of length k+1 are grown from chains of length k by appending a
  // strict superset, which keeps lexicographic order by construction.
  for (int k = 0; k <= n && !current.empty(); ++k) {
    std::sort(current.begin(), current.end());
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& c : current) {
      std::vector<SimplexRef> faces;
      std::string name;
      for (std::size_t t = 0; t < c.size(); ++t) name += (t ? "<" : "") + subset_label(c[t]);
      if (k > 0) {
        for (std::size_t t = 0; t < c.size(); ++t) {
          std::vector<std::uint32_t> f = c;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(t));
          faces.push_back(x.ref(sd.id.at(f)));
        }
      }
      const int id = x.add_simplex(name, k, std::move(faces));
      sd.id.emplace(c, id);
      sd.chain.push_back(c);
      for (std::uint32_t s = c.back() + 1; s <= full; ++s)
        if ((s & c.back()) == c.back() && s != c.back()) {
          auto d = c;
          d.push_back(s);
          next.push_back(std::move(d));
        }
    }
    current = std::move(next);
  }
  sd.set = share(std::move(x));
  return sd;
}

std::uint32_t image_subset(std::uint32_t s, const std::vector<int>& f) {
  std::uint32_t out = 0;
  for (int v = 0; v < static_cast<int>(f.size()); ++v)
    if ((s >> v) & 1u) out |= 1u << f[static_cast<std::size_t>(v)];
  return out;
}

struct ExModel {
  using Key = std::vector<SimplexRef>;
  using Hash = RefVectorHash;

  const SimplicialSet* x;
  std::vector<Subdivision> sd;                          // sd[m] = sd(Delta^m)
  std::vector<std::vector<std::vector<SimplexRef>>> face_pull;  // [m][k][tau of sd m-1]
  std::vector<std::vector<std::vector<SimplexRef>>> degen_pull; // [m][k][tau of sd m+1]
  std::vector<int> counter;

  std::vector<Key> elements(int m) {
    std::vector<Key> out;
    LevelIndex index(*x);
    for_each_map(sd[static_cast<std::size_t>(m)].set, index, [&](const std::vector<SimplexRef>& img) {
      out.push_back(img);
      return true;
    });
    return out;
  }
  Key pull(const Key& e, const std::vector<SimplexRef>& along) const {
    Key out;
    out.reserve(along.size());
    for (const auto& r : along) out.push_back(x->degenerate(e[static_cast<std::size_t>(r.base)], r.degen, r.dim));
    return out;
  }
  Key face(int m, const Key& e, int k) const {
    return pull(e, face_pull[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]);
  }
  Key degeneracy(int m, const Key& e, int k) const {
    return pull(e, degen_pull[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]);
  }
  std::string name(int m, const Key& e) {
    if (m == 0) return x->label(e[0]);
    return "ex" + std::to_string(m) + ":" + std::to_string(counter[static_cast<std::size_t>(m)]++);
  }
};

}  // namespace

SimplicialSet sd_standard(int n) { return *subdivide(n).set; }

ExResult ex(const SSetPtr& x, int dim_cap) {
  if (dim_cap < 0) throw ParameterError("ex: negative dim_cap");
  if (dim_cap > x->level_limit())
    throw TruncationError("ex: dim_cap " + std::to_string(dim_cap) + " exceeds the cap of " + x->name());
  ExModel model;
  model.x = x.get();
  model.counter.assign(static_cast<std::size_t>(dim_cap) + 2, 0);
  for (int m = 0; m <= dim_cap + 1; ++m) model.sd.push_back(subdivide(m));
  model.face_pull.resize(static_cast<std::size_t>(dim_cap) + 1);
  model.degen_pull.resize(static_cast<std::size_t>(dim_cap) + 1);
  for (int m = 0; m <= dim_cap; ++m) {
    const Subdivision& here = model.sd[static_cast<std::size_t>(m)];
    if (m >= 1) {
      const Subdivision& below = model.sd[static_cast<std::size_t>(m) - 1];
      for (int k = 0; k <= m; ++k) {
        std::vector<int> delta_k;
        for (int t = 0; t < m; ++t) delta_k.push_back(t < k ? t : t + 1);
        std::vector<SimplexRef> along;
        for (const auto& c : below.chain) {
          std::vector<std::uint32_t> img;
          for (auto s : c) img.push_back(image_subset(s, delta_k));
          along.push_back(here.ref(img));
        }
        model.face_pull[static_cast<std::size_t>(m)].push_back(std::move(along));
      }
    }
    if (m < dim_cap) {
      const Subdivision& above = model.sd[static_cast<std::size_t>(m) + 1];
      for (int k = 0; k <= m; ++k) {
        std::vector<int> sigma_k;
        for (int t = 0; t <= m + 1; ++t) sigma_k.push_back(t <= k ? t : t - 1);
        std::vector<SimplexRef> along;
        for (const auto& c : above.chain) {
          std::vector<std::uint32_t> img;
          for (auto s : c) img.push_back(image_subset(s, sigma_k));
          along.push_back(here.ref(img));
        }
        model.degen_pull[static_cast<std::size_t>(m)].push_back(std::move(along));
      }
    }
  }
  auto realized = realize(model, "Ex(" + x->name() + ")", dim_cap, true);
  ExResult out;
  out.valid_dim = dim_cap;
  out.result = share(std::move(realized.set));

  std::vector<SimplexRef> images;
  for (int id = 0; id < x->size(); ++id) {
    const int m = x->simplex(id).dim;
    if (m > dim_cap) throw TruncationError("ex: last_vertex needs simplices above dim_cap");
    const Subdivision& here = model.sd[static_cast<std::size_t>(m)];
    std::vector<SimplexRef> key;
    for (const auto& c : here.chain) {
      std::vector<int> theta;
      for (auto s : c) theta.push_back(top_element(s));
      key.push_back(x->apply(x->ref(id), theta));
    }
    images.push_back(realized.at(m, key));
  }
  out.last_vertex = SimplicialMap(x, out.result, std::move(images));
  return out;
}

ExIterate ex_iterate(const SSetPtr& x, int k, int dim_cap) {
  if (k < 0) throw ParameterError("ex_iterate: negative iteration count");
  ExIterate out;
  out.stages.push_back(x);
  out.comparison = SimplicialMap::identity(x);
  for (int t = 0; t < k; ++t) {
    ExResult r = ex(out.stages.back(), dim_cap);
    out.comparison = compose(r.last_vertex, out.comparison);
    out.stages.push_back(r.result);
  }
  return out;
}

}  // namespace sct

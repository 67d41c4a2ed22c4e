#include <algorithm>
#include <functional>
#include <tuple>

#include "sct/fincat.hpp"

namespace sct {

namespace {

using ObjectProfile = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
using MorphismProfile = std::tuple<bool, bool, int, int>;

ObjectProfile object_profile(const FinCategory& c, int o) {
  std::vector<std::size_t> out, in;
  for (int b = 0; b < c.object_count(); ++b) {
    out.push_back(c.hom(o, b).size());
    in.push_back(c.hom(b, o).size());
  }
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  return {c.hom(o, o).size(), out, in};
}

MorphismProfile morphism_profile(const FinCategory& c, int m) {
  const auto& mm = c.morphism(m);
  const bool endo = mm.src == mm.dst;
  int left = 0, right = 0;
  for (int g = 0; g < c.morphism_count(); ++g) {
    if (c.morphism(g).src == mm.dst && c.comp(g, m) == m) ++left;
    if (c.morphism(g).dst == mm.src && c.comp(m, g) == m) ++right;
  }
  return {endo, endo && c.comp(m, m) == m, left, right};
}

}  // namespace

std::optional<Functor> find_isomorphism(const FinCategory& c, const FinCategory& d) {
  if (c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count()) return std::nullopt;
  const int no = c.object_count(), nm = c.morphism_count();
  std::vector<ObjectProfile> pc, pd;
  for (int o = 0; o < no; ++o) {
    pc.push_back(object_profile(c, o));
    pd.push_back(object_profile(d, o));
  }
  std::vector<MorphismProfile> mc, md;
  for (int m = 0; m < nm; ++m) {
    mc.push_back(morphism_profile(c, m));
    md.push_back(morphism_profile(d, m));
  }
  std::vector<int> order;
  for (int m = 0; m < nm; ++m)
    if (!c.is_identity(m)) order.push_back(m);

  Functor f;
  f.objects.assign(static_cast<std::size_t>(no), -1);
  f.morphisms.assign(static_cast<std::size_t>(nm), -1);
  std::vector<bool> used_obj(static_cast<std::size_t>(no), false), used_mor(static_cast<std::size_t>(nm), false);

  auto consistent = [&](int m) {
    auto F = [&](int x) { return f.morphisms[static_cast<std::size_t>(x)]; };
    for (int g = 0; g < nm; ++g) {
      if (F(g) < 0) continue;
      if (c.morphism(g).src == c.morphism(m).dst) {
        const int h = c.comp(g, m);
        if (F(h) >= 0 && d.comp(F(g), F(m)) != F(h)) return false;
      }
      if (c.morphism(g).dst == c.morphism(m).src) {
        const int h = c.comp(m, g);
        if (F(h) >= 0 && d.comp(F(m), F(g)) != F(h)) return false;
      }
      // m as the composite of two assigned morphisms
      for (int k = 0; k < nm; ++k) {
        if (F(k) < 0 || c.morphism(k).dst != c.morphism(g).src) continue;
        if (c.comp(g, k) == m && d.comp(F(g), F(k)) != F(m)) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> assign_morphisms = [&](std::size_t t) -> bool {
    if (t == order.size()) return true;
    const int m = order[t];
    const int src = f.objects[static_cast<std::size_t>(c.morphism(m).src)];
    const int dst = f.objects[static_cast<std::size_t>(c.morphism(m).dst)];
    for (int cand : d.hom(src, dst)) {
      if (used_mor[static_cast<std::size_t>(cand)] || d.is_identity(cand)) continue;
      if (mc[static_cast<std::size_t>(m)] != md[static_cast<std::size_t>(cand)]) continue;
      f.morphisms[static_cast<std::size_t>(m)] = cand;
      used_mor[static_cast<std::size_t>(cand)] = true;
      if (consistent(m) && assign_morphisms(t + 1)) return true;
      used_mor[static_cast<std::size_t>(cand)] = false;
      f.morphisms[static_cast<std::size_t>(m)] = -1;
    }
    return false;
  };

  std::function<bool(int)> assign_objects = [&](int o) -> bool {
    if (o == no) {
      for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
          if (c.hom(a, b).size() != d.hom(f.objects[static_cast<std::size_t>(a)], f.objects[static_cast<std::size_t>(b)]).size())
            return false;
      for (int a = 0; a < no; ++a) {
        const int ida = c.identity(a);
        const int idb = d.identity(f.objects[static_cast<std::size_t>(a)]);
        f.morphisms[static_cast<std::size_t>(ida)] = idb;
        used_mor[static_cast<std::size_t>(idb)] = true;
      }
      if (assign_morphisms(0)) return true;
      std::fill(f.morphisms.begin(), f.morphisms.end(), -1);
      std::fill(used_mor.begin(), used_mor.end(), false);
      return false;
    }
    for (int cand = 0; cand < no; ++cand) {
      if (used_obj[static_cast<std::size_t>(cand)] || pc[static_cast<std::size_t>(o)] != pd[static_cast<std::size_t>(cand)]) continue;
      f.objects[static_cast<std::size_t>(o)] = cand;
      used_obj[static_cast<std::size_t>(cand)] = true;
      if (assign_objects(o + 1)) return true;
      used_obj[static_cast<std::size_t>(cand)] = false;
      f.objects[static_cast<std::size_t>(o)] = -1;
    }
    return false;
  };

  if (!assign_objects(0)) return std::nullopt;
  return f;
}

}  // namespace sct

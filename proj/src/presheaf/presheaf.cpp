#include "sct/presheaf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "sct/error.hpp"
#include "sct/union_find.hpp"

namespace sct {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Non-throwing functoriality check shared by validate and the corpus.
std::optional<std::string> presheaf_violation(const FinPresheaf& p) {
  if (!p.base) return "presheaf has no base category";
  const FinCategory& e = *p.base;
  if (static_cast<int>(p.values.size()) != e.object_count()) return "one value set per object expected";
  if (static_cast<int>(p.actions.size()) != e.morphism_count()) return "one action per morphism expected";
  for (int m = 0; m < e.morphism_count(); ++m) {
    const auto& mor = e.morphism(m);
    const auto& act = p.actions[at(m)];
    if (static_cast<int>(act.size()) != p.size(mor.src)) return "action of " + mor.name + " has the wrong domain";
    for (std::size_t x = 0; x < act.size(); ++x) {
      if (act[x] < 0 || act[x] >= p.size(mor.dst)) return "action of " + mor.name + " leaves its codomain";
      if (e.is_identity(m) && act[x] != static_cast<int>(x)) return "identity " + mor.name + " acts non-trivially";
    }
  }
  for (int g = 0; g < e.morphism_count(); ++g)
    for (int f = 0; f < e.morphism_count(); ++f) {
      if (e.morphism(f).dst != e.morphism(g).src) continue;
      const int h = e.compose(g, f);
      for (int x = 0; x < p.size(e.morphism(f).src); ++x)
        if (p.actions[at(g)][at(p.actions[at(f)][at(x)])] != p.actions[at(h)][at(x)])
          return "action does not respect " + e.morphism(g).name + " o " + e.morphism(f).name;
    }
  return std::nullopt;
}

std::string key(const PresheafMorphism& m) {
  std::string k;
  for (const auto& comp : m.components) {
    for (int v : comp) k += static_cast<char>(v);
    k += '\xff';
  }
  return k;
}

}  // namespace

void FinPresheaf::validate() const {
  if (auto v = presheaf_violation(*this)) throw ValidationError(*v);
}

bool same_base(const FinCategory& a, const FinCategory& b) {
  if (&a == &b) return true;
  if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
  for (int o = 0; o < a.object_count(); ++o)
    if (a.object(o) != b.object(o)) return false;
  for (int m = 0; m < a.morphism_count(); ++m)
    if (a.morphism(m).name != b.morphism(m).name || a.morphism(m).src != b.morphism(m).src ||
        a.morphism(m).dst != b.morphism(m).dst)
      return false;
  return true;
}

bool operator==(const FinPresheaf& a, const FinPresheaf& b) {
  return same_base(*a.base, *b.base) && a.values == b.values && a.actions == b.actions;
}

FinPresheaf make_presheaf(const CategoryPtr& base, const std::vector<int>& sizes,
                          const std::map<std::string, std::vector<int>>& actions) {
  FinPresheaf p;
  p.base = base;
  for (int n : sizes) {
    p.values.emplace_back();
    for (int t = 1; t <= n; ++t) p.values.back().push_back(std::to_string(t));
  }
  p.actions.resize(at(base->morphism_count()));
  for (int o = 0; o < base->object_count() && o < static_cast<int>(sizes.size()); ++o) {
    auto& id = p.actions[at(base->identity(o))];
    id.resize(at(sizes[at(o)]));
    std::iota(id.begin(), id.end(), 0);
  }
  for (const auto& [name, act] : actions) p.actions[at(base->require_morphism(name))] = act;
  p.validate();
  return p;
}

void PresheafMorphism::validate() const {
  if (!source || !target) throw ValidationError("presheaf morphism without endpoints");
  if (!same_base(*source->base, *target->base)) throw ValidationError("presheaf morphism between different bases");
  const FinCategory& e = *source->base;
  if (static_cast<int>(components.size()) != e.object_count()) throw ValidationError("one component per object expected");
  for (int o = 0; o < e.object_count(); ++o) {
    const auto& c = components[at(o)];
    if (static_cast<int>(c.size()) != source->size(o)) throw ValidationError("component at " + e.object(o) + " has the wrong domain");
    for (int y : c)
      if (y < 0 || y >= target->size(o)) throw ValidationError("component at " + e.object(o) + " leaves its codomain");
  }
  for (int m = 0; m < e.morphism_count(); ++m) {
    const auto& mor = e.morphism(m);
    for (int x = 0; x < source->size(mor.src); ++x)
      if (target->actions[at(m)][at(components[at(mor.src)][at(x)])] !=
          components[at(mor.dst)][at(source->actions[at(m)][at(x)])])
        throw ValidationError("naturality fails at " + mor.name);
  }
}

PresheafMorphism identity_morphism(const PresheafPtr& a) {
  PresheafMorphism m{a, a, {}};
  for (const auto& vals : a->values) {
    m.components.emplace_back(vals.size());
    std::iota(m.components.back().begin(), m.components.back().end(), 0);
  }
  return m;
}

PresheafMorphism compose(const PresheafMorphism& g, const PresheafMorphism& f) {
  if (!(*f.target == *g.source)) throw ParameterError("compose: presheaf morphisms are not composable");
  PresheafMorphism h{f.source, g.target, f.components};
  for (std::size_t o = 0; o < h.components.size(); ++o)
    for (auto& x : h.components[o]) x = g.components[o][at(x)];
  return h;
}

std::vector<PresheafMorphism> enumerate_nat(const PresheafPtr& a, const PresheafPtr& b) {
  if (!same_base(*a->base, *b->base)) throw ParameterError("enumerate_nat: presheaves over different bases");
  const FinCategory& e = *a->base;
  std::vector<std::pair<int, int>> pos;
  for (int o = 0; o < e.object_count(); ++o)
    for (int x = 0; x < a->size(o); ++x) pos.emplace_back(o, x);
  std::vector<std::vector<int>> comp;
  for (int o = 0; o < e.object_count(); ++o) comp.emplace_back(at(a->size(o)), -1);

  auto consistent = [&](int o, int x) {
    const int y = comp[at(o)][at(x)];
    for (int m = 0; m < e.morphism_count(); ++m) {
      if (e.is_identity(m)) continue;
      const auto& mor = e.morphism(m);
      if (mor.src == o) {
        const int image = comp[at(mor.dst)][at(a->actions[at(m)][at(x)])];
        if (image >= 0 && b->actions[at(m)][at(y)] != image) return false;
      }
      if (mor.dst == o)
        for (int s = 0; s < a->size(mor.src); ++s) {
          const int pre = comp[at(mor.src)][at(s)];
          if (pre >= 0 && a->actions[at(m)][at(s)] == x && b->actions[at(m)][at(pre)] != y) return false;
        }
    }
    return true;
  };

  std::vector<PresheafMorphism> out;
  std::function<void(std::size_t)> fill = [&](std::size_t p) {
    if (p == pos.size()) {
      out.push_back({a, b, comp});
      return;
    }
    const auto [o, x] = pos[p];
    for (int y = 0; y < b->size(o); ++y) {
      comp[at(o)][at(x)] = y;
      if (consistent(o, x)) fill(p + 1);
    }
    comp[at(o)][at(x)] = -1;
  };
  fill(0);
  return out;
}

std::optional<PresheafMorphism> is_split(const PresheafMorphism& f) {
  const auto id = identity_morphism(f.source);
  for (const auto& r : enumerate_nat(f.target, f.source))
    if (compose(r, f).components == id.components) return r;
  return std::nullopt;
}

PurityChecker::PurityChecker(std::vector<PresheafPtr> tests) : tests_(std::move(tests)) {}

PurityChecker::Hom& PurityChecker::hom_entry(const PresheafPtr& a, const PresheafPtr& b) {
  auto [it, fresh] = homs_.try_emplace({a.get(), b.get()});
  if (fresh) {
    it->second.maps = enumerate_nat(a, b);
    for (std::size_t t = 0; t < it->second.maps.size(); ++t) it->second.index.emplace(key(it->second.maps[t]), static_cast<int>(t));
  }
  return it->second;
}

const std::vector<PresheafMorphism>& PurityChecker::hom(const PresheafPtr& a, const PresheafPtr& b) {
  return hom_entry(a, b).maps;
}

int PurityChecker::index_of(const PresheafPtr& a, const PresheafPtr& b, const PresheafMorphism& m) {
  const auto& h = hom_entry(a, b);
  auto it = h.index.find(key(m));
  if (it == h.index.end()) throw ConstructionError("purity: a composite is missing from its hom-set");
  return it->second;
}

const std::vector<bool>& PurityChecker::through(std::size_t a, std::size_t b, int fp, const PresheafPtr& x) {
  auto [it, fresh] = through_.try_emplace({a, b, fp, x.get()});
  if (fresh) {
    const auto& f_prime = hom(tests_[a], tests_[b])[at(fp)];
    it->second.assign(hom(tests_[a], x).size(), false);
    for (const auto& w : hom(tests_[b], x)) it->second[at(index_of(tests_[a], x, compose(w, f_prime)))] = true;
  }
  return it->second;
}

const PresheafPtr* PurityChecker::find_test(const PresheafPtr& x) const {
  for (const auto& t : tests_)
    if (t.get() == x.get() || *t == *x) return &t;
  return nullptr;
}

PurityVerdict PurityChecker::check(const PresheafMorphism& f) {
  PurityVerdict out;
  const PresheafPtr& a = f.source;
  const PresheafPtr& b = f.target;
  const auto* ta = find_test(a);
  const auto* tb = find_test(b);
  if (ta && tb) {
    ++out.squares;
    if (!is_split(f)) {
      out.pure = false;
      out.witness = PuritySquare{{*ta, *tb, f.components}, identity_morphism(a), identity_morphism(b)};
      return out;
    }
  }
  for (std::size_t i = 0; i < tests_.size(); ++i) {
    const auto& us = hom(tests_[i], a);
    std::vector<int> fu;
    for (const auto& u : us) fu.push_back(index_of(tests_[i], b, compose(f, u)));
    for (std::size_t j = 0; j < tests_.size(); ++j) {
      const auto& fps = hom(tests_[i], tests_[j]);
      for (std::size_t p = 0; p < fps.size(); ++p) {
        const auto& commuting = through(i, j, static_cast<int>(p), b);
        const auto& filled = through(i, j, static_cast<int>(p), a);
        for (std::size_t u = 0; u < us.size(); ++u) {
          if (!commuting[at(fu[u])]) continue;
          ++out.squares;
          if (filled[u]) continue;
          out.pure = false;
          const auto target = compose(f, us[u]);
          for (const auto& v : hom(tests_[j], b))
            if (compose(v, fps[p]).components == target.components) {
              out.witness = PuritySquare{fps[p], us[u], v};
              break;
            }
          return out;
        }
      }
    }
  }
  return out;
}

PurityVerdict is_pure(const PresheafMorphism& f, const std::vector<PresheafPtr>& tests) {
  return PurityChecker(tests).check(f);
}

CobaseSplit cobase_split(const PresheafMorphism& fi, const PresheafMorphism& u, const std::optional<PresheafMorphism>& g) {
  fi.validate();
  u.validate();
  if (!(*fi.source == *u.source)) throw ParameterError("cobase_split: f_i and u have different sources");
  if (g) {
    g->validate();
    if (!(*g->source == *fi.target) || !(*g->target == *u.target))
      throw ParameterError("cobase_split: g must go from the target of f_i to the target of u");
    if (compose(*g, fi).components != u.components) throw ParameterError("cobase_split: g o f_i differs from u");
  }
  const FinCategory& e = *fi.source->base;
  const PresheafPtr& a = u.target;
  const PresheafPtr& bi = fi.target;
  auto bar = std::make_shared<FinPresheaf>();
  bar->base = a->base;
  // cls[o][t]: class of element t of A(o) + B_i(o), A first.
  std::vector<std::vector<int>> cls(at(e.object_count()));
  for (int o = 0; o < e.object_count(); ++o) {
    const int na = a->size(o), nb = bi->size(o);
    UnionFind uf(na + nb);
    for (int x = 0; x < fi.source->size(o); ++x) uf.unite(u.components[at(o)][at(x)], na + fi.components[at(o)][at(x)]);
    std::vector<int> root_class(at(na + nb), -1);
    bar->values.emplace_back();
    for (int t = 0; t < na + nb; ++t) {
      const int r = uf.find(t);
      if (root_class[at(r)] < 0) {
        root_class[at(r)] = static_cast<int>(bar->values.back().size());
        bar->values.back().push_back(t < na ? "A:" + a->values[at(o)][at(t)] : "B:" + bi->values[at(o)][at(t - na)]);
      }
      cls[at(o)].push_back(root_class[at(r)]);
    }
  }
  bar->actions.resize(at(e.morphism_count()));
  for (int m = 0; m < e.morphism_count(); ++m) {
    const auto& mor = e.morphism(m);
    auto& act = bar->actions[at(m)];
    act.assign(bar->values[at(mor.src)].size(), -1);
    const int na_src = a->size(mor.src), na_dst = a->size(mor.dst);
    for (int t = 0; t < static_cast<int>(cls[at(mor.src)].size()); ++t) {
      const int image = t < na_src ? a->actions[at(m)][at(t)] : na_dst + bi->actions[at(m)][at(t - na_src)];
      const int c = cls[at(mor.src)][at(t)], d = cls[at(mor.dst)][at(image)];
      if (act[at(c)] >= 0 && act[at(c)] != d) throw ConstructionError("cobase_split: pushout action is not well defined");
      act[at(c)] = d;
    }
  }
  bar->validate();

  CobaseSplit out;
  out.pushout = bar;
  out.f_prime = {a, bar, {}};
  out.b_leg = {bi, bar, {}};
  for (int o = 0; o < e.object_count(); ++o) {
    const int na = a->size(o);
    out.f_prime.components.emplace_back(cls[at(o)].begin(), cls[at(o)].begin() + na);
    out.b_leg.components.emplace_back(cls[at(o)].begin() + na, cls[at(o)].end());
  }
  out.f_prime.validate();
  out.b_leg.validate();
  if (g) {
    PresheafMorphism r{bar, a, {}};
    for (int o = 0; o < e.object_count(); ++o) {
      std::vector<int> comp(bar->values[at(o)].size(), -1);
      const int na = a->size(o);
      for (int t = 0; t < static_cast<int>(cls[at(o)].size()); ++t) {
        const int image = t < na ? t : g->components[at(o)][at(t - na)];
        int& slot = comp[at(cls[at(o)][at(t)])];
        if (slot >= 0 && slot != image) throw ConstructionError("cobase_split: induced retraction is not well defined");
        slot = image;
      }
      r.components.push_back(std::move(comp));
    }
    r.validate();
    out.split = compose(r, out.f_prime).components == identity_morphism(a).components;
    if (!out.split) throw ConstructionError("cobase_split: induced map is not a retraction");
    out.retraction = std::move(r);
  } else {
    out.retraction = is_split(out.f_prime);
    out.split = out.retraction.has_value();
  }
  return out;
}

std::vector<PresheafPtr> presheaf_corpus(const CategoryPtr& base, int max_size) {
  const FinCategory& e = *base;
  const int objects = e.object_count();
  std::vector<int> free;
  for (int m = 0; m < e.morphism_count(); ++m)
    if (!e.is_identity(m)) free.push_back(m);
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<PresheafPtr> out;
  std::vector<int> sizes(at(objects), 0);

  // Least action table over all relabellings of the value sets.
  auto canonical = [&](const FinPresheaf& p) {
    std::vector<std::vector<int>> perms(at(objects));
    for (int o = 0; o < objects; ++o) {
      perms[at(o)].resize(at(p.size(o)));
      std::iota(perms[at(o)].begin(), perms[at(o)].end(), 0);
    }
    std::vector<std::vector<int>> best;
    std::function<void(int)> go = [&](int o) {
      if (o == objects) {
        std::vector<std::vector<int>> acts;
        for (int m : free) {
          const auto& mor = e.morphism(m);
          std::vector<int> act(at(p.size(mor.src)));
          for (int x = 0; x < p.size(mor.src); ++x)
            act[at(perms[at(mor.src)][at(x)])] = perms[at(mor.dst)][at(p.actions[at(m)][at(x)])];
          acts.push_back(std::move(act));
        }
        if (best.empty() || acts < best) best = std::move(acts);
        return;
      }
      std::sort(perms[at(o)].begin(), perms[at(o)].end());
      do go(o + 1);
      while (std::next_permutation(perms[at(o)].begin(), perms[at(o)].end()));
    };
    go(0);
    best.push_back(sizes);
    return best;
  };

  std::function<void(int)> choose_sizes = [&](int o) {
    if (o < objects) {
      for (int n = 0; n <= max_size; ++n) {
        sizes[at(o)] = n;
        choose_sizes(o + 1);
      }
      return;
    }
    FinPresheaf p = make_presheaf(base, std::vector<int>(at(objects), 0));
    p.values.clear();
    for (int n : sizes) {
      p.values.emplace_back();
      for (int t = 1; t <= n; ++t) p.values.back().push_back(std::to_string(t));
    }
    for (int ob = 0; ob < objects; ++ob) {
      auto& id = p.actions[at(e.identity(ob))];
      id.resize(at(sizes[at(ob)]));
      std::iota(id.begin(), id.end(), 0);
    }
    std::function<void(std::size_t)> choose_action = [&](std::size_t k) {
      if (k == free.size()) {
        if (presheaf_violation(p)) return;
        if (seen.insert(canonical(p)).second) out.push_back(std::make_shared<const FinPresheaf>(p));
        return;
      }
      const auto& mor = e.morphism(free[k]);
      const int n = sizes[at(mor.src)], d = sizes[at(mor.dst)];
      auto& act = p.actions[at(free[k])];
      act.assign(at(n), 0);
      if (n > 0 && d == 0) return;
      while (true) {
        choose_action(k + 1);
        int t = 0;
        while (t < n && ++act[at(t)] == d) act[at(t++)] = 0;
        if (t == n) break;
      }
    };
    choose_action(0);
  };
  choose_sizes(0);
  return out;
}

std::string describe(const PresheafMorphism& f) {
  const FinCategory& e = *f.source->base;
  std::string out;
  for (int o = 0; o < e.object_count(); ++o) {
    if (o) out += "; ";
    out += e.object(o) + ": ";
    for (int x = 0; x < f.source->size(o); ++x) {
      if (x) out += ",";
      out += f.source->values[at(o)][at(x)] + "->" + f.target->values[at(o)][at(f.components[at(o)][at(x)])];
    }
  }
  return out;
}

}  // namespace sct

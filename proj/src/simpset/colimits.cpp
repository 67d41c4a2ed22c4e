#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "sct/error.hpp"
#include "sct/level_model.hpp"
#include "sct/simpset.hpp"
#include "sct/union_find.hpp"

namespace sct {

namespace {

struct Level {
  std::vector<SimplexRef> b, c;
  std::unordered_map<SimplexRef, int, SimplexRefHash> b_index, c_index;
  std::vector<int> cls;      // element -> class
  std::vector<int> rep;      // class -> element
  std::vector<std::pair<int, int>> best;  // class -> (side, id) representative
};

struct PushoutModel {
  using Key = int;
  using Hash = std::hash<int>;

  const SimplicialSet* b;
  const SimplicialSet* c;
  const std::string* tag_b;
  const std::string* tag_c;
  std::vector<Level> levels;

  SimplexRef member(int n, int e, bool* from_c) const {
    const Level& l = levels[static_cast<std::size_t>(n)];
    const int nb = static_cast<int>(l.b.size());
    *from_c = e >= nb;
    return e < nb ? l.b[static_cast<std::size_t>(e)] : l.c[static_cast<std::size_t>(e - nb)];
  }
  int class_of(int n, const SimplexRef& r, bool from_c) const {
    const Level& l = levels[static_cast<std::size_t>(n)];
    const int e = from_c ? static_cast<int>(l.b.size()) + l.c_index.at(r) : l.b_index.at(r);
    return l.cls[static_cast<std::size_t>(e)];
  }

  std::vector<int> elements(int n) const {
    std::vector<int> out(levels[static_cast<std::size_t>(n)].rep.size());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = static_cast<int>(t);
    return out;
  }
  int face(int n, int cls, int k) const {
    bool from_c = false;
    const SimplexRef r = member(n, levels[static_cast<std::size_t>(n)].rep[static_cast<std::size_t>(cls)], &from_c);
    return class_of(n - 1, (from_c ? c : b)->face(r, k), from_c);
  }
  int degeneracy(int n, int cls, int k) const {
    bool from_c = false;
    const SimplexRef r = member(n, levels[static_cast<std::size_t>(n)].rep[static_cast<std::size_t>(cls)], &from_c);
    const SimplexRef d{r.base, r.dim + 1, degen::apply_degeneracy(r.degen, k)};
    return class_of(n + 1, d, from_c);
  }
  std::pair<int, int> origin(int n, int cls) const {
    return levels[static_cast<std::size_t>(n)].best[static_cast<std::size_t>(cls)];
  }
  // Least non-degenerate member of each class under (tag, name, side).
  void choose_origins(int n) {
    Level& l = levels[static_cast<std::size_t>(n)];
    l.best.assign(l.rep.size(), {-1, -1});
    auto key = [&](std::pair<int, int> o) {
      const std::string& tag = o.first ? *tag_c : *tag_b;
      const std::string& nm = (o.first ? c : b)->simplex(o.second).name;
      return std::tuple<const std::string&, const std::string&, int>(tag, nm, o.first);
    };
    for (std::size_t e = 0; e < l.cls.size(); ++e) {
      bool from_c = false;
      const SimplexRef r = member(n, static_cast<int>(e), &from_c);
      if (!r.nondegenerate()) continue;
      std::pair<int, int> o{from_c ? 1 : 0, r.base};
      auto& best = l.best[static_cast<std::size_t>(l.cls[e])];
      if (best.first < 0 || key(o) < key(best)) best = o;
    }
  }
  std::string name(int n, int cls) const {
    const auto o = origin(n, cls);
    if (o.first < 0) throw ConstructionError("pushout: non-degenerate class without non-degenerate member");
    const std::string& tag = o.first ? *tag_c : *tag_b;
    const std::string& nm = (o.first ? c : b)->simplex(o.second).name;
    return tag.empty() ? nm : tag + ":" + nm;
  }
};

}  // namespace

Pushout pushout(const SimplicialMap& f, const SimplicialMap& g, const std::string& tag_b, const std::string& tag_c,
                int cap) {
  if (f.source_ptr().get() != g.source_ptr().get())
    throw ParameterError("pushout: the two maps have different sources");
  const SimplicialSet& a = f.source();
  const SimplicialSet& b = f.target();
  const SimplicialSet& c = g.target();
  const bool truncated_inputs = b.truncated() || c.truncated() || a.truncated();
  int top = std::min({a.level_limit(), b.level_limit(), c.level_limit()});
  if (top == kMaxDim) top = std::max(b.dim_cap(), c.dim_cap());
  bool truncated = truncated_inputs;
  if (cap >= 0 && cap < top) {
    top = cap;
    truncated = truncated || std::max(b.top_dim(), c.top_dim()) > cap;
  }

  PushoutModel model{&b, &c, &tag_b, &tag_c, {}};
  model.levels.resize(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    Level& l = model.levels[static_cast<std::size_t>(n)];
    l.b = b.simplices_at(n);
    l.c = c.simplices_at(n);
    for (std::size_t t = 0; t < l.b.size(); ++t) l.b_index.emplace(l.b[t], static_cast<int>(t));
    for (std::size_t t = 0; t < l.c.size(); ++t) l.c_index.emplace(l.c[t], static_cast<int>(t));
    const int nb = static_cast<int>(l.b.size());
    UnionFind uf(nb + static_cast<int>(l.c.size()));
    for (const auto& x : a.simplices_at(n)) uf.unite(l.b_index.at(f(x)), nb + l.c_index.at(g(x)));
    l.cls.resize(static_cast<std::size_t>(uf.size()));
    std::unordered_map<int, int> class_id;
    for (int e = 0; e < uf.size(); ++e) {
      auto [it, fresh] = class_id.emplace(uf.find(e), static_cast<int>(l.rep.size()));
      if (fresh) l.rep.push_back(e);
      l.cls[static_cast<std::size_t>(e)] = it->second;
    }
    model.choose_origins(n);
  }

  auto realized = realize(model, b.name() + "+" + c.name(), top, truncated);
  Pushout p;
  for (int id = 0; id < realized.set.size(); ++id) {
    const int n = realized.set.simplex(id).dim;
    p.origin.push_back(model.origin(n, realized.key_of[static_cast<std::size_t>(id)]));
  }
  p.object = share(std::move(realized.set));
  auto leg = [&](const SimplicialSet& x, const SSetPtr& xp, bool from_c) {
    std::vector<SimplexRef> images;
    for (int id = 0; id < x.size(); ++id) {
      const int n = x.simplex(id).dim;
      if (n > top) throw TruncationError("pushout: summand simplex above the result cap");
      images.push_back(realized.at(n, model.class_of(n, x.ref(id), from_c)));
    }
    return SimplicialMap(xp, p.object, std::move(images));
  };
  p.from_b = leg(b, f.target_ptr(), false);
  p.from_c = leg(c, g.target_ptr(), true);
  return p;
}

SimplicialMap pushout_universal(const Pushout& p, const SimplicialMap& f, const SimplicialMap& g,
                                const SimplicialMap& to_z_from_b, const SimplicialMap& to_z_from_c) {
  if (to_z_from_b.target_ptr().get() != to_z_from_c.target_ptr().get())
    throw ParameterError("pushout_universal: legs have different targets");
  for (int id = 0; id < f.source().size(); ++id) {
    const SimplexRef r = f.source().ref(id);
    if (to_z_from_b(f(r)) != to_z_from_c(g(r)))
      throw ParameterError("pushout_universal: legs do not agree on '" + f.source().simplex(id).name + "'");
  }
  std::vector<SimplexRef> images;
  for (const auto& [side, id] : p.origin)
    images.push_back(side ? to_z_from_c.image(id) : to_z_from_b.image(id));
  return SimplicialMap(p.object, to_z_from_b.target_ptr(), std::move(images));
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<SimplexRef, SimplexRef>& p) const noexcept {
    return SimplexRefHash{}(p.first) * 31u ^ SimplexRefHash{}(p.second);
  }
};

struct ProductModel {
  using Key = std::pair<SimplexRef, SimplexRef>;
  using Hash = PairHash;
  const SimplicialSet* x;
  const SimplicialSet* y;

  std::vector<Key> elements(int n) const {
    std::vector<Key> out;
    const auto xs = x->simplices_at(n);
    const auto ys = y->simplices_at(n);
    out.reserve(xs.size() * ys.size());
    for (const auto& a : xs)
      for (const auto& b : ys) out.emplace_back(a, b);
    return out;
  }
  Key face(int, const Key& e, int k) const { return {x->face(e.first, k), y->face(e.second, k)}; }
  Key degeneracy(int, const Key& e, int k) const {
    return {{e.first.base, e.first.dim + 1, degen::apply_degeneracy(e.first.degen, k)},
            {e.second.base, e.second.dim + 1, degen::apply_degeneracy(e.second.degen, k)}};
  }
  std::string name(int, const Key& e) const { return "<" + x->label(e.first) + "," + y->label(e.second) + ">"; }
};

}  // namespace

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y, int dim_cap) {
  if (dim_cap > std::min(x.level_limit(), y.level_limit()))
    throw TruncationError("product: dim_cap exceeds the operand caps");
  ProductModel model{&x, &y};
  const bool truncated = x.truncated() || y.truncated() || dim_cap < x.top_dim() + y.top_dim();
  return realize(model, x.name() + "x" + y.name(), dim_cap, truncated).set;
}

SimplicialSet join_point(const SimplicialSet& k, const std::string& apex) {
  SimplicialSet out(apex + "*" + k.name(), k.dim_cap() + 1);
  out.set_truncated(k.truncated());
  const int a = out.add_simplex(apex, 0);
  auto shift = [](SimplexRef r) {
    r.base += 1;
    return r;
  };
  for (int id = 0; id < k.size(); ++id) {
    const auto& s = k.simplex(id);
    std::vector<SimplexRef> faces;
    for (const auto& f : s.faces) faces.push_back(shift(f));
    out.add_simplex(s.name, s.dim, std::move(faces));
  }
  const int cone0 = out.size();
  auto cone = [&](const SimplexRef& r) {
    return SimplexRef{cone0 + r.base, r.dim + 1, r.degen << 1};
  };
  for (int id = 0; id < k.size(); ++id) {
    const auto& s = k.simplex(id);
    std::vector<SimplexRef> faces{out.ref(id + 1)};
    if (s.dim == 0) {
      faces.push_back(out.ref(a));
    } else {
      for (const auto& f : s.faces) faces.push_back(cone(f));
    }
    out.add_simplex(apex + "*" + s.name, s.dim + 1, std::move(faces));
  }
  return out;
}

}  // namespace sct

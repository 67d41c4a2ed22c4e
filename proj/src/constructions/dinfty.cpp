#include <algorithm>

#include "dinfty_model.hpp"
#include "sct/error.hpp"

namespace sct {

std::string primed(const std::string& object) { return object + "'"; }
std::string barred(const std::string& morphism) { return "bar(" + morphism + ")"; }

FinCategory d_category(const MarkedCategory& m) {
  const FinCategory& c = m.c;
  FinCategory d(c.name() + "+" + primed(c.object(m.x)));
  for (int o = 0; o < c.object_count(); ++o) d.add_object(c.object(o));
  for (int f = 0; f < c.morphism_count(); ++f)
    if (!c.is_identity(f)) d.add_morphism(c.morphism(f).name, c.morphism(f).src, c.morphism(f).dst);
  const int xp = d.add_object(primed(c.object(m.x)));
  // bar[f] for f : a -> x.
  std::vector<int> bar(static_cast<std::size_t>(c.morphism_count()), -1);
  for (int f = 0; f < c.morphism_count(); ++f)
    if (c.morphism(f).dst == m.x) bar[static_cast<std::size_t>(f)] = d.add_morphism(barred(c.morphism(f).name), c.morphism(f).src, xp);
  auto in_d = [&](int f) { return d.require_morphism(c.morphism(f).name); };
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.morphism(f).dst != c.morphism(g).src) continue;
      const int h = c.compose(g, f);
      if (!c.is_identity(g) && !c.is_identity(f)) d.set_comp(in_d(g), in_d(f), in_d(h));
      // bar(g) o f = bar(g o f) for g ending at x.
      if (bar[static_cast<std::size_t>(g)] >= 0 && !c.is_identity(f))
        d.set_comp(bar[static_cast<std::size_t>(g)], in_d(f), bar[static_cast<std::size_t>(h)]);
    }
  return d;
}

namespace detail {

std::vector<DinftyModel::Key> DinftyModel::elements(int n) const {
  std::vector<Key> out;
  for (auto& e : nerve.elements(n)) {
    Key k{-1};
    k.insert(k.end(), e.begin(), e.end());
    out.push_back(std::move(k));
  }
  for (int l = 0; l <= n; ++l)
    for (auto& e : nerve.elements(l)) {
      if ((l == 0 ? e[0] : nerve.vertex(e, l)) != x) continue;
      Key k{l};
      k.insert(k.end(), e.begin(), e.end());
      out.push_back(std::move(k));
    }
  return out;
}

DinftyModel::Key DinftyModel::face(int n, const Key& e, int k) const {
  const int l = e[0];
  const int level = l < 0 ? n : l;
  if (l >= 0 && l < n && k >= l) return e;
  Key tau(e.begin() + 1, e.end());
  Key f = nerve.face(level, tau, k);
  Key out{l < 0 || (l == n && k == n) ? -1 : l - 1};
  out.insert(out.end(), f.begin(), f.end());
  return out;
}

DinftyModel::Key DinftyModel::degeneracy(int n, const Key& e, int k) const {
  const int l = e[0];
  if (l >= 0 && k >= l) return e;
  Key tau(e.begin() + 1, e.end());
  Key s = nerve.degeneracy(l < 0 ? n : l, tau, k);
  Key out{l < 0 ? -1 : l + 1};
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::string DinftyModel::name(int n, const Key& e) const {
  const int l = e[0];
  Key tau(e.begin() + 1, e.end());
  if (l < 0) return nerve.name(n, tau);
  if (l == 0) return primed(nerve.c->object(x));
  return "(" + nerve.name(l, tau) + ")'";
}

Realized<DinftyModel> realize_dinfty(const MarkedCategory& m, int dim_cap) {
  DinftyModel model{NerveModel{&m.c}, m.x};
  auto r = realize(model, "Dinf(" + m.c.name() + "," + m.c.object(m.x) + ")", dim_cap, false);
  // D^infty is isomorphic to N(D); it is infinite exactly when N(D) is.
  r.set.set_truncated(nerve(d_category(m), dim_cap).truncated());
  return r;
}

}  // namespace detail

SimplicialSet dinfty(const MarkedCategory& m, int dim_cap) {
  if (m.x < 0 || m.x >= m.c.object_count()) throw ParameterError("dinfty: marked object out of range");
  const auto verdict = validate_category(m.c);
  if (!verdict.valid) throw ValidationError("dinfty: " + verdict.violation);
  return std::move(detail::realize_dinfty(m, dim_cap).set);
}

SimplicialMap dinfty_iso(const MarkedCategory& m, int dim_cap) {
  const FinCategory d = d_category(m);
  const auto nd = share(nerve(d, dim_cap));
  auto real = detail::realize_dinfty(m, dim_cap);
  const auto target = share(std::move(real.set));
  const int xp = d.require_object(primed(m.c.object(m.x)));

  // D morphism -> the C morphism it comes from (f for bar(f)).
  std::vector<int> to_c(static_cast<std::size_t>(d.morphism_count()), -1);
  for (int f = 0; f < m.c.morphism_count(); ++f) {
    to_c[static_cast<std::size_t>(d.require_morphism(m.c.morphism(f).name))] = f;
    if (m.c.morphism(f).dst == m.x) to_c[static_cast<std::size_t>(d.require_morphism(barred(m.c.morphism(f).name)))] = f;
  }

  std::vector<SimplexRef> images;
  for (int id = 0; id < nd->size(); ++id) {
    const SimplexRef r = nd->ref(id);
    const int n = r.dim;
    const auto chain = nerve_chain(d, *nd, r);
    std::vector<int> verts;
    if (n == 0) {
      verts = chain;
    } else {
      verts.push_back(d.morphism(chain[0]).src);
      for (int f : chain) verts.push_back(d.morphism(f).dst);
    }
    const int i_sigma = static_cast<int>(std::count(verts.begin(), verts.end(), xp));
    detail::DinftyModel::Key key;
    if (i_sigma == 0) {
      key.push_back(-1);
      if (n == 0) key.push_back(verts[0]);
      else
        for (int f : chain) key.push_back(to_c[static_cast<std::size_t>(f)]);
    } else {
      const int l = n - i_sigma + 1;
      key.push_back(l);
      if (l == 0) key.push_back(m.x);
      else
        for (int t = 0; t < l; ++t) key.push_back(to_c[static_cast<std::size_t>(chain[static_cast<std::size_t>(t)])]);
    }
    images.push_back(real.at(n, key));
  }
  SimplicialMap f(nd, target, std::move(images));
  if (auto bad = f.check()) throw ConstructionError("dinfty_iso is not simplicial: " + *bad);
  if (!is_levelwise_bijective(f, dim_cap)) throw ConstructionError("dinfty_iso is not a level-wise bijection");
  return f;
}

}  // namespace sct

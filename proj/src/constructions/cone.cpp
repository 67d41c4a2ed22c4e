#include <algorithm>

#include "sct/constructions.hpp"
#include "sct/error.hpp"

namespace sct {

FinCategory glue_free_arrows(const FinCategory& c) {
  std::vector<std::string> names;
  for (int o = 0; o < c.object_count(); ++o) names.push_back(c.object(o));
  std::sort(names.begin(), names.end());
  FinCategory d = c;
  for (const auto& name : names) d = d_category({d, d.require_object(name)});
  d.set_name("D_" + c.name());
  return d;
}

FinCategory cone_category(const FinCategory& c) {
  FinCategory out = c;
  out.set_name(c.name() + "^<");
  const int apex = out.add_object(kMinusInfinity);
  std::vector<int> init(static_cast<std::size_t>(c.object_count()));
  for (int o = 0; o < c.object_count(); ++o)
    init[static_cast<std::size_t>(o)] = out.add_morphism("init(" + c.object(o) + ")", apex, o);
  for (int f = 0; f < c.morphism_count(); ++f)
    if (!c.is_identity(f))
      out.set_comp(f, init[static_cast<std::size_t>(c.morphism(f).src)], init[static_cast<std::size_t>(c.morphism(f).dst)]);
  return out;
}

SimplicialSet cone_with_retracts(const Poset& p, int dim_cap) {
  p.validate();
  const auto k = share(nerve(poset_category(p), dim_cap));
  const auto cone = share(join_point(*k, kMinusInfinity));
  const auto ret = share(ret_nerve(dim_cap));
  const int n = p.size();

  std::vector<SSetPtr> edges(static_cast<std::size_t>(n), delta(1)), rets(static_cast<std::size_t>(n), ret);
  const auto a = coproduct(edges, p.elements, "Ob(I) x Delta1");
  const auto r = coproduct(rets, p.elements, "Ob(I) x Ret");

  // Each copy of Delta^1 goes to the cone edge (-inf -> e) and to the i-edge Y -> X.
  std::vector<SimplexRef> to_cone, to_ret;
  for (int id = 0; id < a.set->size(); ++id) {
    const auto& name = a.set->simplex(id).name;
    const auto colon = name.rfind(':');
    const std::string e = name.substr(0, colon), local = name.substr(colon + 1);
    const std::string cone_name = local == "0" ? kMinusInfinity : local == "1" ? e : kMinusInfinity + "*" + e;
    const std::string ret_name = local == "0" ? "Y" : local == "1" ? "X" : "i";
    to_cone.push_back(cone->ref(cone->require(cone_name)));
    to_ret.push_back(r.set->ref(r.set->require(e + ":" + ret_name)));
  }
  const SimplicialMap f(a.set, cone, std::move(to_cone));
  const SimplicialMap g(a.set, r.set, std::move(to_ret));
  auto po = pushout(f, g, "", "R", dim_cap);
  SimplicialSet out = *po.object;
  out.set_name("L~(" + std::to_string(n) + ")");
  return out;
}

namespace {

struct Table {
  const Poset& p;
  FinCategory c{"L_I"};
  int minus_inf = -1;

  std::string el(int i) const { return p.elements[static_cast<std::size_t>(i)]; }
  bool geq(int k, int i) const { return p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]; }
  int q(int k, int i, int j) const { return c.require_morphism("q" + el(k) + "(" + el(i) + "," + el(j) + ")"); }
  int g(int k, int i) const { return c.require_morphism("g" + el(k) + "(" + el(i) + ")"); }
  int h(int i) const { return c.require_morphism("h" + el(i)); }
  int b(int i, int j) const { return c.require_morphism("b(" + el(i) + "," + el(j) + ")"); }
};

}  // namespace

FinCategory localization_table(const Poset& p) {
  p.validate();
  Table t{p};
  const int n = p.size();
  for (int i = 0; i < n; ++i) t.c.add_object(t.el(i));
  t.minus_inf = t.c.add_object(kMinusInfinity);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k)
        if (t.geq(k, i)) t.c.add_morphism("q" + t.el(k) + "(" + t.el(i) + "," + t.el(j) + ")", i, j);
      if (p.less(i, j)) t.c.add_morphism("b(" + t.el(i) + "," + t.el(j) + ")", i, j);
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (t.geq(k, i)) t.c.add_morphism("g" + t.el(k) + "(" + t.el(i) + ")", i, t.minus_inf);
  for (int i = 0; i < n; ++i) t.c.add_morphism("h" + t.el(i), t.minus_inf, i);

  auto set = [&](int g, int f, int h, const char* tag) {
    const int old = t.c.comp(g, f);
    if (old >= 0 && old != h && !t.c.is_identity(g) && !t.c.is_identity(f))
      throw ConstructionError("localization_table: conflicting values for " + t.c.morphism(g).name + " o " +
                              t.c.morphism(f).name);
    t.c.set_comp(g, f, h, tag);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        for (int k = 0; k < n; ++k) {
          if (!t.geq(k, i)) continue;
          for (int pp = 0; pp < n; ++pp)
            if (t.geq(pp, j)) set(t.q(pp, j, l), t.q(k, i, j), t.q(k, i, l), "law: q_p q_k = q_k");
          if (p.less(j, l)) set(t.b(j, l), t.q(k, i, j), t.q(k, i, l), "law: b_ij q_k = q_k");
        }
        if (p.less(i, j)) {
          for (int k = 0; k < n; ++k)
            if (t.geq(k, j)) set(t.q(k, j, l), t.b(i, j), t.q(k, i, l), "law: q_k b_ij = q_k");
          if (p.less(j, l)) set(t.b(j, l), t.b(i, j), t.b(i, l), "forced: b_jk b_ij = b_ik (I is a subcategory)");
        }
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (!t.geq(k, i)) continue;
        for (int pp = 0; pp < n; ++pp)
          if (t.geq(pp, j)) set(t.g(pp, j), t.q(k, i, j), t.g(k, i), "law: g_p q_k = g_k");
        set(t.h(j), t.g(k, i), t.q(k, i, j), "law: h_i g_k = q_k");
        set(t.q(k, i, j), t.h(i), t.h(j), "forced: q_k h_i = h_j (hom(-inf,j) is a singleton)");
      }
      if (p.less(i, j)) {
        set(t.b(i, j), t.h(i), t.h(j), "forced: b_ij h_i = h_j (hom(-inf,j) is a singleton)");
        for (int pp = 0; pp < n; ++pp)
          if (t.geq(pp, j)) set(t.g(pp, j), t.b(i, j), t.g(pp, i), "forced: g_p b_ij = g_p (associativity with h)");
      }
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (t.geq(k, i))
        set(t.g(k, i), t.h(i), t.c.identity(t.minus_inf), "forced: g_k h_i = Id (hom(-inf,-inf) is a singleton)");

  const auto verdict = validate_category(t.c);
  if (!verdict.valid) throw ConstructionError("localization_table: " + verdict.violation);
  return std::move(t.c);
}

std::optional<std::string> check_localization_laws(const Poset& p, const FinCategory& table) {
  const int n = p.size();
  auto el = [&](int i) { return p.elements[static_cast<std::size_t>(i)]; };
  auto geq = [&](int k, int i) { return p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]; };
  auto q = [&](int k, int i, int j) { return table.find_morphism("q" + el(k) + "(" + el(i) + "," + el(j) + ")"); };
  auto g = [&](int k, int i) { return table.find_morphism("g" + el(k) + "(" + el(i) + ")"); };
  auto h = [&](int i) { return table.find_morphism("h" + el(i)); };
  auto b = [&](int i, int j) { return table.find_morphism("b(" + el(i) + "," + el(j) + ")"); };
  auto expect = [&](std::optional<int> lhs_g, std::optional<int> lhs_f, std::optional<int> rhs,
                    const std::string& law) -> std::optional<std::string> {
    if (!lhs_g || !lhs_f || !rhs) return "missing morphism in " + law;
    if (table.comp(*lhs_g, *lhs_f) != *rhs)
      return law + " fails: " + table.morphism(*lhs_g).name + " o " + table.morphism(*lhs_f).name;
    return std::nullopt;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!geq(k, i)) continue;
        // h_j g_k = q_k : i -> j
        if (auto e = expect(h(j), g(k, i), q(k, i, j), "h_i g_k = q_k")) return e;
        for (int l = 0; l < n; ++l) {
          for (int pp = 0; pp < n; ++pp)
            if (geq(pp, j))
              if (auto e = expect(q(pp, j, l), q(k, i, j), q(k, i, l), "q_p q_k = q_k")) return e;
          if (p.less(j, l))
            if (auto e = expect(b(j, l), q(k, i, j), q(k, i, l), "b_ij q_k = q_k")) return e;
        }
        for (int pp = 0; pp < n; ++pp)
          if (geq(pp, j))
            if (auto e = expect(g(pp, j), q(k, i, j), g(k, i), "g_p q_k = g_k")) return e;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(i, j))
        for (int l = 0; l < n; ++l)
          for (int k = 0; k < n; ++k)
            if (geq(k, j))
              if (auto e = expect(q(k, j, l), b(i, j), q(k, i, l), "q_k b_ij = q_k")) return e;
  return std::nullopt;
}

}  // namespace sct

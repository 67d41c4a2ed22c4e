#include "dinfty_model.hpp"
#include "sct/error.hpp"

namespace sct {

namespace {

// Dimension of the non-degenerate simplex of C under a marked key.
int marked_base_dim(const FinCategory& c, const detail::DinftyModel::Key& key) {
  if (key[0] <= 0) return 0;
  int d = 0;
  for (std::size_t t = 1; t < key.size(); ++t) d += !c.is_identity(key[t]);
  return d;
}

SimplexRef into_sub(const Subcomplex& sub, const SimplexRef& r) {
  const int b = sub.to_sub[static_cast<std::size_t>(r.base)];
  if (b < 0) throw ConstructionError("simplex outside " + sub.set->name());
  return {b, r.dim, r.degen};
}

SimplexRef to_parent(const Subcomplex& sub, const SimplexRef& r) {
  return {sub.inclusion.image(r.base).base, r.dim, r.degen};
}

}  // namespace

FiltrationStage d_filtration(const MarkedCategory& m, int stage, int dim_cap) {
  if (stage < 0) throw ParameterError("d_filtration: negative stage");
  if (stage >= 1 && dim_cap < stage + 1) throw ParameterError("d_filtration: the square needs dim_cap >= stage + 1");
  auto real = detail::realize_dinfty(m, dim_cap);
  std::vector<detail::DinftyModel::Key> keys = real.key_of;
  FiltrationStage out;
  out.m = stage;
  out.dinfty = share(real.set);

  auto keep_upto = [&](int s) {
    std::vector<bool> keep(keys.size());
    for (std::size_t id = 0; id < keys.size(); ++id) keep[id] = keys[id][0] < 0 || marked_base_dim(m.c, keys[id]) <= s;
    return keep;
  };
  out.stage = subcomplex(out.dinfty, keep_upto(stage), "D^" + std::to_string(stage));
  if (stage == 0) return out;
  out.previous = subcomplex(out.dinfty, keep_upto(stage - 1), "D^" + std::to_string(stage - 1));
  const Subcomplex& prev = *out.previous;
  const SSetPtr& dm = out.stage.set;

  detail::NerveModel nm{&m.c};
  std::vector<detail::DinftyModel::Key> tops;
  for (const auto& chain : nm.elements(stage)) {
    bool nondeg = true;
    for (int f : chain) nondeg = nondeg && !m.c.is_identity(f);
    if (!nondeg || nm.vertex(chain, stage) != m.x) continue;
    out.cells.push_back(nm.name(stage, chain));
    detail::DinftyModel::Key top{stage + 1};
    top.insert(top.end(), chain.begin(), chain.end());
    top.push_back(m.c.identity(m.x));
    tops.push_back(std::move(top));
  }

  const auto hn = horn(stage + 1, stage);
  const auto dn = delta(stage + 1);
  std::vector<SSetPtr> hparts(tops.size(), hn), dparts(tops.size(), dn);
  std::vector<std::string> tags;
  for (std::size_t a = 0; a < tops.size(); ++a) tags.push_back("a" + std::to_string(a));
  const auto hc = coproduct(hparts, tags, "A x Lambda");
  const auto dc = coproduct(dparts, tags, "A x Delta");
  out.horns = hc.set;
  out.deltas = dc.set;

  const auto h_to_d = map_by_names(hn, dn);
  std::vector<SimplicialMap> incl_legs, lower_legs;
  for (std::size_t a = 0; a < tops.size(); ++a) {
    incl_legs.push_back(compose(dc.injections[a], h_to_d));
    lower_legs.push_back(classify(dn, dm, into_sub(out.stage, real.at(stage + 1, tops[a]))));
  }
  out.horn_inclusion = copair(hc, incl_legs, dc.set);
  out.lower = copair(dc, lower_legs, dm);

  std::vector<SimplexRef> upper;
  for (int id = 0; id < hc.set->size(); ++id)
    upper.push_back(into_sub(prev, to_parent(out.stage, out.lower(out.horn_inclusion(hc.set->ref(id))))));
  out.upper = SimplicialMap(hc.set, prev.set, std::move(upper));

  std::vector<SimplexRef> incl;
  for (int id = 0; id < prev.set->size(); ++id) incl.push_back(into_sub(out.stage, to_parent(prev, prev.set->ref(id))));
  out.previous_inclusion = SimplicialMap(prev.set, dm, std::move(incl));
  return out;
}

FiltrationCheck check_filtration_square(const FiltrationStage& s, int max_level) {
  FiltrationCheck out;
  const int m = s.m;
  for (int n = 0; n <= std::min(m, max_level); ++n)
    if (s.stage.set->count_at(n) != s.dinfty->count_at(n)) {
      out.levels_agree = false;
      out.failure = "D^" + std::to_string(m) + " differs from D^infty at level " + std::to_string(n);
      return out;
    }
  if (m == 0) return out;
  for (int n = 0; n <= max_level; ++n)
    for (const auto& r : s.horns->simplices_at(n))
      if (s.previous_inclusion(s.upper(r)) != s.lower(s.horn_inclusion(r))) {
        out.square_commutes = false;
        out.failure = "square does not commute at " + s.horns->label(r);
        return out;
      }
  const auto p = pushout(s.upper, s.horn_inclusion, "", "A");
  const auto u = pushout_universal(p, s.upper, s.horn_inclusion, s.previous_inclusion, s.lower);
  out.pushout_bijective = is_levelwise_bijective(u, max_level);
  if (!out.pushout_bijective) out.failure = "pushout -> D^" + std::to_string(m) + " is not bijective";

  InjectivitySquare sq;
  sq.f = s.previous_inclusion;
  sq.n = m + 1;
  sq.i = m;
  const auto hn = horn(m + 1, m);
  for (std::size_t a = 0; a < s.cells.size(); ++a) {
    const std::string tag = "a" + std::to_string(a) + ":";
    std::string vertices;
    for (int t = 0; t <= m + 1; ++t) vertices += std::to_string(t);
    const int top = s.deltas->require(tag + vertices);
    sq.cells.push_back(s.lower(s.deltas->ref(top)));
    std::vector<SimplexRef> imgs;
    for (int id = 0; id < hn->size(); ++id) imgs.push_back(s.upper(s.horns->ref(s.horns->require(tag + hn->simplex(id).name))));
    sq.top.emplace_back(hn, s.upper.target_ptr(), std::move(imgs));
  }
  out.injectivity = injectivity_criterion(sq);
  return out;
}

FreeArrowPushout free_arrow_pushout(const MarkedCategory& m, int dim_cap) {
  const auto c = share(nerve(m.c, dim_cap));
  const auto pt = delta(0);
  const auto d1 = delta(1);
  const SimplicialMap f(pt, c, {c->ref(c->require(m.c.object(m.x)))});
  const SimplicialMap g(pt, d1, {d1->ref(d1->require("0"))});
  FreeArrowPushout out{pushout(f, g, "C", "A", dim_cap), nullptr, {}};
  out.d0 = d_filtration(m, 0, dim_cap).stage.set;
  const auto c_to_d0 = map_by_names(c, out.d0);
  const std::string x = m.c.object(m.x);
  std::vector<SimplexRef> edge;
  for (int id = 0; id < d1->size(); ++id) {
    const auto& nm = d1->simplex(id).name;
    const std::string target = nm == "0" ? x : nm == "1" ? primed(x) : "(" + m.c.morphism(m.c.identity(m.x)).name + ")'";
    edge.push_back(out.d0->ref(out.d0->require(target)));
  }
  const SimplicialMap d1_to_d0(d1, out.d0, std::move(edge));
  out.comparison = pushout_universal(out.pushout, f, g, c_to_d0, d1_to_d0);
  return out;
}

}  // namespace sct

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sct/builtin.hpp"
#include "sct/constructions.hpp"
#include "sct/error.hpp"
#include "sct/quasicat.hpp"

using namespace sct;

namespace {

using oracle::tuples;

std::vector<MarkedCategory> marked_corpus() {
  std::vector<MarkedCategory> out;
  for (const auto& nc : small_generator_corpus())
    for (int x = 0; x < nc.category.object_count(); ++x) out.push_back({nc.category, x});
  return out;
}

// Copy of c with objects renamed through `names`.
FinCategory renamed(const FinCategory& c, const std::vector<std::string>& names) {
  FinCategory d(c.name());
  for (const auto& n : names) d.add_object(n);
  std::vector<int> to(static_cast<std::size_t>(c.morphism_count()));
  for (int m = 0; m < c.morphism_count(); ++m)
    to[static_cast<std::size_t>(m)] = c.is_identity(m) ? d.identity(c.morphism(m).src)
                                                       : d.add_morphism(c.morphism(m).name, c.morphism(m).src, c.morphism(m).dst);
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      if (!c.is_identity(g) && !c.is_identity(f) && c.comp(g, f) >= 0)
        d.set_comp(to[static_cast<std::size_t>(g)], to[static_cast<std::size_t>(f)], to[static_cast<std::size_t>(c.comp(g, f))]);
  return d;
}

std::set<std::string> hom_names(const FinCategory& c, const std::string& a, const std::string& b) {
  std::set<std::string> out;
  for (int m : c.hom(c.require_object(a), c.require_object(b))) out.insert(c.morphism(m).name);
  return out;
}

// Width-0 hammock from a zigzag: arrows[t] pointing right iff right[t].
Hammock zigzag(const FinCategory& c, int x, const std::vector<int>& arrows, const std::vector<bool>& right) {
  Hammock h;
  h.x = x;
  h.right = right;
  h.z.assign(1, {});
  h.arrows.assign(1, arrows);
  int at = x;
  for (std::size_t t = 0; t < arrows.size(); ++t) {
    const auto& m = c.morphism(arrows[t]);
    at = right[t] ? m.dst : m.src;
    if (t + 1 < arrows.size()) h.z[0].push_back(at);
  }
  h.y = at;
  return h;
}

}  // namespace

TEST_CASE("ret") {
  const auto c = ret_category();
  CHECK(validate_category(c).valid);
  const int e = c.require_morphism("e");
  CHECK(c.compose(e, e) == e);
  CHECK(c.compose(c.require_morphism("i"), c.require_morphism("r")) == e);
  CHECK(find_isomorphism(c, fixture::ret_by_hand()).has_value());
  CHECK(ret_nerve(2).nondeg_counts() == std::vector<std::size_t>{2, 3, 5});
  const auto w = wret();
  CHECK(w.nondeg_counts() == std::vector<std::size_t>{2, 2, 1});
  CHECK_NOTHROW(w.validate());
  const auto top = w.ref(w.nondeg_at(2)[0]);
  CHECK(w.simplex(w.face(top, 1).base).dim == 0);
}

TEST_CASE("d_category") {
  const auto t = d_category({terminal_category(), 0});
  CHECK(validate_category(t).valid);
  CHECK(find_isomorphism(t, poset_category(chain_poset(2))).has_value());

  const auto a = arrow_category();
  const auto d = d_category({a, a.require_object("b")});
  CHECK(d.object_count() == 3);
  CHECK(hom_names(d, "a", "b'") == std::set<std::string>{barred("f")});
  for (const auto& m : marked_corpus()) {
    const auto dc = d_category(m);
    CHECK(validate_category(dc).valid);
    const int xp = dc.require_object(primed(m.c.object(m.x)));
    for (int o = 0; o < m.c.object_count(); ++o) {
      CHECK(dc.hom(xp, o).empty());
      CHECK(dc.hom(o, xp).size() == m.c.hom(o, m.x).size());
    }
    CHECK(dc.hom(xp, xp).size() == 1);
  }
}

TEST_CASE("dinfty") {
  const auto t = dinfty({terminal_category(), 0}, 5);
  const auto interval = nerve(poset_category(chain_poset(2)), 5);
  for (int n = 0; n <= 5; ++n) CHECK(t.count_at(n) == static_cast<std::size_t>(n + 2));
  CHECK(find_sset_isomorphism(share(t), share(interval)).has_value());

  const auto a = arrow_category();
  CHECK(dinfty({a, a.require_object("b")}, 2).count_at(0) == 3);

  for (const auto& m : marked_corpus()) {
    const auto d = dinfty(m, 4);
    CHECK_NOTHROW(d.validate());
    for (int n = 0; n <= 4; ++n) {
      std::size_t expect = tuples(m.c, n);
      for (int l = 0; l <= n; ++l) expect += tuples(m.c, l, m.x);
      CHECK_MESSAGE(d.count_at(n) == expect, m.c.name() << " level " << n);
    }
  }

  // The last face of a marked simplex of top degree lands in C.
  const auto d = dinfty({ret_category(), 0}, 3);
  for (int n = 1; n <= 3; ++n)
    for (int id : d.nondeg_at(n)) {
      const auto& name = d.simplex(id).name;
      if (name.back() != '\'' || name.find('|') == std::string::npos) continue;
      const auto f = d.face(d.ref(id), n);
      CHECK(d.simplex(f.base).name.back() != '\'');
    }
}

TEST_CASE("dinfty_iso") {
  for (const auto& m : marked_corpus()) {
    const auto f = dinfty_iso(m, 4);
    CHECK(is_levelwise_bijective(f, 4));
    CHECK(!f.check().has_value());
  }
  const auto f = dinfty_iso({terminal_category(), 0}, 3);
  const auto& src = f.source();
  const auto& dst = f.target();
  CHECK(dst.label(f(src.ref(src.require("x")))) == "x");
  CHECK(dst.label(f(src.ref(src.require("x'")))) == "x'");
  const auto top = f(src.degeneracy(src.ref(src.require("x'")), 0));
  CHECK(top.dim == 1);
  CHECK(dst.simplex(top.base).name == "x'");
}

TEST_CASE("d_filtration") {
  for (const auto& m : marked_corpus()) {
    const auto s0 = d_filtration(m, 0, 4);
    const auto lem4 = free_arrow_pushout(m, 4);
    CHECK(is_levelwise_bijective(lem4.comparison, 4));
    for (int n = 0; n <= 4; ++n) CHECK(lem4.pushout.object->count_at(n) == s0.stage.set->count_at(n));
  }
  for (const auto& m : marked_corpus()) {
    for (int stage = 1; stage <= 3; ++stage) {
      const auto s = d_filtration(m, stage, stage + 2);
      CHECK(s.cells.size() == tuples(m.c, stage, m.x, true));
      const auto check = check_filtration_square(s, stage + 2);
      CHECK_MESSAGE(check.ok(), m.c.name() << " stage " << stage << ": " << check.failure);
    }
  }
}

TEST_CASE("glue_free_arrows") {
  const auto t = glue_free_arrows(terminal_category());
  CHECK(find_isomorphism(t, poset_category(chain_poset(2))).has_value());
  const auto two = glue_free_arrows(discrete_category(2));
  auto parts = poset_category(discrete_poset(4));
  CHECK(two.object_count() == 4);
  CHECK(two.morphism_count() == 6);
  CHECK(hom_names(two, "a", "b'").empty());
  CHECK(hom_names(two, "a", "a'").size() == 1);
  for (const auto& nc : extended_corpus()) {
    const auto g = glue_free_arrows(nc.category);
    CHECK(validate_category(g).valid);
    CHECK(g.object_count() == 2 * nc.category.object_count());
    std::vector<std::string> names;
    for (int o = 0; o < nc.category.object_count(); ++o)
      names.push_back(std::string(1, static_cast<char>('z' - o)));
    const auto h = glue_free_arrows(renamed(nc.category, names));
    CHECK_MESSAGE(find_isomorphism(g, h).has_value(), nc.name);
  }
}

TEST_CASE("cone_category") {
  const auto c = cone_category(poset_category(chain_poset(2)));
  CHECK(validate_category(c).valid);
  const int inf = c.require_object(kMinusInfinity);
  for (int o = 0; o < c.object_count(); ++o) {
    CHECK(c.hom(inf, o).size() == 1);
    if (o != inf) CHECK(c.hom(o, inf).empty());
  }
}

TEST_CASE("cone_with_retracts") {
  const auto point = share(cone_with_retracts(chain_poset(1), 3));
  CHECK(find_sset_isomorphism(point, share(ret_nerve(3))).has_value());
  const auto two = cone_with_retracts(chain_poset(2), 2);
  CHECK_NOTHROW(two.validate());
  CHECK(two.count_at(0) == 3);
  // Each copy of Ret contributes its defining triangle r o i = Id_Y.
  std::size_t triangles = 0;
  for (int id : two.nondeg_at(2))
    if (two.simplex(id).name.ends_with("i|r")) ++triangles;
  CHECK(triangles == 2);
}

TEST_CASE("localization_table") {
  const auto t = localization_table(chain_poset(2));
  CHECK(validate_category(t).valid);
  CHECK(hom_names(t, "0", "1") == std::set<std::string>{"q0(0,1)", "q1(0,1)", "b(0,1)"});
  CHECK(hom_names(t, "1", "0") == std::set<std::string>{"q1(1,0)"});
  CHECK(hom_names(t, "0", kMinusInfinity) == std::set<std::string>{"g0(0)", "g1(0)"});
  CHECK(hom_names(t, kMinusInfinity, "0") == std::set<std::string>{"h0"});
  CHECK(find_isomorphism(localization_table(chain_poset(1)), ret_category()).has_value());

  const std::vector<std::size_t> census{1, 1, 2, 5, 16};
  for (int n = 0; n <= 4; ++n) {
    const auto posets = posets_up_to_isomorphism(n);
    CHECK(posets.size() == census[static_cast<std::size_t>(n)]);
    for (const auto& p : posets) {
      const auto table = localization_table(p);
      const auto verdict = validate_category(table);
      CHECK_MESSAGE(verdict.valid, verdict.violation);
      const auto law = check_localization_laws(p, table);
      CHECK_MESSAGE(!law.has_value(), *law);
    }
  }
  const auto& forced = t.tag(t.require_morphism("h1"), t.require_morphism("g0(0)"));
  CHECK(forced.starts_with("law"));
}

TEST_CASE("tau_1 of the cone with retracts") {
  const auto point = cone_with_retracts(chain_poset(1), 3);
  CHECK(is_quasicategory(point, 3).ok);
  CHECK(find_isomorphism(homotopy_category(point), localization_table(chain_poset(1))).has_value());
  for (const auto& p : {chain_poset(2), discrete_poset(2)}) {
    const auto l = cone_with_retracts(p, 2);
    CHECK(find_isomorphism(fundamental_category(l), localization_table(p)).has_value());
  }
}

TEST_CASE("reduce_hammock examples") {
  const auto c = poset_category(chain_poset(3));
  const std::vector<bool> ids = wide_subcategory(c, {});
  const int a = c.require_object("0"), b01 = c.require_morphism("b(0,1)"), b12 = c.require_morphism("b(1,2)");
  const int id1 = c.identity(c.require_object("1"));

  const auto with_id = zigzag(c, a, {b01, id1}, {true, false});
  const auto r1 = reduce_hammock(c, ids, with_id);
  CHECK(r1 == zigzag(c, a, {b01}, {true}));

  const auto two_right = zigzag(c, a, {b01, b12}, {true, true});
  CHECK(!is_reduced(c, two_right));
  CHECK(reduce_hammock(c, ids, two_right) == zigzag(c, a, {c.require_morphism("b(0,2)")}, {true}));

  const auto reduced = zigzag(c, a, {b01}, {true});
  CHECK(is_reduced(c, reduced));
  CHECK(reduce_hammock(c, ids, reduced) == reduced);

  const auto loop = reduce_hammock(c, ids, zigzag(c, a, {c.identity(a)}, {true}));
  CHECK(loop.length() == 0);
  CHECK(is_reduced(c, loop));

  CHECK_THROWS_AS(reduce_hammock(c, ids, zigzag(c, a, {b01, b01}, {true, false})), ParameterError);
  CHECK_THROWS_AS(wide_subcategory(poset_category(chain_poset(3)), {"b(0,1)", "b(1,2)"}), ParameterError);
}

TEST_CASE("reduce_hammock is idempotent and confluent") {
  // Every zigzag of length <= 4 in Ret with W = all morphisms, and every
  // width-1 hammock obtained by stacking two of them with vertical maps.
  const auto c = ret_category();
  std::vector<std::string> all;
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) all.push_back(c.morphism(m).name);
  const auto w = wide_subcategory(c, all);
  std::vector<Hammock> zigzags;
  std::function<void(std::vector<int>&, std::vector<bool>&, int, int)> grow = [&](std::vector<int>& arrows,
                                                                                  std::vector<bool>& dirs, int x,
                                                                                  int at) {
    if (!arrows.empty()) zigzags.push_back(zigzag(c, x, arrows, dirs));
    if (arrows.size() == 3) return;
    for (int m = 0; m < c.morphism_count(); ++m)
      for (bool right : {true, false}) {
        if ((right ? c.morphism(m).src : c.morphism(m).dst) != at) continue;
        arrows.push_back(m);
        dirs.push_back(right);
        grow(arrows, dirs, x, right ? c.morphism(m).dst : c.morphism(m).src);
        arrows.pop_back();
        dirs.pop_back();
      }
  };
  for (int x = 0; x < c.object_count(); ++x) {
    std::vector<int> arrows;
    std::vector<bool> dirs;
    grow(arrows, dirs, x, x);
  }
  std::size_t checked = 0;
  auto confluent = [&](const Hammock& h) {
    const auto l = reduce_hammock(c, w, h, ReductionOrder::leftmost);
    const auto r = reduce_hammock(c, w, h, ReductionOrder::rightmost);
    CHECK_MESSAGE(l == r, describe(c, h));
    CHECK(is_reduced(c, l));
    CHECK(reduce_hammock(c, w, l) == l);
    ++checked;
  };
  for (const auto& h : zigzags) confluent(h);
  for (const auto& top : zigzags)
    for (const auto& bottom : zigzags) {
      if (top.right != bottom.right || top.x != bottom.x || top.y != bottom.y) continue;
      Hammock h = top;
      h.width = 1;
      h.z.push_back(bottom.z[0]);
      h.arrows.push_back(bottom.arrows[0]);
      // All vertical choices; keep those with commuting squares.
      std::vector<int> vert(top.z[0].size(), 0);
      std::function<void(std::size_t)> pick = [&](std::size_t col) {
        if (col == vert.size()) {
          h.vertical = {vert};
          try {
            check_hammock(c, w, h);
          } catch (const ParameterError&) {
            return;
          }
          confluent(h);
          return;
        }
        for (int m : c.hom(top.z[0][col], bottom.z[0][col])) {
          vert[col] = m;
          pick(col + 1);
        }
      };
      pick(0);
    }
  CHECK(checked > zigzags.size());
}

TEST_CASE("row operations") {
  const auto s = prop3_setup(chain_poset(1));
  const auto hc = hammock_mapping(s.cone, s.w, s.cone.require_object("0"), s.cone.require_object(kMinusInfinity), 4, 2);
  for (int k = 1; k <= 2; ++k)
    for (const auto& h : hc.cells[static_cast<std::size_t>(k)])
      for (int r = 0; r <= k; ++r) {
        // d_r s_r = id = d_{r+1} s_r.
        const auto dup = duplicate_row(s.cone, h, r);
        CHECK(delete_row(s.cone, dup, r) == h);
        CHECK(delete_row(s.cone, dup, r + 1) == h);
      }
  // d_i d_j = d_{j-1} d_i after reduction, on width 2.
  for (std::size_t t = 0; t < hc.cells[2].size(); ++t)
    for (int i = 0; i < 2; ++i)
      for (int j = i + 1; j <= 2; ++j) {
        const auto& f = hc.faces[2][t];
        CHECK(hc.faces[1][static_cast<std::size_t>(f[static_cast<std::size_t>(j)])][static_cast<std::size_t>(i)] ==
              hc.faces[1][static_cast<std::size_t>(f[static_cast<std::size_t>(i)])][static_cast<std::size_t>(j - 1)]);
      }
  CHECK(hc.out_of_bounds_degeneracies == 3 * hc.cells[2].size());
}

TEST_CASE("hammock_mapping examples") {
  const auto a = arrow_category();
  const auto w = wide_subcategory(a, {});
  const auto hc = hammock_mapping(a, w, a.require_object("a"), a.require_object("b"), 4, 2);
  REQUIRE(hc.cells[0].size() == 1);
  CHECK(hc.cells[0][0] == zigzag(a, 0, {a.require_morphism("f")}, {true}));
  CHECK(hc.cells[1].size() == 1);
  CHECK(hc.cells[1][0] == duplicate_row(a, hc.cells[0][0], 0));
  CHECK(hammock_pi0(hc).size() == 1);
  CHECK_THROWS_AS(hammock_mapping(a, std::vector<bool>(static_cast<std::size_t>(a.morphism_count()), false), 0, 1, 2, 1),
                  ParameterError);

  HammockComplex single;
  single.cells = {{hc.cells[0][0]}};
  CHECK(hammock_pi0(single).size() == 1);
  HammockComplex loose;
  loose.cells = {{hc.cells[0][0], zigzag(a, 0, {a.identity(0), a.require_morphism("f")}, {false, true})}};
  loose.faces = {{}};
  CHECK(hammock_pi0(loose).size() == 2);
}

TEST_CASE("prop3 discreteness") {
  for (int n = 1; n <= 2; ++n) {
    const auto s = prop3_setup(chain_poset(n));
    CHECK(validate_category(s.cone).valid);
    for (int x = 0; x < s.cone.object_count(); ++x)
      for (int y = 0; y < s.cone.object_count(); ++y) {
        const auto r = check_discreteness(s, x, y, 4, 2);
        CHECK_MESSAGE(r.ok, r.failure);
        CHECK(r.classes == r.table_size);
      }
  }
  const auto s = prop3_setup(chain_poset(1));
  const int x = s.cone.require_object("0"), inf = s.cone.require_object(kMinusInfinity);
  CHECK(hammock_pi0(hammock_mapping(s.cone, s.w, x, inf, 4, 2)).size() == 1);
  CHECK(hammock_pi0(hammock_mapping(s.cone, s.w, inf, x, 4, 2)).size() == 1);
  CHECK(hammock_pi0(hammock_mapping(s.cone, s.w, x, x, 4, 2)).size() == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sct/error.hpp"
#include "sct/simpset.hpp"
#include "sct/union_find.hpp"

using namespace sct;

namespace {

std::vector<std::size_t> counts(const SimplicialSet& x) {
  auto c = x.nondeg_counts();
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

SimplexRef named(const SimplicialSet& x, const std::string& name) { return x.ref(x.require(name)); }

}  // namespace

TEST_CASE("make_standard counts") {
  CHECK(counts(make_standard(StandardKind::delta, 2)) == std::vector<std::size_t>{3, 3, 1});
  CHECK(counts(make_standard(StandardKind::horn, 2, 1)) == std::vector<std::size_t>{3, 2});
  CHECK(counts(make_standard(StandardKind::boundary, 2)) == std::vector<std::size_t>{3, 3});
  const auto h = make_standard(StandardKind::horn, 2, 1);
  CHECK_FALSE(h.find("02"));
  CHECK(h.find("01"));
  CHECK(h.find("12"));
  CHECK_THROWS_AS(make_standard(StandardKind::horn, 2, 3), ParameterError);
  CHECK_THROWS_AS(make_standard(StandardKind::boundary, 0), ParameterError);
  for (int n = 0; n <= 5; ++n) make_standard(StandardKind::delta, n).validate();
}

TEST_CASE("standard simplex levels match monotone map enumeration") {
  for (int n = 0; n <= 4; ++n) {
    const auto x = make_standard(StandardKind::delta, n);
    for (int k = 0; k <= 5; ++k) {
      const auto maps = oracle::monotone_maps(k, n);
      CHECK(x.count_at(k) == maps.size());
      CHECK(x.simplices_at(k).size() == maps.size());
      CHECK(maps.size() == oracle::binomial(n + k + 1, k + 1));
      // Each monotone map classifies exactly one simplex.
      std::set<SimplexRef> seen;
      for (const auto& theta : maps) seen.insert(x.apply(x.ref(x.size() - 1), theta));
      CHECK(seen.size() == maps.size());
    }
  }
  CHECK(make_standard(StandardKind::delta, 1).simplices_at(1).size() == 3);
  CHECK(make_standard(StandardKind::delta, 2).simplices_at(3).size() == 15);
  CHECK(make_standard(StandardKind::delta, 0).simplices_at(5).size() == 1);
}

TEST_CASE("normalize examples") {
  const auto d1 = make_standard(StandardKind::delta, 1);
  const int y = d1.require("01");
  CHECK(normalize(d1, y, {{0, 0}}).word() == DegeneracyWord{{1, 0}});
  CHECK(normalize(d1, y, {}).word() == DegeneracyWord{});
  // s0 s2 s1 on a 1-simplex
  const auto r = normalize(d1, y, {{0, 2, 1}});
  CHECK(r.word().indices == oracle::rewrite_normal({0, 2, 1}, true));
  CHECK(r.word().indices == std::vector<int>{3, 2, 0});
  CHECK_THROWS_AS(normalize(d1, y, {{5}}), DimensionError);
  CHECK_THROWS_AS(normalize(d1, y, {{0, 3}}), DimensionError);
}

TEST_CASE("normalize agrees with both rewriting strategies and the surjection route") {
  std::mt19937 rng(7);
  const auto d3 = make_standard(StandardKind::delta, 3);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int base = static_cast<int>(rng() % static_cast<unsigned>(d3.size()));
    const int d = d3.simplex(base).dim;
    const int len = static_cast<int>(rng() % 6);
    std::vector<int> w(static_cast<std::size_t>(len));
    // Build an applicable word right to left.
    int cur = d;
    for (int t = len - 1; t >= 0; --t) {
      w[static_cast<std::size_t>(t)] = static_cast<int>(rng() % static_cast<unsigned>(cur + 1));
      ++cur;
    }
    const SimplexRef r = normalize(d3, base, {w});
    const auto left = oracle::rewrite_normal(w, true);
    const auto right = oracle::rewrite_normal(w, false);
    CHECK(left == right);
    CHECK(r.word().indices == left);
    CHECK(r.word().indices == oracle::surjection_word(oracle::word_surjection(w, d)));
    CHECK(normalize(d3, base, r.word()) == r);
    ++checked;
  }
  CHECK(checked == 2000);
}

TEST_CASE("apply_operator examples") {
  const auto d2 = make_standard(StandardKind::delta, 2);
  CHECK(d2.face(named(d2, "012"), 1) == named(d2, "02"));
  const auto d1 = make_standard(StandardKind::delta, 1);
  const SimplexRef e = named(d1, "01");
  CHECK(apply_operator(d1, d1.degeneracy(e, 0), OperatorKind::face, 0) == e);
  const SimplexRef v1 = named(d1, "1");
  CHECK(apply_operator(d1, d1.degeneracy(v1, 0), OperatorKind::face, 1) == v1);
  CHECK_THROWS_AS(d1.face(e, 2), ParameterError);
  CHECK_THROWS_AS(d1.face(v1, 0), ParameterError);
  CHECK_THROWS_AS(d1.degeneracy(e, 2), ParameterError);
  SimplicialSet t = with_cap(d1, 1);
  t.set_truncated(true);
  CHECK_THROWS_AS(t.degeneracy(e, 0), TruncationError);
  CHECK_THROWS_AS(t.simplices_at(2), TruncationError);
}

TEST_CASE("simplicial identities hold on standard sets") {
  for (int n = 0; n <= 3; ++n) CHECK(oracle::check_identities(make_standard(StandardKind::delta, n), 5) == "");
  CHECK(oracle::check_identities(make_standard(StandardKind::horn, 3, 1), 5) == "");
  CHECK(oracle::check_identities(make_standard(StandardKind::boundary, 3), 5) == "");
}

TEST_CASE("validate rejects broken identities") {
  SimplicialSet x("bad", 2);
  const int a = x.add_simplex("a", 0), b = x.add_simplex("b", 0), c = x.add_simplex("c", 0);
  const int ab = x.add_simplex("ab", 1, {x.ref(b), x.ref(a)});
  const int bc = x.add_simplex("bc", 1, {x.ref(c), x.ref(b)});
  const int ac = x.add_simplex("ac", 1, {x.ref(c), x.ref(a)});
  x.add_simplex("abc", 2, {x.ref(bc), x.ref(ac), x.ref(ab)});
  x.validate();
  SimplicialSet y("bad", 2);
  const int p = y.add_simplex("a", 0), q = y.add_simplex("b", 0);
  const int pq = y.add_simplex("ab", 1, {y.ref(q), y.ref(p)});
  y.add_simplex("t", 2, {y.ref(pq), y.ref(pq), y.ref(pq)});
  CHECK_THROWS_AS(y.validate(), ValidationError);
  CHECK_THROWS_AS(y.add_simplex("u", 2, {y.ref(p)}), ValidationError);
}

TEST_CASE("maps: identity, injectivity, classify") {
  const auto d2 = delta(2);
  const auto id = SimplicialMap::identity(d2);
  CHECK_FALSE(id.check());
  CHECK(is_levelwise_injective(id).injective);
  const auto d1 = delta(1);
  const auto d0 = delta(0);
  const SimplicialMap collapse(d1, d0, {d0->ref(0), d0->ref(0), d0->degeneracy(d0->ref(0), 0)});
  CHECK_FALSE(collapse.check());
  const auto v = is_levelwise_injective(collapse);
  CHECK_FALSE(v.injective);
  CHECK(v.level == 0);
  const SimplicialMap bad(d1, d0, {d0->ref(0), d0->ref(0), d0->ref(0)});
  CHECK(bad.check());
  const auto edge = classify(delta(1), d2, named(*d2, "02"));
  CHECK_FALSE(edge.check());
  CHECK(edge(named(*delta(1), "01")) == named(*d2, "02"));
}

namespace {

// Brute-force set-level pushout of Delta^p <- Delta^r -> Delta^q along
// vertex maps, using monotone sequences as simplices.
std::size_t brute_pushout_count(int p, int q, const std::vector<int>& fa, const std::vector<int>& ga, int r, int n) {
  const auto bs = oracle::monotone_maps(n, p);
  const auto cs = oracle::monotone_maps(n, q);
  std::map<std::vector<int>, int> bi, ci;
  for (std::size_t t = 0; t < bs.size(); ++t) bi[bs[t]] = static_cast<int>(t);
  for (std::size_t t = 0; t < cs.size(); ++t) ci[cs[t]] = static_cast<int>(bs.size() + t);
  UnionFind uf(static_cast<int>(bs.size() + cs.size()));
  for (const auto& a : oracle::monotone_maps(n, r)) {
    std::vector<int> fb, gc;
    for (int v : a) {
      fb.push_back(fa[static_cast<std::size_t>(v)]);
      gc.push_back(ga[static_cast<std::size_t>(v)]);
    }
    uf.unite(bi.at(fb), ci.at(gc));
  }
  std::set<int> roots;
  for (int e = 0; e < uf.size(); ++e) roots.insert(uf.find(e));
  return roots.size();
}

SimplicialMap vertex_map(const SSetPtr& src, const SSetPtr& tgt, const std::vector<int>& vmap) {
  return classify(src, tgt, tgt->apply(tgt->ref(tgt->size() - 1), vmap));
}

}  // namespace

TEST_CASE("pushout examples") {
  const auto d0 = delta(0), d1 = delta(1);
  // Delta^1 +_{Delta^0} Delta^1, gluing 1 to 0.
  const auto f = vertex_map(d0, d1, {1});
  const auto g = vertex_map(d0, d1, {0});
  const auto p = pushout(f, g);
  CHECK(counts(*p.object) == std::vector<std::size_t>{3, 2});
  p.object->validate();
  CHECK_FALSE(p.from_b.check());
  CHECK_FALSE(p.from_c.check());
  CHECK(p.object->find("B:1"));
  CHECK_FALSE(p.object->find("C:0"));

  const auto id0 = SimplicialMap::identity(d0);
  const auto q = pushout(id0, id0);
  CHECK(find_sset_isomorphism(q.object, d0));

  const auto other = vertex_map(delta(0), d1, {0});
  CHECK_THROWS_AS(pushout(f, other), ParameterError);
}

TEST_CASE("pushout matches the brute-force level-wise oracle") {
  struct Case {
    int p, q, r;
    std::vector<int> fa, ga;
  };
  const std::vector<Case> cases = {
      {1, 1, 0, {1}, {0}},       {2, 1, 1, {0, 2}, {0, 1}}, {2, 2, 1, {1, 2}, {0, 1}},
      {2, 2, 0, {2}, {2}},       {1, 2, 1, {0, 0}, {0, 2}}, {3, 1, 2, {0, 1, 3}, {0, 0, 1}},
      {2, 0, 1, {0, 1}, {0, 0}}, {2, 2, 2, {0, 1, 2}, {0, 1, 2}},
  };
  for (const auto& c : cases) {
    const auto a = delta(c.r), b = delta(c.p), cc = delta(c.q);
    const auto f = vertex_map(a, b, c.fa);
    const auto g = vertex_map(a, cc, c.ga);
    const auto po = pushout(f, g, "B", "C", 4);
    po.object->validate();
    CHECK(oracle::check_identities(*po.object, 4) == "");
    for (int n = 0; n <= 4; ++n)
      CHECK(po.object->count_at(n) == brute_pushout_count(c.p, c.q, c.fa, c.ga, c.r, n));
    // Legs commute with f and g on every simplex.
    for (int n = 0; n <= 3; ++n)
      for (const auto& x : a->simplices_at(n)) CHECK(po.from_b(f(x)) == po.from_c(g(x)));
    // Universal property against the pushout itself.
    const auto u = pushout_universal(po, f, g, po.from_b, po.from_c);
    CHECK_FALSE(u.check());
    for (int id = 0; id < po.object->size(); ++id) CHECK(u.image(id) == po.object->ref(id));
  }
}

TEST_CASE("product counts") {
  const auto p = product(*delta(1), *delta(1), 3);
  CHECK(counts(p) == std::vector<std::size_t>{4, 5, 2});
  p.validate();
  // Shuffle oracle: non-degenerate n-simplices of Delta^a x Delta^b are
  // jointly injective pairs of monotone maps.
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      const auto x = product(*delta(a), *delta(b), a + b + 1);
      for (int n = 0; n <= a + b + 1; ++n) {
        std::size_t expect = 0;
        for (const auto& al : oracle::monotone_maps(n, a))
          for (const auto& be : oracle::monotone_maps(n, b)) {
            bool inj = true;
            for (int t = 0; t < n; ++t)
              inj = inj && (al[static_cast<std::size_t>(t)] != al[static_cast<std::size_t>(t) + 1] ||
                            be[static_cast<std::size_t>(t)] != be[static_cast<std::size_t>(t) + 1]);
            if (inj) ++expect;
          }
        CHECK(x.nondeg_at(n).size() == expect);
        CHECK(x.count_at(n) == oracle::binomial(a + n + 1, n + 1) * oracle::binomial(b + n + 1, n + 1));
      }
      CHECK_FALSE(x.truncated());
    }
  }
  const auto unit = share(product(*delta(0), *delta(2), 3));
  CHECK(find_sset_isomorphism(unit, delta(2)));
  const auto unit2 = share(product(*delta(2), *delta(0), 3));
  CHECK(find_sset_isomorphism(unit2, delta(2)));
}

TEST_CASE("join_point") {
  const auto c0 = share(join_point(*delta(0)));
  CHECK(find_sset_isomorphism(c0, delta(1)));
  const auto c1 = join_point(*boundary(1));
  CHECK(counts(c1) == std::vector<std::size_t>{3, 2});
  for (int k = 0; k <= 2; ++k) {
    const auto base = make_standard(StandardKind::delta, k);
    const auto cone = join_point(base);
    cone.validate();
    CHECK(oracle::check_identities(cone, 4) == "");
    for (int n = 0; n <= 4; ++n) {
      std::size_t expect = 1;
      for (int j = 0; j <= n; ++j) expect += base.count_at(j);
      CHECK(cone.count_at(n) == expect);
    }
    // Cone on Delta^k is Delta^{k+1}.
    CHECK(find_sset_isomorphism(share(cone), delta(k + 1)));
  }
}

TEST_CASE("isomorphism search") {
  CHECK(find_sset_isomorphism(delta(2), delta(2)));
  CHECK_FALSE(find_sset_isomorphism(horn(2, 1), boundary(2)));
  CHECK_FALSE(find_sset_isomorphism(horn(2, 0), horn(2, 1)));
  CHECK(find_sset_isomorphism(horn(3, 1), horn(3, 1)));
  CHECK_FALSE(find_sset_isomorphism(horn(3, 1), horn(3, 2)));
}

TEST_CASE("subcomplex, coproduct, components") {
  const auto d2 = delta(2);
  std::vector<bool> keep(static_cast<std::size_t>(d2->size()), true);
  keep[static_cast<std::size_t>(d2->require("012"))] = false;
  const auto s = subcomplex(d2, keep);
  CHECK(find_sset_isomorphism(s.set, boundary(2)));
  keep[static_cast<std::size_t>(d2->require("0"))] = false;
  CHECK_THROWS_AS(subcomplex(d2, keep), ValidationError);

  const auto c = coproduct({delta(1), delta(0), delta(2)}, {"a", "b", "c"});
  CHECK(counts(*c.set) == std::vector<std::size_t>{6, 4, 1});
  CHECK(components(*c.set).size() == 3);
  CHECK(c.set->find("c:012"));
}

TEST_CASE("injectivity criterion") {
  const auto y = delta(2);
  const auto hn = horn(2, 1);
  const SimplexRef cell = named(*y, "012");
  SUBCASE("hypotheses hold, conclusion holds") {
    const auto f = map_by_names(hn, y);
    const auto r = injectivity_criterion({f, 2, 1, {cell}, {SimplicialMap::identity(hn)}});
    CHECK(r.all_hypotheses());
    CHECK(r.conclusion);
  }
  SUBCASE("overlapping images violate (3) and injectivity") {
    const auto x = boundary(2);
    const auto f = map_by_names(x, y);
    const auto r = injectivity_criterion({f, 2, 1, {cell}, {map_by_names(hn, x)}});
    CHECK(r.hypotheses[0]);
    CHECK(r.hypotheses[1]);
    CHECK_FALSE(r.hypotheses[2]);
    CHECK(r.hypotheses[3]);
    CHECK_FALSE(r.conclusion);
    CHECK(r.witness.level == 1);
  }
  SUBCASE("empty A") {
    const auto f = map_by_names(hn, y);
    const auto r = injectivity_criterion({f, 2, 1, {}, {}});
    CHECK(r.all_hypotheses());
    CHECK(r.conclusion == is_levelwise_injective(f).injective);
  }
  SUBCASE("non-commuting square") {
    const auto f = map_by_names(hn, y);
    const SimplexRef flat = y->degeneracy(named(*y, "01"), 1);
    CHECK_THROWS_AS(injectivity_criterion({f, 2, 1, {flat}, {SimplicialMap::identity(hn)}}), ParameterError);
  }
}

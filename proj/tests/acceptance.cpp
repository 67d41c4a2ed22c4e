// Runs the eleven acceptance criteria against independent oracles and prints
// one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sct/builtin.hpp"
#include "sct/constructions.hpp"
#include "sct/corpus.hpp"
#include "sct/error.hpp"
#include "sct/presheaf.hpp"
#include "sct/quasicat.hpp"

using namespace sct;

namespace {

// Empty on success, otherwise the first failure.
using Body = std::function<std::string(std::string& detail)>;

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const Body& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail, failure;
  try {
    failure = body(detail);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && secs >= limit_s) failure = "over the time limit";
  if (!failure.empty()) ++failures;
  std::printf("%s %2d %-22s %7.2fs (limit %3.0fs)  %s\n", failure.empty() ? "PASS" : "FAIL", id, title.c_str(), secs, limit_s,
              failure.empty() ? detail.c_str() : failure.c_str());
  std::fflush(stdout);
}

std::string levels(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t t = 0; t < v.size(); ++t) out += (t ? "," : "") + std::to_string(v[t]);
  return out + "]";
}

std::vector<MarkedCategory> marked_corpus() {
  std::vector<MarkedCategory> out;
  for (const auto& nc : small_generator_corpus())
    for (int x = 0; x < nc.category.object_count(); ++x) out.push_back({nc.category, x});
  return out;
}

std::string tag(const MarkedCategory& m) { return m.c.name() + "@" + m.c.object(m.x); }

// Hypotheses (1)-(4) of the injectivity lemma, evaluated directly.
bool hypotheses_hold(const InjectivitySquare& sq) {
  const auto& y = sq.f.target();
  if (!oracle::injective_to(sq.f, sq.n + 1)) return false;
  std::unordered_set<SimplexRef, SimplexRefHash> faces, image_n1, image_n;
  for (const auto& r : sq.f.source().simplices_at(sq.n - 1)) image_n1.insert(sq.f(r));
  for (const auto& r : sq.f.source().simplices_at(sq.n)) image_n.insert(sq.f(r));
  for (const auto& c : sq.cells) {
    const auto g = y.face(c, sq.i);
    if (!faces.insert(g).second) return false;
    if (image_n1.count(g) || image_n.count(c)) return false;
    if (!g.nondegenerate() || !c.nondegenerate()) return false;
  }
  return true;
}

// Does every face and degeneracy commute with f up to `top`?
std::string simplicial_to(const SimplicialMap& f, int top) {
  const auto& x = f.source();
  const auto& y = f.target();
  for (int n = 0; n <= top; ++n)
    for (const auto& r : x.simplices_at(n)) {
      for (int k = 0; n > 0 && k <= n; ++k)
        if (f(x.face(r, k)) != y.face(f(r), k)) return "d" + std::to_string(k) + " on " + x.label(r);
      for (int k = 0; n < top && k <= n; ++k)
        if (f(x.degeneracy(r, k)) != y.degeneracy(f(r), k)) return "s" + std::to_string(k) + " on " + x.label(r);
    }
  return {};
}

// Unit laws and associativity over every composable triple.
std::string category_laws(const FinCategory& c) {
  const int m = c.morphism_count();
  for (int f = 0; f < m; ++f) {
    const auto& mf = c.morphism(f);
    if (c.comp(f, c.identity(mf.src)) != f || c.comp(c.identity(mf.dst), f) != f) return "unit law at " + mf.name;
    for (int g = 0; g < m; ++g) {
      if (c.morphism(g).src != mf.dst) continue;
      const int gf = c.comp(g, f);
      if (gf < 0 || c.morphism(gf).src != mf.src || c.morphism(gf).dst != c.morphism(g).dst) return "bad composite " + c.morphism(g).name + " o " + mf.name;
      for (int h = 0; h < m; ++h)
        if (c.morphism(h).src == c.morphism(g).dst && c.comp(h, gf) != c.comp(c.comp(h, g), f))
          return "associativity at " + c.morphism(h).name + ", " + c.morphism(g).name + ", " + mf.name;
    }
  }
  return {};
}

bool posets_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < a.size() && same; ++i)
      for (int j = 0; j < a.size() && same; ++j)
        same = a.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
               b.leq[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Hom-set sizes and the five composition laws, read off the morphism names.
std::string table_oracle(const Poset& p, const FinCategory& t) {
  const int n = p.size();
  auto el = [&](int i) { return p.elements[static_cast<std::size_t>(i)]; };
  auto ge = [&](int k, int i) { return static_cast<bool>(p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]); };
  auto up = [&](int i) {
    std::size_t c = 0;
    for (int k = 0; k < n; ++k) c += ge(k, i);
    return c;
  };
  const int inf = t.require_object(kMinusInfinity);
  for (int i = 0; i < n; ++i) {
    const int oi = t.require_object(el(i));
    if (t.hom(oi, inf).size() != up(i)) return "|hom(" + el(i) + ",-inf)|";
    if (t.hom(inf, oi).size() != 1) return "|hom(-inf," + el(i) + ")|";
    for (int j = 0; j < n; ++j)
      if (t.hom(oi, t.require_object(el(j))).size() != up(i) + (i == j) + p.less(i, j)) return "|hom(" + el(i) + "," + el(j) + ")|";
  }
  if (t.hom(inf, inf).size() != 1) return "|hom(-inf,-inf)|";

  auto q = [&](int k, int i, int j) { return t.require_morphism("q" + el(k) + "(" + el(i) + "," + el(j) + ")"); };
  auto g = [&](int k, int i) { return t.require_morphism("g" + el(k) + "(" + el(i) + ")"); };
  auto h = [&](int i) { return t.require_morphism("h" + el(i)); };
  auto b = [&](int i, int j) { return t.require_morphism("b(" + el(i) + "," + el(j) + ")"); };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!ge(k, i)) continue;
      for (int j = 0; j < n; ++j) {
        if (t.comp(h(j), g(k, i)) != q(k, i, j)) return "h_j g_k = q_k";
        for (int l = 0; l < n; ++l) {
          for (int r = 0; r < n; ++r)
            if (ge(r, j) && t.comp(q(r, j, l), q(k, i, j)) != q(k, i, l)) return "q_p q_k = q_k";
          if (p.less(j, l) && t.comp(b(j, l), q(k, i, j)) != q(k, i, l)) return "b_jl q_k = q_k";
          if (p.less(l, i) && t.comp(q(k, i, j), b(l, i)) != q(k, l, j)) return "q_k b_li = q_k";
        }
        for (int r = 0; r < n; ++r)
          if (ge(r, j) && t.comp(g(r, j), q(k, i, j)) != g(k, i)) return "g_p q_k = g_k";
      }
    }
  return {};
}

// Number of order-preserving maps from the poset of non-empty subsets of
// {0..n} to [1].
std::size_t sd_maps_to_interval(int n) {
  const int subsets = (1 << (n + 1)) - 1;
  std::size_t count = 0;
  for (int assign = 0; assign < (1 << subsets); ++assign) {
    bool ok = true;
    for (int s = 1; s <= subsets && ok; ++s)
      for (int t = 1; t <= subsets && ok; ++t)
        if ((s & t) == s && ((assign >> (s - 1)) & 1) > ((assign >> (t - 1)) & 1)) ok = false;
    count += ok;
  }
  return count;
}

std::string horn_counts(const FinCategory& c, const QuasiReport& r) {
  if (!r.ok || !r.unique_fillers) return c.name() + ": fillers missing or not unique";
  for (const auto& h : r.counts)
    if (h.horn_maps != oracle::tuples(c, h.n)) return c.name() + ": Lambda" + std::to_string(h.n) + "_" + std::to_string(h.i) + " count";
  return {};
}

using Components = std::vector<std::vector<int>>;

}  // namespace

int main() {
  criterion(1, "ez normal forms", 5, [](std::string& detail) -> std::string {
    std::mt19937 rng(20240901);
    std::size_t calls = 0;
    for (int s = 0; s < 25; ++s) {
      const auto x = random_sset(rng, {3 + static_cast<int>(rng() % 3), 3, 5}, "R" + std::to_string(s));
      for (int t = 0; t < 50; ++t) {
        const int base = static_cast<int>(rng() % static_cast<std::uint32_t>(x.size()));
        const int d = x.simplex(base).dim;
        const auto w = random_word(rng, d, static_cast<int>(rng() % 6));
        const auto expect = oracle::surjection_word(oracle::word_surjection(w.indices, d));
        if (oracle::rewrite_normal(w.indices, true) != expect || oracle::rewrite_normal(w.indices, false) != expect)
          return "rewriting oracle disagrees with the surjection on " + w.str();
        const auto r = normalize(x, base, w);
        const auto again = normalize(x, base, DegeneracyWord{expect});
        calls += 2;
        if (r.word().indices != expect) return "normal form of " + w.str() + " on " + x.simplex(base).name + " is " + r.word().str();
        if (r != again) return "normalize depends on the word for " + w.str();
        SimplexRef stepwise = x.ref(base);
        for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) stepwise = x.degeneracy(stepwise, *it);
        if (stepwise != r) return "stepwise degeneracies differ for " + w.str();
      }
    }
    detail = std::to_string(calls) + " normalize calls on 25 generated sets";
    return {};
  });

  criterion(2, "injectivity lemma", 30, [](std::string& detail) -> std::string {
    const auto instances = random_injectivity_instances(1, 100);
    int satisfied = 0;
    for (const auto& inst : instances) {
      const bool hyp = hypotheses_hold(inst.square);
      const auto v = oracle::pushout_map(inst.square.f, inst.square.cells, inst.square.n, inst.square.i, inst.square.n + 1);
      const auto r = injectivity_criterion(inst.square);
      if (r.all_hypotheses() != hyp) return inst.name + ": hypotheses disagree with the oracle";
      if (r.conclusion != v.injective) return inst.name + ": conclusion disagrees with the oracle";
      if (!hyp) continue;
      ++satisfied;
      if (!v.injective) return inst.name + ": hypotheses hold but " + v.detail;
    }
    if (satisfied < 50) return "only " + std::to_string(satisfied) + " instances satisfy the hypotheses";
    const auto bad = overlapping_instance();
    const auto r = injectivity_criterion(bad.square);
    const auto v = oracle::pushout_map(bad.square.f, bad.square.cells, bad.square.n, bad.square.i, bad.square.n + 1);
    if (r.hypotheses[2] || r.conclusion || v.injective) return "overlapping instance not flagged";
    detail = std::to_string(satisfied) + " of " + std::to_string(instances.size()) + " satisfy (1)-(4), all injective; overlap flagged";
    return {};
  });

  criterion(3, "lem4", 10, [](std::string& detail) -> std::string {
    const int dim = 4;
    const auto corpus = marked_corpus();
    for (const auto& m : corpus) {
      const auto p = free_arrow_pushout(m, dim);
      for (int n = 0; n <= dim; ++n) {
        const std::size_t expect = oracle::tuples(m.c, n) + static_cast<std::size_t>(n) + 1;
        if (p.pushout.object->count_at(n) != expect || p.d0->count_at(n) != expect) return tag(m) + ": level " + std::to_string(n) + " count";
      }
      if (!oracle::injective_to(p.comparison, dim)) return tag(m) + ": comparison not injective";
      if (auto e = simplicial_to(p.comparison, dim); !e.empty()) return tag(m) + ": " + e;
    }
    detail = std::to_string(corpus.size()) + " marked categories, bijective to level 4";
    return {};
  });

  criterion(4, "D^m pushout", 60, [](std::string& detail) -> std::string {
    std::size_t squares = 0;
    for (const auto& m : marked_corpus())
      for (int stage = 1; stage <= 3; ++stage) {
        const int level = stage + 2;
        const auto s = d_filtration(m, stage, level);
        const std::string at = tag(m) + " m=" + std::to_string(stage);
        if (s.cells.size() != oracle::tuples(m.c, stage, m.x, true)) return at + ": wrong number of cells";
        std::vector<SimplexRef> tops;
        for (int id : s.deltas->nondeg_at(stage + 1)) tops.push_back(s.lower(s.deltas->ref(id)));
        const auto v = oracle::pushout_map(s.previous_inclusion, tops, stage + 1, stage, level);
        if (!v.injective || !v.surjective) return at + ": " + v.detail;
        const auto c = check_filtration_square(s, level);
        if (!c.ok()) return at + ": " + c.failure;
        ++squares;
      }
    detail = std::to_string(squares) + " squares, pushout bijective to level m+2";
    return {};
  });

  criterion(5, "lem3", 10, [](std::string& detail) -> std::string {
    const int dim = 4;
    const auto corpus = marked_corpus();
    for (const auto& m : corpus) {
      const auto f = dinfty_iso(m, dim);
      const auto dc = d_category(m);
      for (int n = 0; n <= dim; ++n) {
        std::size_t expect = oracle::tuples(m.c, n);
        for (int l = 0; l <= n; ++l) expect += oracle::tuples(m.c, l, m.x);
        if (oracle::tuples(dc, n) != expect || f.source().count_at(n) != expect || f.target().count_at(n) != expect)
          return tag(m) + ": level " + std::to_string(n) + " count";
      }
      if (!oracle::injective_to(f, dim)) return tag(m) + ": not injective";
      if (auto e = simplicial_to(f, dim); !e.empty()) return tag(m) + ": " + e;
    }
    const auto d = share(dinfty({terminal_category(), 0}, dim));
    const auto interval = share(nerve(poset_category(chain_poset(2)), dim));
    for (int n = 0; n <= dim; ++n)
      if (d->count_at(n) != static_cast<std::size_t>(n + 2) || interval->count_at(n) != d->count_at(n)) return "terminal: level " + std::to_string(n);
    if (!find_sset_isomorphism(d, interval)) return "terminal: D^infty is not N{x<x'}";
    detail = std::to_string(corpus.size()) + " marked categories; terminal |D_n| = n+2";
    return {};
  });

  criterion(6, "localization table", 120, [](std::string& detail) -> std::string {
    const std::vector<std::size_t> census{1, 1, 2, 5, 16, 63};
    std::size_t total = 0;
    for (int n = 0; n <= 5; ++n) {
      const auto posets = posets_up_to_isomorphism(n);
      if (posets.size() != census[static_cast<std::size_t>(n)]) return "size " + std::to_string(n) + ": " + std::to_string(posets.size()) + " posets";
      for (std::size_t a = 0; a < posets.size(); ++a) {
        posets[a].validate();
        for (std::size_t b = 0; b < a; ++b)
          if (posets_isomorphic(posets[a], posets[b])) return "size " + std::to_string(n) + ": repeated isomorphism class";
        const auto t = localization_table(posets[a]);
        if (auto v = validate_category(t); !v.valid) return v.violation;
        if (auto e = category_laws(t); !e.empty()) return e;
        if (auto e = table_oracle(posets[a], t); !e.empty()) return "size " + std::to_string(n) + ": " + e;
        if (auto e = check_localization_laws(posets[a], t)) return *e;
        ++total;
      }
    }
    detail = std::to_string(total) + " posets of size <= 5";
    return {};
  });

  criterion(7, "lem6 at |I| = 1", 5, [](std::string& detail) -> std::string {
    const auto l = share(cone_with_retracts(chain_poset(1), 3));
    const auto ret = share(ret_nerve(3));
    const auto rc = ret_category();
    for (int n = 0; n <= 3; ++n)
      if (l->count_at(n) != oracle::tuples(rc, n)) return "level " + std::to_string(n) + " count";
    if (!find_sset_isomorphism(l, ret)) return "not isomorphic to N(Ret)";
    if (auto e = horn_counts(rc, is_quasicategory(*l, 3)); !e.empty()) return e;
    const auto ho = homotopy_category(*l);
    if (!find_isomorphism(ho, localization_table(chain_poset(1)))) return "ho differs from the table";
    if (!find_isomorphism(ho, fixture::ret_by_hand())) return "ho differs from Ret";
    detail = "L = N(Ret), quasi-category to dim 3, ho = table";
    return {};
  });

  criterion(8, "hammock discreteness", 300, [](std::string& detail) -> std::string {
    std::size_t pairs = 0, cells = 0;
    for (int size = 1; size <= 2; ++size) {
      const auto s = prop3_setup(chain_poset(size));
      for (int x = 0; x < s.cone.object_count(); ++x)
        for (int y = 0; y < s.cone.object_count(); ++y) {
          const std::string at = "I=chain" + std::to_string(size) + " Hom(" + s.cone.object(x) + "," + s.cone.object(y) + ")";
          const auto hc = hammock_mapping(s.cone, s.w, x, y, 4, 2);
          const auto& zero = hc.cells[0];
          std::vector<int> parent(zero.size()), label(zero.size());
          std::iota(parent.begin(), parent.end(), 0);
          std::function<int(int)> find = [&](int v) {
            return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
          };
          for (std::size_t t = 0; t < zero.size(); ++t) label[t] = hammock_label(s, zero[t]);
          for (const auto& f : hc.faces[1]) {
            if (label[static_cast<std::size_t>(f[0])] != label[static_cast<std::size_t>(f[1])]) return at + ": a width-1 hammock joins two labels";
            parent[static_cast<std::size_t>(find(f[0]))] = find(f[1]);
          }
          std::map<int, int> class_label;
          std::set<int> labels;
          for (std::size_t t = 0; t < zero.size(); ++t) {
            const auto [it, fresh] = class_label.emplace(find(static_cast<int>(t)), label[t]);
            if (!fresh && it->second != label[t]) return at + ": a class carries two labels";
            labels.insert(label[t]);
          }
          const auto hom = s.table.hom(s.label.objects[static_cast<std::size_t>(x)], s.label.objects[static_cast<std::size_t>(y)]);
          if (labels.size() != class_label.size() || labels != std::set<int>(hom.begin(), hom.end())) return at + ": pi0 is not the table hom-set";
          const auto r = check_discreteness(s, x, y, 4, 2);
          if (!r.ok || r.classes != hom.size()) return at + ": " + r.failure;
          ++pairs;
          for (const auto& w : hc.cells) cells += w.size();
        }
    }
    detail = std::to_string(pairs) + " mapping complexes, " + std::to_string(cells) + " hammocks";
    return {};
  });

  criterion(9, "pure and split", 60, [](std::string& detail) -> std::string {
    std::size_t morphisms = 0, split_count = 0, squares = 0;
    for (const auto& base : {std::make_shared<const FinCategory>(terminal_category()), std::make_shared<const FinCategory>(arrow_category())}) {
      const auto corpus = presheaf_corpus(base, 3);
      if (corpus.size() != (base->object_count() == 1 ? 4u : 18u)) return base->name() + ": corpus size " + std::to_string(corpus.size());
      PurityChecker checker(corpus);
      for (const auto& a : corpus)
        for (const auto& b : corpus) {
          const auto& hom = checker.hom(a, b);
          if (hom.size() != oracle::brute_nat(*a, *b).size()) return "hom-set size differs from brute force";
          for (const auto& f : hom) {
            ++morphisms;
            const bool split = oracle::brute_split(*a, *b, f.components);
            if (is_split(f).has_value() != split) return "is_split differs from brute force on " + describe(f);
            if (checker.check(f).pure != split) return (split ? "split, not pure: " : "pure, not split: ") + describe(f);
            split_count += split;
            for (const auto& c : corpus)
              for (const auto& g : checker.hom(b, c)) {
                const auto cs = cobase_split(f, compose(g, f), g);
                if (!cs.split || !cs.retraction) return "cobase not split: " + describe(f) + ", " + describe(g);
                cs.retraction->validate();
                const Components rf = oracle::compose_components(cs.retraction->components, cs.f_prime.components);
                for (std::size_t o = 0; o < rf.size(); ++o)
                  for (std::size_t e = 0; e < rf[o].size(); ++e)
                    if (rf[o][e] != static_cast<int>(e)) return "cobase retraction is not a retraction";
                ++squares;
              }
          }
        }
    }
    detail = std::to_string(morphisms) + " morphisms (" + std::to_string(split_count) + " split), " + std::to_string(squares) + " cobase squares";
    return {};
  });

  criterion(10, "Ex and Sd", 10, [](std::string& detail) -> std::string {
    if (sd_standard(2).nondeg_counts() != std::vector<std::size_t>{7, 12, 6}) return "sd(2) = " + levels(sd_standard(2).nondeg_counts());
    const auto e = ex(delta(1), 1);
    const std::size_t expect = sd_maps_to_interval(1);
    if (e.result->count_at(1) != expect) return "|ex(Delta1)_1| = " + std::to_string(e.result->count_at(1)) + ", oracle " + std::to_string(expect);
    const std::vector<SSetPtr> corpus{delta(1), horn(2, 1), boundary(2), share(ret_nerve(2))};
    for (const auto& x : corpus) {
      const auto r = ex(x, 2);
      if (auto v = r.last_vertex.check()) return "last_vertex on " + x->name() + ": " + *v;
    }
    detail = "sd(2) = [7,12,6], |ex(Delta1)_1| = " + std::to_string(expect) + ", last_vertex natural on " + std::to_string(corpus.size()) + " sets";
    return {};
  });

  criterion(11, "quasi-category sanity", 10, [](std::string& detail) -> std::string {
    std::vector<FinCategory> corpus;
    for (const auto& nc : extended_corpus()) corpus.push_back(nc.category);
    corpus.push_back(ret_category());
    corpus.push_back(poset_category(chain_poset(3)));
    corpus.push_back(poset_category(posets_up_to_isomorphism(3)[2]));
    for (const auto& c : corpus)
      if (auto e = horn_counts(c, is_quasicategory(nerve(c, 3), 3)); !e.empty()) return e;
    const auto r = is_quasicategory(*horn(2, 1), 2);
    if (r.ok || r.witnesses.empty()) return "Lambda2_1 not rejected";
    detail = std::to_string(corpus.size()) + " nerves with unique fillers; Lambda2_1 fails at " + r.witnesses.front();
    return {};
  });

  std::printf("%s\n", failures ? "acceptance: FAILED" : "acceptance: all criteria passed");
  return failures ? 1 : 0;
}

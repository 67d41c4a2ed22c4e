#include "sct/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "sct/builtin.hpp"
#include "sct/constructions.hpp"
#include "sct/corpus.hpp"
#include "sct/error.hpp"
#include "sct/io.hpp"
#include "sct/presheaf.hpp"
#include "sct/quasicat.hpp"

namespace sct {

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string SuiteReport::render(bool timings) const {
  std::ostringstream out;
  std::size_t ok = 0;
  out << "suite " << suite << "\n";
  for (const auto& c : checks) {
    ok += c.passed;
    out << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (timings) out << " (" << std::fixed << std::setprecision(1) << c.millis << " ms)";
    out << "\n";
  }
  out << checks.size() << " checks, " << ok << " passed, " << checks.size() - ok << " failed\n";
  return out.str();
}

namespace {

using Outcome = std::pair<bool, std::string>;

class Runner {
 public:
  explicit Runner(std::string suite) { report_.suite = std::move(suite); }

  void check(const std::string& id, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r{id, false, {}, 0};
    try {
      std::tie(r.passed, r.detail) = body();
    } catch (const Error& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

std::string counts(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t t = 0; t < v.size(); ++t) out += (t ? "," : "") + std::to_string(v[t]);
  return out + "]";
}

std::string label(const MarkedCategory& m) { return m.c.name() + "@" + m.c.object(m.x); }

// ---------------------------------------------------------------------------

SuiteReport suite_ez(const VerifyOptions& o) {
  Runner run("ez");
  const int calls = pick(o.count, 1000);
  const int sets = 20;
  std::mt19937 rng(o.seed);
  for (int s = 0; s < sets; ++s) {
    const auto x = random_sset(rng, {3 + static_cast<int>(rng() % 3), 3, 5}, "R" + std::to_string(s));
    const int quota = calls / sets + (s < calls % sets ? 1 : 0);
    std::vector<std::pair<int, DegeneracyWord>> words;
    for (int t = 0; t < quota; ++t) {
      const int base = static_cast<int>(rng() % static_cast<std::uint32_t>(x.size()));
      words.emplace_back(base, random_word(rng, x.simplex(base).dim, static_cast<int>(rng() % 6)));
    }
    run.check("normalize " + x.name(), [&]() -> Outcome {
      x.validate();
      for (const auto& [base, w] : words) {
        const SimplexRef r = normalize(x, base, w);
        const auto left = rewrite_to_normal(w, true), right = rewrite_to_normal(w, false);
        SimplexRef stepwise = x.ref(base);
        for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) stepwise = x.degeneracy(stepwise, *it);
        std::string bad;
        if (!r.word().is_normal()) bad = "result is not strictly decreasing";
        else if (!(left == right)) bad = "rewriting strategies disagree";
        else if (!(r.word() == left)) bad = "normal form differs from rewriting";
        else if (!(stepwise == r)) bad = "step-by-step degeneracies differ";
        else if (!(normalize(x, base, r.word()) == r)) bad = "normal form is not stable";
        if (!bad.empty()) return {false, bad + " for " + x.simplex(base).name + " " + w.str()};
      }
      return {true, std::to_string(words.size()) + " words"};
    });
  }
  for (const auto& path : o.corpus_files) {
    std::vector<NonNormalFace> notes;
    const auto x = parse_sset(read_text(path), false, &notes);
    run.check("normal faces " + path, [&]() -> Outcome {
      if (notes.empty()) return {true, std::to_string(x.size()) + " simplices"};
      const auto& n = notes.front();
      return {false, "line " + std::to_string(n.line) + ": face " + n.simplex + "." + std::to_string(n.k) + " deg=" + n.given.str() +
                         " has normal form " + n.normal.str()};
    });
  }
  return run.take();
}

SuiteReport suite_inj(const VerifyOptions& o) {
  Runner run("inj");
  const auto instances = random_injectivity_instances(o.seed, pick(o.count, 100));
  int satisfied = 0;
  for (const auto& inst : instances) {
    const auto r = injectivity_criterion(inst.square);
    if (!r.all_hypotheses()) continue;
    ++satisfied;
    run.check(inst.name, [&]() -> Outcome {
      if (r.conclusion) return {true, "pushout map injective"};
      return {false, "hypotheses hold but the pushout map identifies two simplices at level " + std::to_string(r.witness.level)};
    });
  }
  run.check("hypotheses met", [&]() -> Outcome {
    return {satisfied >= 50, std::to_string(satisfied) + " of " + std::to_string(instances.size()) + " generated squares"};
  });
  const auto bad = overlapping_instance();
  run.check(bad.name, [&]() -> Outcome {
    const auto r = injectivity_criterion(bad.square);
    const bool flagged = !r.hypotheses[2] && !r.conclusion;
    return {flagged, flagged ? "hypothesis (3) fails and the map is not injective" : "violation not detected"};
  });
  return run.take();
}

SuiteReport suite_lem3(const VerifyOptions& o) {
  Runner run("lem3");
  const int dim = pick(o.dim, 4);
  const auto corpus = builtin_marked_corpus();
  for (const auto& m : corpus)
    run.check(label(m), [&]() -> Outcome {
      const auto f = dinfty_iso(m, dim);
      if (auto v = f.check()) return {false, *v};
      if (!is_levelwise_bijective(f, dim)) return {false, "not bijective"};
      std::vector<std::size_t> c;
      for (int n = 0; n <= dim; ++n) c.push_back(f.target().count_at(n));
      return {true, "levels " + counts(c)};
    });
  run.check("terminal", [&]() -> Outcome {
    const auto d = dinfty({terminal_category(), 0}, dim);
    const auto interval = nerve(poset_category(chain_poset(2)), dim);
    for (int n = 0; n <= dim; ++n)
      if (d.count_at(n) != static_cast<std::size_t>(n + 2) || interval.count_at(n) != d.count_at(n))
        return {false, "level " + std::to_string(n) + " has " + std::to_string(d.count_at(n)) + " simplices"};
    return {true, "|D_n| = n+2 = |N{x<x'}_n|"};
  });
  run.check("corpus", [&]() -> Outcome { return {true, std::to_string(corpus.size()) + " marked categories checked"}; });
  return run.take();
}

SuiteReport suite_lem4(const VerifyOptions& o) {
  Runner run("lem4");
  const int dim = pick(o.dim, 4);
  for (const auto& m : builtin_marked_corpus())
    run.check(label(m), [&]() -> Outcome {
      const auto p = free_arrow_pushout(m, dim);
      std::vector<std::size_t> a, b;
      for (int n = 0; n <= dim; ++n) {
        a.push_back(p.pushout.object->count_at(n));
        b.push_back(p.d0->count_at(n));
      }
      if (a != b) return {false, "levels " + counts(a) + " vs D^0 " + counts(b)};
      if (!is_levelwise_bijective(p.comparison, dim)) return {false, "comparison is not bijective"};
      return {true, "levels " + counts(a)};
    });
  return run.take();
}

SuiteReport suite_dm(const VerifyOptions& o) {
  Runner run("dm-pushout");
  const int top = pick(o.max_size, 3);
  for (const auto& m : builtin_marked_corpus())
    for (int stage = 1; stage <= top; ++stage)
      run.check(label(m) + " m=" + std::to_string(stage), [&]() -> Outcome {
        const int level = pick(o.dim, stage + 2);
        const auto s = d_filtration(m, stage, level);
        const auto c = check_filtration_square(s, level);
        if (!c.ok()) return {false, c.failure};
        return {true, std::to_string(s.cells.size()) + " cells, pushout bijective to level " + std::to_string(level)};
      });
  return run.take();
}

SuiteReport suite_prop2(const VerifyOptions& o) {
  Runner run("prop2");
  const int dim = pick(o.dim, 4);
  for (const auto& m : builtin_marked_corpus()) {
    run.check(label(m) + " tau1", [&]() -> Outcome {
      const auto p = free_arrow_pushout(m, dim);
      const bool ok = find_isomorphism(fundamental_category(*p.pushout.object), d_category(m)).has_value();
      return {ok, ok ? "tau1(C + Delta1) = D" : "tau1 of the pushout differs from D"};
    });
    run.check(label(m) + " filtration", [&]() -> Outcome {
      const auto full = dinfty(m, dim);
      for (int stage = 0; stage < dim; ++stage) {
        const auto s = d_filtration(m, stage, dim);
        for (int n = 0; n <= stage; ++n)
          if (s.stage.set->count_at(n) != full.count_at(n)) return {false, "D^" + std::to_string(stage) + " misses level " + std::to_string(n)};
      }
      if (!is_levelwise_bijective(dinfty_iso(m, dim), dim)) return {false, "N(D) -> D is not bijective"};
      return {true, "D^m exhausts D = N(D) to level " + std::to_string(dim)};
    });
  }
  return run.take();
}

SuiteReport suite_li(const VerifyOptions& o, bool laws) {
  Runner run(laws ? "li-assoc" : "li-table");
  const int top = pick(o.max_size, 5);
  for (int n = 0; n <= top; ++n) {
    const auto posets = posets_up_to_isomorphism(n);
    run.check("posets of size " + std::to_string(n), [&]() -> Outcome {
      for (const auto& p : posets) {
        const auto t = localization_table(p);
        if (laws) {
          if (auto v = check_localization_laws(p, t)) return {false, *v};
        } else if (auto v = validate_category(t); !v.valid) {
          return {false, v.violation};
        }
      }
      return {true, std::to_string(posets.size()) + " posets"};
    });
  }
  return run.take();
}

SuiteReport suite_lc(const VerifyOptions& o) {
  Runner run("lc-consistency");
  run.check("point: L = N(Ret)", [&]() -> Outcome {
    const bool ok = find_sset_isomorphism(share(cone_with_retracts(chain_poset(1), 3)), share(ret_nerve(3))).has_value();
    return {ok, ok ? "isomorphic" : "not isomorphic"};
  });
  run.check("point: quasi-category", [&]() -> Outcome {
    const auto r = is_quasicategory(cone_with_retracts(chain_poset(1), 3), 3);
    return {r.ok, r.ok ? "inner horns to dimension 3 fill" : r.witnesses.front()};
  });
  run.check("point: ho = table", [&]() -> Outcome {
    const bool ok = find_isomorphism(homotopy_category(cone_with_retracts(chain_poset(1), 3)), localization_table(chain_poset(1))).has_value();
    return {ok, ok ? "isomorphic" : "not isomorphic"};
  });
  const int top = pick(o.max_size, 2);
  for (int n = 1; n <= top; ++n)
    for (const auto& p : posets_up_to_isomorphism(n)) {
      std::string name = "tau1 size " + std::to_string(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (p.less(i, j)) name += " " + p.elements[static_cast<std::size_t>(i)] + "<" + p.elements[static_cast<std::size_t>(j)];
      run.check(name, [&]() -> Outcome {
        const bool ok = find_isomorphism(fundamental_category(cone_with_retracts(p, 2)), localization_table(p)).has_value();
        return {ok, ok ? "tau1(L) = table" : "tau1(L) differs from the table"};
      });
    }
  return run.take();
}

SuiteReport suite_hammock(const VerifyOptions& o) {
  Runner run("hammock-discrete");
  const int top = pick(o.max_size, 2);
  for (int n = 1; n <= top; ++n) {
    const auto s = prop3_setup(chain_poset(n));
    for (int x = 0; x < s.cone.object_count(); ++x)
      for (int y = 0; y < s.cone.object_count(); ++y)
        run.check("I=chain" + std::to_string(n) + " Hom(" + s.cone.object(x) + "," + s.cone.object(y) + ")", [&]() -> Outcome {
          const auto r = check_discreteness(s, x, y, o.max_len, o.max_width);
          if (!r.ok) return {false, r.failure};
          return {r.classes == r.table_size,
                  std::to_string(r.classes) + " classes, " + std::to_string(r.table_size) + " table morphisms"};
        });
  }
  return run.take();
}

SuiteReport suite_pure(const VerifyOptions& o) {
  Runner run("pure-split");
  const int size = pick(o.max_size, 3);
  for (const auto& base : {std::make_shared<const FinCategory>(terminal_category()), std::make_shared<const FinCategory>(arrow_category())}) {
    const auto corpus = presheaf_corpus(base, size);
    PurityChecker checker(corpus);
    std::size_t total = 0, split = 0;
    std::vector<std::pair<const PresheafMorphism*, bool>> verdicts;
    for (const auto& a : corpus)
      for (const auto& b : corpus)
        for (const auto& f : checker.hom(a, b)) verdicts.emplace_back(&f, is_split(f).has_value());
    const std::string tag = base->name() + " size<=" + std::to_string(size);
    run.check(tag + " split => pure", [&]() -> Outcome {
      for (const auto& [f, s] : verdicts) {
        ++total;
        if (!s) continue;
        ++split;
        if (!checker.check(*f).pure) return {false, "split but not pure: " + describe(*f)};
      }
      return {true, std::to_string(split) + " split of " + std::to_string(total) + " morphisms"};
    });
    run.check(tag + " pure <=> split", [&]() -> Outcome {
      for (const auto& [f, s] : verdicts)
        if (checker.check(*f).pure != s) return {false, (s ? "split, not pure: " : "pure, not split: ") + describe(*f)};
      return {true, std::to_string(verdicts.size()) + " morphisms, " + std::to_string(corpus.size()) + " test objects"};
    });
    run.check(tag + " cobase split", [&]() -> Outcome {
      std::size_t cases = 0;
      for (const auto& [fi, s] : verdicts) {
        (void)s;
        for (const auto& a : corpus)
          for (const auto& g : checker.hom(fi->target, a)) {
            const auto u = compose(g, *fi);
            if (!cobase_split(*fi, u, g).split) return {false, "not split: f_i " + describe(*fi) + ", g " + describe(g)};
            ++cases;
          }
      }
      return {true, std::to_string(cases) + " squares"};
    });
  }
  return run.take();
}

// Chains S_0 < ... < S_k of non-empty subsets of {0..n}.
std::size_t subset_chains(int n, int k) {
  const int m = n + 1;
  std::vector<std::vector<std::size_t>> binom(static_cast<std::size_t>(m) + 1, std::vector<std::size_t>(static_cast<std::size_t>(m) + 1, 0));
  for (int a = 0; a <= m; ++a) {
    binom[static_cast<std::size_t>(a)][0] = 1;
    for (int b = 1; b <= a; ++b)
      binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          binom[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] + (b < a ? binom[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b)] : 0);
  }
  // ending[s]: chains of the current length ending at a fixed subset of size s.
  std::vector<std::size_t> ending(static_cast<std::size_t>(m) + 1, 1);
  for (int len = 1; len <= k; ++len) {
    std::vector<std::size_t> next(static_cast<std::size_t>(m) + 1, 0);
    for (int s = 1; s <= m; ++s)
      for (int t = 1; t < s; ++t) next[static_cast<std::size_t>(s)] += binom[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] * ending[static_cast<std::size_t>(t)];
    ending = next;
  }
  std::size_t total = 0;
  for (int s = 1; s <= m; ++s) total += binom[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)] * ending[static_cast<std::size_t>(s)];
  return total;
}

SuiteReport suite_ex(const VerifyOptions& o) {
  Runner run("ex-sd");
  const int top = pick(o.max_size, 3);
  for (int n = 0; n <= top; ++n)
    run.check("sd(" + std::to_string(n) + ")", [&]() -> Outcome {
      const auto sd = sd_standard(n);
      std::vector<std::size_t> expect;
      for (int k = 0; k <= n; ++k) expect.push_back(subset_chains(n, k));
      const auto got = sd.nondeg_counts();
      return {got == expect, counts(got) + (got == expect ? "" : " expected " + counts(expect))};
    });
  run.check("|ex(Delta1)_1|", [&]() -> Outcome {
    const auto d1 = delta(1);
    const auto e = ex(d1, 1);
    LevelIndex index(*d1);
    const std::size_t maps = for_each_map(share(sd_standard(1)), index, [](const std::vector<SimplexRef>&) { return true; });
    const auto got = e.result->count_at(1);
    return {got == maps, std::to_string(got) + " simplices, " + std::to_string(maps) + " maps Sd(Delta1) -> Delta1"};
  });
  const int dim = pick(o.dim, 2);
  const std::vector<std::pair<std::string, SSetPtr>> corpus{
      {"Delta1", delta(1)}, {"Lambda2_1", horn(2, 1)}, {"dDelta2", boundary(2)}, {"N(Ret)", share(ret_nerve(2))}};
  for (const auto& [name, x] : corpus)
    run.check("last_vertex " + name, [&]() -> Outcome {
      const auto e = ex(x, dim);
      if (auto v = e.last_vertex.check()) return {false, *v};
      return {true, "natural to level " + std::to_string(e.valid_dim)};
    });
  return run.take();
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"ez",       "inj",         "lem3",           "lem4",
                                            "dm-pushout", "prop2",     "li-table",       "li-assoc",
                                            "lc-consistency", "hammock-discrete", "pure-split", "ex-sd"};
  return ids;
}

SuiteReport run_verify(const std::string& suite, const VerifyOptions& o) {
  if (suite == "ez") return suite_ez(o);
  if (suite == "inj") return suite_inj(o);
  if (suite == "lem3") return suite_lem3(o);
  if (suite == "lem4") return suite_lem4(o);
  if (suite == "dm-pushout") return suite_dm(o);
  if (suite == "prop2") return suite_prop2(o);
  if (suite == "li-table") return suite_li(o, false);
  if (suite == "li-assoc") return suite_li(o, true);
  if (suite == "lc-consistency") return suite_lc(o);
  if (suite == "hammock-discrete") return suite_hammock(o);
  if (suite == "pure-split") return suite_pure(o);
  if (suite == "ex-sd") return suite_ex(o);
  throw ParameterError("unknown suite '" + suite + "'");
}

}  // namespace sct

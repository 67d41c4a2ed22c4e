#include "sct/corpus.hpp"

#include <algorithm>

#include "sct/builtin.hpp"
#include "sct/error.hpp"

namespace sct {

namespace {

int pick(std::mt19937& rng, std::size_t n) { return static_cast<int>(rng() % static_cast<std::uint32_t>(n)); }

}  // namespace

SimplicialSet random_sset(std::mt19937& rng, const RandomSsetShape& shape, const std::string& name) {
  SimplicialSet x(name, shape.max_dim);
  for (int v = 0; v < shape.vertices; ++v) x.add_simplex("v" + std::to_string(v), 0);
  for (int n = 1; n <= shape.max_dim; ++n) {
    const auto below = x.simplices_at(n - 1);
    int made = 0;
    for (int attempt = 0; attempt < shape.attempts_per_level; ++attempt) {
      std::vector<SimplexRef> faces;
      for (int j = 0; j <= n; ++j) {
        std::vector<SimplexRef> fits;
        for (const auto& cand : below) {
          bool ok = true;
          for (int i = 0; i < j && ok && n >= 2; ++i) ok = x.face(cand, i) == x.face(faces[static_cast<std::size_t>(i)], j - 1);
          if (ok) fits.push_back(cand);
        }
        if (fits.empty()) break;
        faces.push_back(fits[static_cast<std::size_t>(pick(rng, fits.size()))]);
      }
      if (static_cast<int>(faces.size()) != n + 1) continue;
      x.add_simplex("s" + std::to_string(n) + "_" + std::to_string(made++), n, std::move(faces));
    }
  }
  return x;
}

DegeneracyWord random_word(std::mt19937& rng, int d, int length) {
  DegeneracyWord w;
  w.indices.resize(static_cast<std::size_t>(length));
  // s_{j1} ... s_{jk}: the rightmost letter acts first, on dimension d.
  int cur = d;
  for (int t = length - 1; t >= 0; --t) {
    w.indices[static_cast<std::size_t>(t)] = pick(rng, static_cast<std::size_t>(cur) + 1);
    ++cur;
  }
  return w;
}

std::vector<InjectivityInstance> random_injectivity_instances(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  std::vector<InjectivityInstance> out;
  for (int trial = 0; static_cast<int>(out.size()) < count; ++trial) {
    if (trial > 100 * count) throw ConstructionError("random_injectivity_instances: too few usable squares");
    const int n = 1 + pick(rng, 3);
    const int i = pick(rng, static_cast<std::size_t>(n) + 1);
    const auto y = share(random_sset(rng, {3 + pick(rng, 3), n + pick(rng, 2), 6}, "Y" + std::to_string(trial)));

    // A: a few n-simplices of Y. X: Y without the cells, their i-th faces and
    // some random simplices of dimension >= n - 1, closed under cofaces.
    // Mostly non-degenerate cells with non-degenerate i-th face; any n-simplex
    // otherwise.
    const bool clean = rng() % 10 != 0;
    std::vector<SimplexRef> chosen;
    for (const auto& c : y->simplices_at(n)) {
      if (clean && (!c.nondegenerate() || !y->face(c, i).nondegenerate())) continue;
      if (chosen.size() < 3 && rng() % 2 == 0) chosen.push_back(c);
    }
    if (chosen.empty()) continue;
    std::vector<bool> keep(static_cast<std::size_t>(y->size()), true);
    const std::size_t spared = rng() % 10 == 0 ? static_cast<std::size_t>(pick(rng, chosen.size())) : chosen.size();
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      const auto& c = chosen[k];
      if (c.nondegenerate()) keep[static_cast<std::size_t>(c.base)] = false;
      const auto f = y->face(c, i);
      if (f.nondegenerate() && k != spared) keep[static_cast<std::size_t>(f.base)] = false;
    }
    for (int id = 0; id < y->size(); ++id) {
      const auto& s = y->simplex(id);
      if (s.dim >= n - 1 && rng() % 8 == 0) keep[static_cast<std::size_t>(id)] = false;
      for (const auto& f : s.faces)
        if (!keep[static_cast<std::size_t>(f.base)]) keep[static_cast<std::size_t>(id)] = false;
    }
    const auto x = subcomplex(y, keep, "X" + std::to_string(trial));

    const auto hn = horn(n, i);
    InjectivitySquare sq;
    sq.f = x.inclusion;
    sq.n = n;
    sq.i = i;
    for (const auto& cell : chosen) {
      const auto in_y = classify(hn, y, cell);
      std::vector<SimplexRef> images;
      bool lands = true;
      for (const auto& r : in_y.images()) {
        const int b = x.to_sub[static_cast<std::size_t>(r.base)];
        if (b < 0) {
          lands = false;
          break;
        }
        images.push_back({b, r.dim, r.degen});
      }
      if (!lands) continue;
      sq.cells.push_back(cell);
      sq.top.emplace_back(hn, x.set, std::move(images));
    }
    if (sq.cells.empty()) continue;
    out.push_back({"random#" + std::to_string(trial) + " n=" + std::to_string(n) + " i=" + std::to_string(i) + " |A|=" +
                       std::to_string(sq.cells.size()),
                   std::move(sq)});
  }
  return out;
}

InjectivityInstance overlapping_instance() {
  const auto y = delta(2);
  const auto x = boundary(2);
  const auto hn = horn(2, 1);
  return {"overlap dDelta2 in Delta2", {map_by_names(x, y), 2, 1, {y->ref(y->require("012"))}, {map_by_names(hn, x)}}};
}

std::vector<MarkedCategory> builtin_marked_corpus() {
  std::vector<MarkedCategory> out;
  for (const auto& nc : small_generator_corpus())
    for (int x = 0; x < nc.category.object_count(); ++x) {
      out.push_back({nc.category, x});
      out.back().c.set_name(nc.name);
    }
  return out;
}

DegeneracyWord rewrite_to_normal(DegeneracyWord w, bool leftmost) {
  auto& v = w.indices;
  while (true) {
    int hit = -1;
    for (std::size_t t = 0; t + 1 < v.size(); ++t) {
      const std::size_t p = leftmost ? t : v.size() - 2 - t;
      if (v[p] <= v[p + 1]) {
        hit = static_cast<int>(p);
        break;
      }
    }
    if (hit < 0) return w;
    const auto h = static_cast<std::size_t>(hit);
    const int a = v[h], b = v[h + 1];
    v[h] = b + 1;
    v[h + 1] = a;
  }
}

}  // namespace sct

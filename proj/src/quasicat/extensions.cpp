#include <algorithm>
#include <sstream>

#include "sct/error.hpp"
#include "sct/quasicat.hpp"

namespace sct {

void LevelIndex::build(int n) {
  if (levels_.empty()) {
    levels_.resize(kMaxDim + 1);
    by_faces_.resize(kMaxDim + 1);
    built_.assign(kMaxDim + 1, false);
  }
  if (built_[static_cast<std::size_t>(n)]) return;
  auto& level = levels_[static_cast<std::size_t>(n)];
  level = x_->simplices_at(n);
  if (n > 0) {
    auto& idx = by_faces_[static_cast<std::size_t>(n)];
    std::vector<SimplexRef> faces(static_cast<std::size_t>(n) + 1);
    for (const auto& r : level) {
      for (int k = 0; k <= n; ++k) faces[static_cast<std::size_t>(k)] = x_->face(r, k);
      idx[faces].push_back(r);
    }
  }
  built_[static_cast<std::size_t>(n)] = true;
}

const std::vector<SimplexRef>& LevelIndex::level(int n) {
  build(n);
  return levels_[static_cast<std::size_t>(n)];
}

const std::vector<SimplexRef>& LevelIndex::with_faces(int n, const std::vector<SimplexRef>& faces) {
  static const std::vector<SimplexRef> none;
  build(n);
  const auto& idx = by_faces_[static_cast<std::size_t>(n)];
  auto it = idx.find(faces);
  return it == idx.end() ? none : it->second;
}

std::size_t for_each_extension(const ExtensionProblem& p, LevelIndex& index,
                               const std::function<bool(const std::vector<SimplexRef>&)>& visit) {
  const SimplicialSet& a = p.inclusion.source();
  const SimplicialSet& b = p.inclusion.target();
  const SimplicialSet& x = p.partial.target();
  if (&index.set() != &x) throw ParameterError("extension: index built for a different target");
  if (p.partial.source_ptr().get() != p.inclusion.source_ptr().get() && p.partial.source().size() != a.size())
    throw ParameterError("extension: inclusion and partial map have different sources");

  std::vector<SimplexRef> img(static_cast<std::size_t>(b.size()));
  std::vector<bool> fixed(static_cast<std::size_t>(b.size()), false);
  for (int id = 0; id < a.size(); ++id) {
    const SimplexRef& t = p.inclusion.image(id);
    if (!t.nondegenerate() || fixed[static_cast<std::size_t>(t.base)])
      throw ParameterError("extension: the inclusion is not injective on non-degenerate simplices");
    fixed[static_cast<std::size_t>(t.base)] = true;
    img[static_cast<std::size_t>(t.base)] = p.partial.image(id);
  }
  std::vector<int> free;
  for (int id = 0; id < b.size(); ++id)
    if (!fixed[static_cast<std::size_t>(id)]) free.push_back(id);
  std::stable_sort(free.begin(), free.end(),
                   [&](int u, int v) { return b.simplex(u).dim < b.simplex(v).dim; });
  for (int id : free) {
    if (b.simplex(id).dim > x.level_limit())
      throw TruncationError("extension: source dimension exceeds the target cap");
    index.level(b.simplex(id).dim);
  }

  std::size_t found = 0;
  if (free.empty()) {
    ++found;
    visit(img);
    return found;
  }
  std::vector<const std::vector<SimplexRef>*> cands(free.size());
  std::vector<std::size_t> pos(free.size(), 0);
  std::vector<SimplexRef> faces;
  auto enter = [&](std::size_t d) {
    const auto& s = b.simplex(free[d]);
    pos[d] = 0;
    if (s.dim == 0) {
      cands[d] = &index.level(0);
      return;
    }
    faces.resize(s.faces.size());
    for (std::size_t k = 0; k < s.faces.size(); ++k) {
      const SimplexRef& f = s.faces[k];
      faces[k] = x.degenerate(img[static_cast<std::size_t>(f.base)], f.degen, f.dim);
    }
    cands[d] = &index.with_faces(s.dim, faces);
  };
  std::size_t depth = 0;
  enter(0);
  while (true) {
    if (pos[depth] < cands[depth]->size()) {
      img[static_cast<std::size_t>(free[depth])] = (*cands[depth])[pos[depth]++];
      if (depth + 1 == free.size()) {
        ++found;
        if (!visit(img)) return found;
        continue;
      }
      enter(++depth);
      continue;
    }
    if (depth == 0) return found;
    --depth;
  }
}

std::size_t for_each_map(const SSetPtr& b, LevelIndex& index,
                         const std::function<bool(const std::vector<SimplexRef>&)>& visit) {
  const SSetPtr none = empty_sset();
  const SSetPtr x(std::shared_ptr<const SimplicialSet>{}, &index.set());
  ExtensionProblem p{SimplicialMap(none, b, {}), SimplicialMap(none, x, {})};
  return for_each_extension(p, index, visit);
}

std::vector<SimplicialMap> enumerate_extensions(const ExtensionProblem& p, std::size_t limit) {
  LevelIndex index(p.partial.target());
  std::vector<SimplicialMap> out;
  if (limit == 0) return out;
  for_each_extension(p, index, [&](const std::vector<SimplexRef>& img) {
    out.emplace_back(p.inclusion.target_ptr(), p.partial.target_ptr(), img);
    return out.size() < limit;
  });
  return out;
}

std::string describe_horn_map(const SimplicialSet& x, int n, int i, const std::vector<SimplexRef>& images) {
  const auto h = make_standard(StandardKind::horn, n, i);
  std::ostringstream os;
  os << "Lambda^" << n << "_" << i << " ->";
  bool first = true;
  for (int k = 0; k <= n; ++k) {
    if (k == i) continue;
    std::string face;
    for (int v = 0; v <= n; ++v)
      if (v != k) face += (n > 9 && !face.empty() ? "," : "") + std::to_string(v);
    os << (first ? " " : ", ") << "d" << k << "=" << x.label(images[static_cast<std::size_t>(h.require(face))]);
    first = false;
  }
  return os.str();
}

QuasiReport is_quasicategory(const SimplicialSet& x, int dim_check, std::size_t max_witnesses) {
  if (dim_check > x.level_limit())
    throw TruncationError("is_quasicategory: dimension " + std::to_string(dim_check) + " exceeds dim_cap " +
                          std::to_string(x.dim_cap()) + " of " + x.name());
  QuasiReport rep;
  LevelIndex index(x);
  const SSetPtr xp(std::shared_ptr<const SimplicialSet>{}, &x);
  for (int n = 2; n <= dim_check; ++n) {
    const SSetPtr d = delta(n);
    for (int i = 1; i < n; ++i) {
      const SSetPtr h = horn(n, i);
      const SimplicialMap incl = map_by_names(h, d);
      HornCount count{n, i, 0, 0, 0};
      for_each_map(h, index, [&](const std::vector<SimplexRef>& images) {
        ++count.horn_maps;
        const ExtensionProblem p{incl, SimplicialMap(h, xp, images)};
        std::size_t fillers = 0;
        for_each_extension(p, index, [&](const std::vector<SimplexRef>&) { return ++fillers < 2; });
        if (fillers == 0) {
          ++count.unfilled;
          if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back(describe_horn_map(x, n, i, images));
        } else if (fillers > 1) {
          ++count.multiply_filled;
        }
        return true;
      });
      rep.ok = rep.ok && count.unfilled == 0;
      rep.unique_fillers = rep.unique_fillers && count.unfilled == 0 && count.multiply_filled == 0;
      rep.counts.push_back(count);
    }
  }
  return rep;
}

}  // namespace sct

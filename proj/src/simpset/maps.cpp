#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "sct/error.hpp"
#include "sct/simpset.hpp"
#include "sct/union_find.hpp"

namespace sct {

SimplicialMap::SimplicialMap(SSetPtr source, SSetPtr target, std::vector<SimplexRef> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw ParameterError("map needs a source and a target");
  if (static_cast<int>(images_.size()) != source_->size())
    throw ParameterError("map from " + source_->name() + " needs one image per non-degenerate simplex");
}

SimplicialMap SimplicialMap::identity(const SSetPtr& x) {
  std::vector<SimplexRef> images;
  images.reserve(static_cast<std::size_t>(x->size()));
  for (int id = 0; id < x->size(); ++id) images.push_back(x->ref(id));
  return SimplicialMap(x, x, std::move(images));
}

SimplexRef SimplicialMap::operator()(const SimplexRef& r) const {
  const SimplexRef& img = images_.at(static_cast<std::size_t>(r.base));
  if (r.nondegenerate()) return img;
  return target_->degenerate(img, r.degen, r.dim);
}

std::optional<std::string> SimplicialMap::check() const {
  const SimplicialSet& src = *source_;
  const SimplicialSet& tgt = *target_;
  for (int id = 0; id < src.size(); ++id) {
    const auto& s = src.simplex(id);
    const SimplexRef& img = images_[static_cast<std::size_t>(id)];
    if (img.base < 0 || img.base >= tgt.size() || img.dim != s.dim ||
        img.base_dim() != tgt.simplex(img.base).dim)
      return "image of '" + s.name + "' is not a " + std::to_string(s.dim) + "-simplex of " + tgt.name();
    for (int k = 0; k < static_cast<int>(s.faces.size()); ++k) {
      if ((*this)(s.faces[static_cast<std::size_t>(k)]) != tgt.face(img, k)) {
        std::ostringstream os;
        os << "map does not commute with d" << k << " on '" << s.name << "'";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

void SimplicialMap::validate() const {
  if (auto err = check()) throw ValidationError(*err);
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target_ptr().get() != g.source_ptr().get() && f.target().size() != g.source().size())
    throw ParameterError("compose: target of f is not the source of g");
  std::vector<SimplexRef> images;
  images.reserve(f.images().size());
  for (const auto& r : f.images()) images.push_back(g(r));
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(images));
}

namespace {

int shared_level(const SimplicialMap& f, int max_level) {
  int limit = std::min(f.source().level_limit(), f.target().level_limit());
  if (limit == kMaxDim) limit = std::max(f.source().dim_cap(), f.target().dim_cap());
  if (max_level >= 0) limit = std::min(limit, max_level);
  return limit;
}

}  // namespace

InjectivityVerdict is_levelwise_injective(const SimplicialMap& f, int max_level) {
  const int top = shared_level(f, max_level);
  for (int n = 0; n <= top; ++n) {
    std::unordered_map<SimplexRef, SimplexRef, SimplexRefHash> seen;
    for (const auto& r : f.source().simplices_at(n)) {
      auto [it, fresh] = seen.emplace(f(r), r);
      if (!fresh) return {false, n, it->second, r};
    }
  }
  return {};
}

bool is_levelwise_bijective(const SimplicialMap& f, int max_level) {
  const int top = shared_level(f, max_level);
  for (int n = 0; n <= top; ++n)
    if (f.source().count_at(n) != f.target().count_at(n)) return false;
  return is_levelwise_injective(f, top).injective;
}

std::vector<int> component_index(const SimplicialSet& x) {
  UnionFind uf(x.size());
  for (int e : x.nondeg_at(1)) {
    const auto& s = x.simplex(e);
    uf.unite(s.faces[0].base, s.faces[1].base);
  }
  std::vector<int> out(static_cast<std::size_t>(x.size()), -1);
  std::unordered_map<int, int> index;
  for (int v : x.nondeg_at(0)) {
    auto [it, fresh] = index.emplace(uf.find(v), static_cast<int>(index.size()));
    out[static_cast<std::size_t>(v)] = it->second;
  }
  return out;
}

std::vector<int> components(const SimplicialSet& x) {
  std::vector<int> reps;
  const auto idx = component_index(x);
  for (int v : x.nondeg_at(0))
    if (idx[static_cast<std::size_t>(v)] == static_cast<int>(reps.size())) reps.push_back(v);
  return reps;
}

}  // namespace sct

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "sct/error.hpp"
#include "sct/fincat.hpp"

namespace sct {

void FinCategory::grow() {
  const std::size_t n = morphisms_.size();
  if (n <= stride_) return;
  std::size_t next = std::max<std::size_t>(8, stride_ * 2);
  while (next < n) next *= 2;
  std::vector<int> table(next * next, -1);
  for (std::size_t g = 0; g < stride_; ++g)
    for (std::size_t f = 0; f < stride_; ++f) table[g * next + f] = table_[g * stride_ + f];
  std::unordered_map<std::size_t, std::string> tags;
  for (auto& [key, tag] : tags_) tags.emplace((key / stride_) * next + key % stride_, std::move(tag));
  stride_ = next;
  table_ = std::move(table);
  tags_ = std::move(tags);
}

int FinCategory::add_object(std::string name) {
  if (object_index_.count(name)) throw ParameterError("duplicate object '" + name + "'");
  const int o = object_count();
  objects_.push_back(name);
  object_index_.emplace(name, o);
  identities_.push_back(-1);
  const int id = add_morphism("id:" + name, o, o);
  identities_[static_cast<std::size_t>(o)] = id;
  table_[static_cast<std::size_t>(id) * stride_ + static_cast<std::size_t>(id)] = id;
  return o;
}

int FinCategory::add_morphism(std::string name, int src, int dst) {
  if (src < 0 || src >= object_count() || dst < 0 || dst >= object_count())
    throw ParameterError("morphism '" + name + "' has an unknown endpoint");
  if (morphism_index_.count(name)) throw ParameterError("duplicate morphism '" + name + "'");
  const int m = morphism_count();
  morphisms_.push_back({name, src, dst});
  morphism_index_.emplace(std::move(name), m);
  grow();
  const int is = identities_[static_cast<std::size_t>(src)];
  const int id = identities_[static_cast<std::size_t>(dst)];
  if (is >= 0) table_[static_cast<std::size_t>(m) * stride_ + static_cast<std::size_t>(is)] = m;
  if (id >= 0) table_[static_cast<std::size_t>(id) * stride_ + static_cast<std::size_t>(m)] = m;
  return m;
}

void FinCategory::set_comp(int g, int f, int h, std::string tag) {
  if (g < 0 || g >= morphism_count() || f < 0 || f >= morphism_count() || h < 0 || h >= morphism_count())
    throw ParameterError("set_comp: unknown morphism");
  const auto& mg = morphisms_[static_cast<std::size_t>(g)];
  const auto& mf = morphisms_[static_cast<std::size_t>(f)];
  const auto& mh = morphisms_[static_cast<std::size_t>(h)];
  if (mf.dst != mg.src)
    throw ParameterError("set_comp: " + mg.name + " o " + mf.name + " is not composable");
  if (mh.src != mf.src || mh.dst != mg.dst)
    throw ParameterError("set_comp: " + mh.name + " has the wrong endpoints for " + mg.name + " o " + mf.name);
  const std::size_t key = static_cast<std::size_t>(g) * stride_ + static_cast<std::size_t>(f);
  table_[key] = h;
  if (tag.empty()) tags_.erase(key);
  else tags_[key] = std::move(tag);
}

bool FinCategory::is_identity(int m) const {
  const auto& mm = morphism(m);
  return identities_[static_cast<std::size_t>(mm.src)] == m;
}

std::optional<int> FinCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCategory::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

int FinCategory::require_object(std::string_view name) const {
  auto o = find_object(name);
  if (!o) throw ParameterError("unknown object '" + std::string(name) + "' in " + name_);
  return *o;
}

int FinCategory::require_morphism(std::string_view name) const {
  auto m = find_morphism(name);
  if (!m) throw ParameterError("unknown morphism '" + std::string(name) + "' in " + name_);
  return *m;
}

int FinCategory::compose(int g, int f) const {
  if (morphism(f).dst != morphism(g).src)
    throw ValidationError(morphism(g).name + " o " + morphism(f).name + " is not composable");
  const int h = comp(g, f);
  if (h < 0) throw ValidationError("composite " + morphism(g).name + " o " + morphism(f).name + " is undefined");
  return h;
}

const std::string& FinCategory::tag(int g, int f) const {
  static const std::string none;
  auto it = tags_.find(static_cast<std::size_t>(g) * stride_ + static_cast<std::size_t>(f));
  return it == tags_.end() ? none : it->second;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (morphisms_[static_cast<std::size_t>(m)].src == a && morphisms_[static_cast<std::size_t>(m)].dst == b)
      out.push_back(m);
  return out;
}

CategoryVerdict validate_category(const FinCategory& c) {
  const int nm = c.morphism_count();
  auto nm_of = [&](int m) { return c.morphism(m).name; };
  for (int o = 0; o < c.object_count(); ++o) {
    const int id = c.identity(o);
    if (id < 0 || c.morphism(id).src != o || c.morphism(id).dst != o)
      return {false, "object " + c.object(o) + " lacks an identity"};
  }
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      const int h = c.comp(g, f);
      const bool composable = c.morphism(f).dst == c.morphism(g).src;
      if (composable && h < 0) return {false, "composition undefined for (" + nm_of(g) + ", " + nm_of(f) + ")"};
      if (!composable && h >= 0)
        return {false, "composite set for non-composable pair (" + nm_of(g) + ", " + nm_of(f) + ")"};
      if (composable && (c.morphism(h).src != c.morphism(f).src || c.morphism(h).dst != c.morphism(g).dst))
        return {false, nm_of(g) + " o " + nm_of(f) + " = " + nm_of(h) + " has wrong endpoints"};
    }
  }
  for (int f = 0; f < nm; ++f) {
    const auto& m = c.morphism(f);
    if (c.comp(c.identity(m.dst), f) != f || c.comp(f, c.identity(m.src)) != f)
      return {false, "unit law fails for " + nm_of(f)};
  }
  for (int f = 0; f < nm; ++f) {
    for (int g = 0; g < nm; ++g) {
      if (c.morphism(f).dst != c.morphism(g).src) continue;
      const int gf = c.comp(g, f);
      for (int h = 0; h < nm; ++h) {
        if (c.morphism(g).dst != c.morphism(h).src) continue;
        const int lhs = c.comp(h, gf);
        const int rhs = c.comp(c.comp(h, g), f);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails for (" << nm_of(h) << ", " << nm_of(g) << ", " << nm_of(f) << "): ("
             << nm_of(h) << " o " << nm_of(g) << ") o " << nm_of(f) << " = " << nm_of(rhs) << " but " << nm_of(h)
             << " o (" << nm_of(g) << " o " << nm_of(f) << ") = " << nm_of(lhs);
          return {false, os.str()};
        }
      }
    }
  }
  return {};
}

void Poset::validate() const {
  const int n = size();
  if (static_cast<int>(leq.size()) != n) throw ValidationError("poset relation has the wrong size");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) throw ValidationError("poset relation has the wrong size");
  auto at = [&](int i, int j) { return leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i) {
    if (!at(i, i)) throw ValidationError("poset relation is not reflexive at " + elements[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (i != j && at(i, j) && at(j, i))
        throw ValidationError("poset relation is not antisymmetric at " + elements[static_cast<std::size_t>(i)]);
      for (int k = 0; k < n; ++k)
        if (at(i, j) && at(j, k) && !at(i, k))
          throw ValidationError("poset relation is not transitive at " + elements[static_cast<std::size_t>(i)]);
    }
  }
}

Poset chain_poset(int n) {
  Poset p;
  for (int i = 0; i < n; ++i) p.elements.push_back(std::to_string(i));
  p.leq.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  return p;
}

Poset discrete_poset(int n) {
  Poset p;
  for (int i = 0; i < n; ++i) p.elements.push_back(std::to_string(i));
  p.leq.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) p.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  return p;
}

std::vector<Poset> posets_up_to_isomorphism(int n) {
  if (n < 0 || n > 7) throw ParameterError("posets_up_to_isomorphism: n must be in 0..7");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::set<std::vector<bool>> seen;
  std::vector<Poset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    Poset p = discrete_poset(n);
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (bits >> t & 1) p.leq[static_cast<std::size_t>(pairs[t].first)][static_cast<std::size_t>(pairs[t].second)] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n && transitive; ++k)
          transitive = !(p.less(i, j) && p.less(j, k)) || p.less(i, k);
    if (!transitive) continue;
    // Canonical form: the least relation matrix over all relabellings.
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> m;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.push_back(p.leq[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
      if (best.empty() || m < best) best = std::move(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(std::move(p));
  }
  return out;
}

FinCategory poset_category(const Poset& p) {
  p.validate();
  FinCategory c("poset");
  for (const auto& e : p.elements) c.add_object(e);
  const int n = p.size();
  std::vector<std::vector<int>> arrow(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < n; ++i) {
    arrow[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = c.identity(i);
    for (int j = 0; j < n; ++j)
      if (p.less(i, j))
        arrow[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            c.add_morphism("b(" + p.elements[static_cast<std::size_t>(i)] + "," + p.elements[static_cast<std::size_t>(j)] + ")", i, j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (p.less(i, j) && p.less(j, k))
          c.set_comp(arrow[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)],
                     arrow[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     arrow[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  return c;
}

bool is_functor(const FinCategory& c, const FinCategory& d, const Functor& f) {
  if (static_cast<int>(f.objects.size()) != c.object_count() || static_cast<int>(f.morphisms.size()) != c.morphism_count())
    return false;
  for (int o = 0; o < c.object_count(); ++o)
    if (f.morphisms[static_cast<std::size_t>(c.identity(o))] != d.identity(f.objects[static_cast<std::size_t>(o)])) return false;
  for (int m = 0; m < c.morphism_count(); ++m) {
    const auto& mm = c.morphism(m);
    const auto& im = d.morphism(f.morphisms[static_cast<std::size_t>(m)]);
    if (im.src != f.objects[static_cast<std::size_t>(mm.src)] || im.dst != f.objects[static_cast<std::size_t>(mm.dst)]) return false;
  }
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int h = 0; h < c.morphism_count(); ++h) {
      if (c.morphism(h).dst != c.morphism(g).src) continue;
      if (d.comp(f.morphisms[static_cast<std::size_t>(g)], f.morphisms[static_cast<std::size_t>(h)]) !=
          f.morphisms[static_cast<std::size_t>(c.comp(g, h))])
        return false;
    }
  return true;
}

}  // namespace sct

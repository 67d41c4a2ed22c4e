#include <algorithm>
#include <unordered_map>

#include "sct/error.hpp"
#include "sct/simpset.hpp"

namespace sct {

namespace {

std::string subset_name(std::uint32_t subset, int n) {
  std::string out;
  for (int v = 0; v <= n; ++v) {
    if (!((subset >> v) & 1u)) continue;
    if (n > 9 && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

SimplicialSet make_standard(StandardKind kind, int n, int horn_index) {
  if (n < 0 || n > 20) throw ParameterError("standard simplex dimension out of range");
  std::string name;
  switch (kind) {
    case StandardKind::delta:
      name = "Delta" + std::to_string(n);
      break;
    case StandardKind::horn:
      if (n < 1 || horn_index < 0 || horn_index > n)
        throw ParameterError("horn Lambda^" + std::to_string(n) + "_" + std::to_string(horn_index) +
                             " is undefined");
      name = "Lambda" + std::to_string(n) + "_" + std::to_string(horn_index);
      break;
    case StandardKind::boundary:
      if (n < 1) throw ParameterError("boundary needs n >= 1");
      name = "dDelta" + std::to_string(n);
      break;
  }
  const std::uint32_t full = (n >= 31) ? ~0u : ((1u << (n + 1)) - 1u);
  auto admitted = [&](std::uint32_t s) {
    if (kind == StandardKind::delta) return true;
    if (s == full) return false;
    if (kind == StandardKind::horn && s == (full & ~(1u << horn_index))) return false;
    return true;
  };
  std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(n) + 2);
  for (std::uint32_t s = 1; s <= full; ++s)
    by_size[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);

  SimplicialSet x(name, n);
  std::unordered_map<std::uint32_t, int> id_of;
  for (int k = 1; k <= n + 1; ++k) {
    auto& subsets = by_size[static_cast<std::size_t>(k)];
    // lexicographic order of vertex lists
    std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
      while (a && b) {
        int la = __builtin_ctz(a), lb = __builtin_ctz(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
      }
      return a == 0 && b != 0;
    });
    for (std::uint32_t s : subsets) {
      if (!admitted(s)) continue;
      std::vector<SimplexRef> faces;
      if (k > 1) {
        std::uint32_t rest = s;
        while (rest) {
          const std::uint32_t bit = rest & (~rest + 1);
          rest &= rest - 1;
          faces.push_back(x.ref(id_of.at(s & ~bit)));
        }
      }
      id_of[s] = x.add_simplex(subset_name(s, n), k - 1, std::move(faces));
    }
  }
  return x;
}

SSetPtr empty_sset(int dim_cap) { return share(SimplicialSet("empty", dim_cap)); }

SimplicialMap classify(const SSetPtr& standard_sub, const SSetPtr& target, const SimplexRef& top) {
  std::vector<SimplexRef> images;
  images.reserve(static_cast<std::size_t>(standard_sub->size()));
  for (int id = 0; id < standard_sub->size(); ++id) {
    std::vector<int> theta;
    for (int v : standard_sub->vertices(standard_sub->ref(id)))
      theta.push_back(std::stoi(standard_sub->simplex(v).name));
    images.push_back(target->apply(top, theta));
  }
  return SimplicialMap(standard_sub, target, std::move(images));
}

SimplicialMap map_by_names(const SSetPtr& source, const SSetPtr& target) {
  std::vector<SimplexRef> images;
  images.reserve(static_cast<std::size_t>(source->size()));
  for (int id = 0; id < source->size(); ++id) images.push_back(target->ref(target->require(source->simplex(id).name)));
  return SimplicialMap(source, target, std::move(images));
}

SimplicialSet with_cap(const SimplicialSet& x, int cap) {
  if (cap > x.dim_cap() && x.truncated())
    throw TruncationError("cannot raise the cap of truncated " + x.name());
  SimplicialSet out(x.name(), cap);
  bool dropped = false;
  std::vector<int> remap(static_cast<std::size_t>(x.size()), -1);
  for (int id = 0; id < x.size(); ++id) {
    const auto& s = x.simplex(id);
    if (s.dim > cap) {
      dropped = true;
      continue;
    }
    std::vector<SimplexRef> faces = s.faces;
    for (auto& f : faces) f.base = remap[static_cast<std::size_t>(f.base)];
    remap[static_cast<std::size_t>(id)] = out.add_simplex(s.name, s.dim, std::move(faces));
  }
  out.set_truncated(x.truncated() || dropped);
  return out;
}

Subcomplex subcomplex(const SSetPtr& x, const std::vector<bool>& keep, std::string name) {
  if (static_cast<int>(keep.size()) != x->size()) throw ParameterError("subcomplex: mask size mismatch");
  SimplicialSet sub(name.empty() ? x->name() + "_sub" : std::move(name), x->dim_cap());
  sub.set_truncated(x->truncated());
  std::vector<int> to_sub(static_cast<std::size_t>(x->size()), -1);
  std::vector<SimplexRef> images;
  for (int id = 0; id < x->size(); ++id) {
    if (!keep[static_cast<std::size_t>(id)]) continue;
    const auto& s = x->simplex(id);
    std::vector<SimplexRef> faces = s.faces;
    for (auto& f : faces) {
      const int b = to_sub[static_cast<std::size_t>(f.base)];
      if (b < 0) throw ValidationError("subcomplex is not closed under faces at '" + s.name + "'");
      f.base = b;
    }
    to_sub[static_cast<std::size_t>(id)] = sub.add_simplex(s.name, s.dim, std::move(faces));
    images.push_back(x->ref(id));
  }
  auto ptr = share(std::move(sub));
  return {ptr, SimplicialMap(ptr, x, std::move(images)), std::move(to_sub)};
}

Coproduct coproduct(const std::vector<SSetPtr>& parts, const std::vector<std::string>& tags, std::string name) {
  if (tags.size() != parts.size()) throw ParameterError("coproduct: one tag per summand");
  int cap = 0;
  int truncated_cap = kMaxDim;
  bool truncated = false;
  for (const auto& p : parts) {
    cap = std::max(cap, p->dim_cap());
    if (p->truncated()) {
      truncated = true;
      truncated_cap = std::min(truncated_cap, p->dim_cap());
    }
  }
  if (truncated) {
    for (const auto& p : parts)
      if (p->top_dim() > truncated_cap)
        throw TruncationError("coproduct: summand " + p->name() + " exceeds the common cap");
    cap = truncated_cap;
  }
  SimplicialSet out(std::move(name), cap);
  out.set_truncated(truncated);
  Coproduct c;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const int offset = out.size();
    c.offsets.push_back(offset);
    const auto& x = *parts[p];
    for (int id = 0; id < x.size(); ++id) {
      const auto& s = x.simplex(id);
      std::vector<SimplexRef> faces = s.faces;
      for (auto& f : faces) f.base += offset;
      out.add_simplex(tags[p].empty() ? s.name : tags[p] + ":" + s.name, s.dim, std::move(faces));
    }
  }
  c.set = share(std::move(out));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<SimplexRef> images;
    for (int id = 0; id < parts[p]->size(); ++id) images.push_back(c.set->ref(id + c.offsets[p]));
    c.injections.emplace_back(parts[p], c.set, std::move(images));
  }
  return c;
}

SimplicialMap copair(const Coproduct& c, const std::vector<SimplicialMap>& legs, const SSetPtr& target) {
  if (legs.size() != c.injections.size()) throw ParameterError("copair: one leg per summand");
  std::vector<SimplexRef> images;
  images.reserve(static_cast<std::size_t>(c.set->size()));
  for (const auto& leg : legs)
    for (const auto& r : leg.images()) images.push_back(r);
  return SimplicialMap(c.set, target, std::move(images));
}

}  // namespace sct

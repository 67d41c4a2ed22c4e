#include <algorithm>
#include <map>
#include <unordered_map>

#include "sct/error.hpp"
#include "sct/simpset.hpp"

namespace sct {

namespace {

// Coface profile of each simplex: how often it occurs as the k-th face of a
// non-degenerate simplex of each dimension.
std::vector<std::map<std::pair<int, int>, int>> profiles(const SimplicialSet& x) {
  std::vector<std::map<std::pair<int, int>, int>> out(static_cast<std::size_t>(x.size()));
  for (int id = 0; id < x.size(); ++id) {
    const auto& s = x.simplex(id);
    for (int k = 0; k < static_cast<int>(s.faces.size()); ++k) {
      const auto& f = s.faces[static_cast<std::size_t>(k)];
      if (f.nondegenerate()) ++out[static_cast<std::size_t>(f.base)][{s.dim, k}];
    }
  }
  return out;
}

// Processing order: each simplex after its faces, vertices pulled in as late
// as possible so that simplices constrain the search early.
std::vector<int> search_order(const SimplicialSet& x) {
  std::vector<int> order;
  std::vector<bool> done(static_cast<std::size_t>(x.size()), false);
  std::vector<int> pending_vertices = x.nondeg_at(0);
  std::size_t next_vertex = 0;
  auto ready = [&](int id) {
    for (const auto& f : x.simplex(id).faces)
      if (!done[static_cast<std::size_t>(f.base)]) return false;
    return true;
  };
  while (static_cast<int>(order.size()) < x.size()) {
    bool progressed = false;
    for (int d = 1; d <= x.dim_cap() && !progressed; ++d) {
      for (int id : x.nondeg_at(d)) {
        if (!done[static_cast<std::size_t>(id)] && ready(id)) {
          order.push_back(id);
          done[static_cast<std::size_t>(id)] = true;
          progressed = true;
          break;
        }
      }
    }
    if (progressed) continue;
    // Prefer a vertex adjacent to something already placed.
    int pick = -1;
    for (int e : x.nondeg_at(1)) {
      const int u = x.simplex(e).faces[1].base, v = x.simplex(e).faces[0].base;
      if (done[static_cast<std::size_t>(u)] != done[static_cast<std::size_t>(v)]) {
        pick = done[static_cast<std::size_t>(u)] ? v : u;
        break;
      }
    }
    if (pick < 0) {
      while (done[static_cast<std::size_t>(pending_vertices[next_vertex])]) ++next_vertex;
      pick = pending_vertices[next_vertex];
    }
    order.push_back(pick);
    done[static_cast<std::size_t>(pick)] = true;
  }
  return order;
}

}  // namespace

std::optional<SimplicialMap> find_sset_isomorphism(const SSetPtr& xp, const SSetPtr& yp) {
  const SimplicialSet& x = *xp;
  const SimplicialSet& y = *yp;
  if (x.size() != y.size()) return std::nullopt;
  const int top = std::max(x.top_dim(), y.top_dim());
  for (int d = 0; d <= top; ++d)
    if (x.nondeg_at(d).size() != y.nondeg_at(d).size()) return std::nullopt;

  const auto px = profiles(x);
  const auto py = profiles(y);
  const auto order = search_order(x);

  // Candidates of a simplex of dim >= 1 are found through its face tuple.
  std::unordered_map<std::vector<SimplexRef>, std::vector<int>, RefVectorHash> by_faces;
  for (int id = 0; id < y.size(); ++id)
    if (y.simplex(id).dim > 0) by_faces[y.simplex(id).faces].push_back(id);

  std::vector<int> fwd(static_cast<std::size_t>(x.size()), -1), bwd(static_cast<std::size_t>(y.size()), -1);
  auto map_ref = [&](SimplexRef r) {
    r.base = fwd[static_cast<std::size_t>(r.base)];
    return r;
  };

  std::vector<std::vector<int>> cands(order.size());
  std::vector<std::size_t> pos(order.size(), 0);
  std::size_t depth = 0;
  auto fill = [&](std::size_t t) {
    const int id = order[t];
    const auto& s = x.simplex(id);
    cands[t].clear();
    pos[t] = 0;
    if (s.dim == 0) {
      for (int v : y.nondeg_at(0))
        if (bwd[static_cast<std::size_t>(v)] < 0 && px[static_cast<std::size_t>(id)] == py[static_cast<std::size_t>(v)])
          cands[t].push_back(v);
      return;
    }
    std::vector<SimplexRef> faces;
    for (const auto& f : s.faces) faces.push_back(map_ref(f));
    auto it = by_faces.find(faces);
    if (it == by_faces.end()) return;
    for (int v : it->second)
      if (bwd[static_cast<std::size_t>(v)] < 0 && px[static_cast<std::size_t>(id)] == py[static_cast<std::size_t>(v)])
        cands[t].push_back(v);
  };

  if (order.empty()) return SimplicialMap(xp, yp, {});
  fill(0);
  while (true) {
    const int id = order[depth];
    if (fwd[static_cast<std::size_t>(id)] >= 0) {
      bwd[static_cast<std::size_t>(fwd[static_cast<std::size_t>(id)])] = -1;
      fwd[static_cast<std::size_t>(id)] = -1;
    }
    if (pos[depth] < cands[depth].size()) {
      const int v = cands[depth][pos[depth]++];
      fwd[static_cast<std::size_t>(id)] = v;
      bwd[static_cast<std::size_t>(v)] = id;
      if (depth + 1 == order.size()) break;
      fill(++depth);
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
  }
  std::vector<SimplexRef> images;
  for (int id = 0; id < x.size(); ++id) images.push_back(y.ref(fwd[static_cast<std::size_t>(id)]));
  return SimplicialMap(xp, yp, std::move(images));
}

}  // namespace sct

#pragma once

// Builds a SimplicialSet from a level-wise description of its simplices.
//
// A model supplies, for each level n <= cap, the full set of n-simplices as
// hashable keys together with face and degeneracy operators on keys. An
// n-simplex e is degenerate iff s_k(d_k e) == e for some k < n; in that case
// its normal form is s_k applied to the normal form of d_k e. Otherwise it is
// stored as a new non-degenerate simplex.
//
//   struct Model {
//     using Key = ...;  using Hash = ...;
//     std::vector<Key> elements(int n);
//     Key face(int n, const Key& e, int k);        // level n -> n-1
//     Key degeneracy(int n, const Key& e, int k);  // level n -> n+1
//     std::string name(int n, const Key& e);
//   };

#include <string>
#include <unordered_map>
#include <vector>

#include "sct/error.hpp"
#include "sct/simpset.hpp"

namespace sct {

template <class Model>
struct Realized {
  using Key = typename Model::Key;
  using Hash = typename Model::Hash;

  SimplicialSet set;
  std::vector<std::unordered_map<Key, SimplexRef, Hash>> refs;  // per level
  std::vector<std::vector<Key>> nondeg_keys;                    // per level
  std::vector<Key> key_of;                                      // per simplex id

  const SimplexRef& at(int n, const Key& e) const {
    auto it = refs.at(static_cast<std::size_t>(n)).find(e);
    if (it == refs[static_cast<std::size_t>(n)].end())
      throw ConstructionError("level model: key missing at level " + std::to_string(n));
    return it->second;
  }
};

template <class Model>
Realized<Model> realize(Model& model, std::string name, int cap, bool truncated) {
  Realized<Model> out;
  out.set = SimplicialSet(std::move(name), cap);
  out.set.set_truncated(truncated);
  out.refs.resize(static_cast<std::size_t>(cap) + 1);
  out.nondeg_keys.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    auto& level = out.refs[static_cast<std::size_t>(n)];
    for (auto& e : model.elements(n)) {
      if (level.count(e)) continue;
      bool degenerate = false;
      std::vector<typename Model::Key> faces;
      if (n > 0) {
        faces.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) faces.push_back(model.face(n, e, k));
        for (int k = 0; k < n && !degenerate; ++k) {
          if (model.degeneracy(n - 1, faces[static_cast<std::size_t>(k)], k) == e) {
            level.emplace(e, out.set.degeneracy(out.at(n - 1, faces[static_cast<std::size_t>(k)]), k));
            degenerate = true;
          }
        }
      }
      if (degenerate) continue;
      std::vector<SimplexRef> face_refs;
      face_refs.reserve(faces.size());
      for (const auto& f : faces) face_refs.push_back(out.at(n - 1, f));
      int id = out.set.add_simplex(model.name(n, e), n, std::move(face_refs));
      level.emplace(e, out.set.ref(id));
      out.nondeg_keys[static_cast<std::size_t>(n)].push_back(e);
      out.key_of.push_back(e);
    }
  }
  return out;
}

}  // namespace sct

#pragma once

// Level model of D^infty. Keys are {-1, chain} for C_n and {l, chain} for
// the marked copy of C_l^x (chain = {x} when l = 0).

#include "sct/constructions.hpp"
#include "sct/level_model.hpp"
#include "sct/nerve_model.hpp"

namespace sct::detail {

struct DinftyModel {
  using Key = std::vector<int>;
  using Hash = IntVectorHash;
  NerveModel nerve;
  int x;

  std::vector<Key> elements(int n) const;
  Key face(int n, const Key& e, int k) const;
  Key degeneracy(int n, const Key& e, int k) const;
  std::string name(int n, const Key& e) const;
};

Realized<DinftyModel> realize_dinfty(const MarkedCategory& m, int dim_cap);

}  // namespace sct::detail

#pragma once

// Seeded generators for the property suites. Every generator draws from a
// std::mt19937 with raw modulo reduction, so a seed gives the same corpus on
// every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sct/constructions.hpp"
#include "sct/simpset.hpp"

namespace sct {

struct RandomSsetShape {
  int vertices = 4;
  int max_dim = 3;
  int attempts_per_level = 5;
};

/// Random simplicial set: vertices, then at each dimension a few simplices
/// whose faces are drawn from all (possibly degenerate) simplices one level
/// down, subject to the simplicial identities.
SimplicialSet random_sset(std::mt19937& rng, const RandomSsetShape& shape, const std::string& name = "R");

/// Random applicable degeneracy word of the given length on a d-simplex.
DegeneracyWord random_word(std::mt19937& rng, int d, int length);

struct InjectivityInstance {
  std::string name;
  InjectivitySquare square;
};

/// Squares with f : X -> Y a random subcomplex inclusion and cells drawn
/// from the n-simplices of Y whose i-th horn lands in X. X usually misses the
/// cells and their i-th faces; hypotheses hold in some instances and fail in
/// others.
std::vector<InjectivityInstance> random_injectivity_instances(std::uint32_t seed, int count);

/// Lambda^2_1 -> dDelta^2 -> Delta^2 with the cell 012: the horn already lies
/// in X, so hypothesis (3) fails and the pushout map is not injective.
InjectivityInstance overlapping_instance();

/// Every category of small_generator_corpus marked at each object.
std::vector<MarkedCategory> builtin_marked_corpus();

/// Rewrites adjacent s_i s_j (i <= j) to s_{j+1} s_i until strictly
/// decreasing, taking the leftmost or rightmost redex first.
DegeneracyWord rewrite_to_normal(DegeneracyWord w, bool leftmost);

}  // namespace sct

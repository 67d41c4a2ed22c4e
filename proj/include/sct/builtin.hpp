#pragma once

// Small categories used as fixtures and as the builtin verification corpus.

#include <string>
#include <vector>

#include "sct/fincat.hpp"

namespace sct {

FinCategory terminal_category();            // object x
FinCategory discrete_category(int n);       // objects a, b, c, ...
FinCategory arrow_category();               // f : a -> b
FinCategory idempotent_monoid();            // e o e = e on one object
FinCategory involution_monoid();            // t o t = id on one object
FinCategory parallel_pair();                // f, g : a -> b
FinCategory walking_isomorphism();          // f : a -> b, g : b -> a inverse

struct NamedCategory {
  std::string name;
  FinCategory category;
};

/// Every category with at most two objects and at most one non-identity
/// generator, with the one-object monoid on a generator taken to be the
/// idempotent one: terminal, discrete on two objects, the arrow, and {e = e o e}.
std::vector<NamedCategory> small_generator_corpus();

/// The corpus above plus the involution, the parallel pair and the walking
/// isomorphism.
std::vector<NamedCategory> extended_corpus();

}  // namespace sct

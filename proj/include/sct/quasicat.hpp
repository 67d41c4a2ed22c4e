#pragma once

// Extension problems, inner horn filling, the small-object-argument tower and
// Kan's Sd/Ex construction, all truncated at an explicit dimension.

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "sct/simpset.hpp"

namespace sct {

/// All simplices of each level of x, indexed by their face tuples. Levels are
/// built on first use.
class LevelIndex {
 public:
  explicit LevelIndex(const SimplicialSet& x) : x_(&x) {}
  const SimplicialSet& set() const { return *x_; }
  const std::vector<SimplexRef>& level(int n);
  /// Simplices of dimension n >= 1 with exactly these faces.
  const std::vector<SimplexRef>& with_faces(int n, const std::vector<SimplexRef>& faces);

 private:
  void build(int n);

  const SimplicialSet* x_;
  std::vector<std::vector<SimplexRef>> levels_;
  std::vector<std::unordered_map<std::vector<SimplexRef>, std::vector<SimplexRef>, RefVectorHash>> by_faces_;
  std::vector<bool> built_;
};

/// Extend `partial` : A -> X along the injective `inclusion` : A -> B.
struct ExtensionProblem {
  SimplicialMap inclusion;
  SimplicialMap partial;
};

/// Calls `visit` with the images of B's non-degenerate simplices for every
/// extension, in lexicographic order of candidate choices; stops early when
/// `visit` returns false. Returns the number of extensions visited.
std::size_t for_each_extension(const ExtensionProblem& p, LevelIndex& index,
                               const std::function<bool(const std::vector<SimplexRef>&)>& visit);

/// Same, for maps out of B with nothing prescribed.
std::size_t for_each_map(const SSetPtr& b, LevelIndex& index,
                         const std::function<bool(const std::vector<SimplexRef>&)>& visit);

std::vector<SimplicialMap> enumerate_extensions(const ExtensionProblem& p,
                                                std::size_t limit = std::numeric_limits<std::size_t>::max());

struct HornCount {
  int n = 0;
  int i = 0;
  std::size_t horn_maps = 0;
  std::size_t unfilled = 0;
  std::size_t multiply_filled = 0;
};

struct QuasiReport {
  bool ok = true;               // every inner horn has a filler
  bool unique_fillers = true;   // ... and exactly one
  std::vector<HornCount> counts;
  std::vector<std::string> witnesses;  // unfilled horn maps, first few
};

/// Checks every inner horn Lambda^n_i -> X for 2 <= n <= dim_check.
/// Requires dim_check <= the queryable levels of X (TruncationError otherwise).
QuasiReport is_quasicategory(const SimplicialSet& x, int dim_check, std::size_t max_witnesses = 5);

/// Describes a horn map "Lambda^n_i -> [y0, y1, ...]" by the images of its
/// non-degenerate faces.
std::string describe_horn_map(const SimplicialSet& x, int n, int i, const std::vector<SimplexRef>& images);

struct ReplacementTrace {
  std::vector<SSetPtr> stages;                 // E^0 = K (at the cap), E^1, ...
  std::vector<std::size_t> glued;              // horn maps glued to reach stage s+1
  std::vector<SimplicialMap> inclusions;       // E^s -> E^{s+1}
};

struct FibrantReplacement {
  SSetPtr result;
  SimplicialMap inclusion;  // E^0 (K at dim_cap) -> result
  ReplacementTrace trace;
};

/// Small-object-argument tower: each step glues a simplex along every inner
/// horn map into the previous stage, for horns of dimension <= dim_cap.
FibrantReplacement fibrant_replace(const SSetPtr& k, int steps, int dim_cap);

/// Nerve of the poset of non-empty subsets of {0..n}. Vertices are named by
/// subsets ("{0,2}"), simplices by chains ("{0}<{0,2}").
SimplicialSet sd_standard(int n);

struct ExResult {
  SSetPtr result;
  SimplicialMap last_vertex;  // X -> Ex(X)
  int valid_dim = 0;
};

/// Kan's Ex up to dim_cap: n-simplices are maps sd_standard(n) -> X.
ExResult ex(const SSetPtr& x, int dim_cap);

struct ExIterate {
  std::vector<SSetPtr> stages;  // X, Ex X, Ex^2 X, ...
  SimplicialMap comparison;     // X -> Ex^k X
};
ExIterate ex_iterate(const SSetPtr& x, int k, int dim_cap);

/// Number of connected components.
inline int pi0(const SimplicialSet& x) { return static_cast<int>(components(x).size()); }

}  // namespace sct

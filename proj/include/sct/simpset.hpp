#pragma once

// Dimension-truncated, finitely presented simplicial sets.
//
// A simplicial set is stored by its non-degenerate simplices; every other
// simplex is named by a SimplexRef = (non-degenerate base, degeneracy word)
// in Eilenberg-Zilber normal form. Internally the degeneracy word is held as
// the bitmask of its surjection [n] -> [d]: bit j is set iff j and j+1 have
// the same image. The normal word s_{j1}...s_{jk} (j1 > ... > jk) lists the
// set bits in decreasing order.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sct {

inline constexpr int kMaxDim = 30;

/// Degeneracy indices [j1,...,jk] denoting s_{j1} o ... o s_{jk}; the
/// rightmost operator is applied first.
struct DegeneracyWord {
  std::vector<int> indices;

  bool is_normal() const;  // strictly decreasing
  /// True iff the word can be applied step by step to a simplex of
  /// dimension `base_dim` (each index at most the current dimension).
  bool applicable(int base_dim) const;
  std::string str() const;  // "[1,0]"

  friend bool operator==(const DegeneracyWord&, const DegeneracyWord&) = default;
};

namespace degen {

inline std::uint32_t low_bits(int k) {
  return k >= 32 ? ~0u : ((1u << k) - 1u);
}
/// Mask after applying s_k to a simplex with surjection mask `m`.
std::uint32_t apply_degeneracy(std::uint32_t m, int k);
/// Deletes bit position p, shifting higher bits down.
std::uint32_t remove_bit(std::uint32_t m, int p);
/// Mask of outer o inner where inner: [n] -> [d] and outer: [d] -> [e].
std::uint32_t compose(std::uint32_t outer, std::uint32_t inner, int n);
/// phi(j) for the surjection encoded by m.
inline int image_of(std::uint32_t m, int j) {
  return j - __builtin_popcount(m & low_bits(j));
}
std::uint32_t from_word(const DegeneracyWord& w, int base_dim);
DegeneracyWord to_word(std::uint32_t m, int n);

}  // namespace degen

/// Canonical name of a (possibly degenerate) simplex.
struct SimplexRef {
  std::int32_t base = -1;
  std::int32_t dim = 0;
  std::uint32_t degen = 0;

  int base_dim() const { return dim - __builtin_popcount(degen); }
  bool nondegenerate() const { return degen == 0; }
  DegeneracyWord word() const { return degen::to_word(degen, dim); }

  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

struct SimplexRefHash {
  std::size_t operator()(const SimplexRef& r) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(r.base);
    h = h * 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(r.dim) << 40) ^ r.degen;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct RefVectorHash {
  std::size_t operator()(const std::vector<SimplexRef>& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& r : v) h = h * 1000003u ^ SimplexRefHash{}(r);
    return h;
  }
};

struct NondegSimplex {
  std::string name;
  int dim = 0;
  std::vector<SimplexRef> faces;  // dim + 1 entries when dim >= 1
};

/// A finitely presented simplicial set, authoritative up to dim_cap.
///
/// When `truncated()` is false the presentation is complete: there are no
/// non-degenerate simplices above dim_cap and every level may be queried.
/// When it is true, simplices above dim_cap were dropped and levels above
/// the cap are unavailable.
class SimplicialSet {
 public:
  SimplicialSet() = default;
  SimplicialSet(std::string name, int dim_cap);

  /// Adds a non-degenerate simplex; faces must have dimension dim - 1 and
  /// reference existing simplices. Returns its id.
  int add_simplex(std::string name, int dim, std::vector<SimplexRef> faces = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  int dim_cap() const { return dim_cap_; }
  bool truncated() const { return truncated_; }
  void set_truncated(bool t) { truncated_ = t; }
  /// Highest dimension that may be queried; unbounded when not truncated.
  int level_limit() const { return truncated_ ? dim_cap_ : kMaxDim; }
  /// Highest dimension carrying a non-degenerate simplex (-1 if empty).
  int top_dim() const;

  int size() const { return static_cast<int>(simplices_.size()); }
  const NondegSimplex& simplex(int id) const { return simplices_.at(static_cast<std::size_t>(id)); }
  const std::vector<int>& nondeg_at(int n) const;
  std::optional<int> find(std::string_view name) const;
  int require(std::string_view name) const;

  SimplexRef ref(int id) const { return {id, simplex(id).dim, 0}; }
  SimplexRef face(const SimplexRef& r, int k) const;
  SimplexRef degeneracy(const SimplexRef& r, int k) const;
  /// Applies the surjection `mask` : [n] -> [r.dim] to r.
  SimplexRef degenerate(const SimplexRef& r, std::uint32_t mask, int n) const;
  /// Applies a monotone map theta : [m] -> [r.dim] (theta[t] = image of t).
  SimplexRef apply(const SimplexRef& r, std::span<const int> theta) const;
  /// Id of the k-th vertex of r.
  int vertex(const SimplexRef& r, int k) const;
  std::vector<int> vertices(const SimplexRef& r) const;

  /// All simplices of dimension n, base-major then mask order.
  std::vector<SimplexRef> simplices_at(int n) const;
  std::size_t count_at(int n) const;
  std::vector<std::size_t> nondeg_counts() const;  // levels 0..dim_cap

  /// "name" for a non-degenerate simplex, "name^[j1,...]" otherwise.
  std::string label(const SimplexRef& r) const;

  /// Checks face dimensions and the simplicial identities d_i d_j = d_{j-1} d_i.
  void validate() const;

 private:
  void check_ref(const SimplexRef& r) const;

  std::string name_;
  int dim_cap_ = 0;
  bool truncated_ = false;
  std::vector<NondegSimplex> simplices_;
  std::vector<std::vector<int>> by_dim_;
  std::unordered_map<std::string, int> index_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

inline SSetPtr share(SimplicialSet x) {
  return std::make_shared<const SimplicialSet>(std::move(x));
}

/// Canonical normal form of word applied to the non-degenerate simplex `base`.
/// Throws DimensionError when the word is inapplicable.
SimplexRef normalize(const SimplicialSet& x, int base, const DegeneracyWord& word);

enum class OperatorKind { face, degeneracy };
SimplexRef apply_operator(const SimplicialSet& x, const SimplexRef& r, OperatorKind op, int k);

/// A map of simplicial sets, given on non-degenerate source simplices.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(SSetPtr source, SSetPtr target, std::vector<SimplexRef> images);
  static SimplicialMap identity(const SSetPtr& x);

  const SimplicialSet& source() const { return *source_; }
  const SimplicialSet& target() const { return *target_; }
  const SSetPtr& source_ptr() const { return source_; }
  const SSetPtr& target_ptr() const { return target_; }
  const std::vector<SimplexRef>& images() const { return images_; }
  const SimplexRef& image(int id) const { return images_.at(static_cast<std::size_t>(id)); }

  SimplexRef operator()(const SimplexRef& r) const;

  /// First face-compatibility violation, if any.
  std::optional<std::string> check() const;
  void validate() const;

 private:
  SSetPtr source_;
  SSetPtr target_;
  std::vector<SimplexRef> images_;
};

/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// ---------------------------------------------------------------------------
// Standard simplicial sets

enum class StandardKind { delta, horn, boundary };

/// Delta^n, the horn Lambda^n_i or the boundary of Delta^n. Vertex ids are
/// 0..n and simplices are named by their vertex lists ("012").
SimplicialSet make_standard(StandardKind kind, int n, int horn_index = 0);
inline SSetPtr delta(int n) { return share(make_standard(StandardKind::delta, n)); }
inline SSetPtr horn(int n, int i) { return share(make_standard(StandardKind::horn, n, i)); }
inline SSetPtr boundary(int n) { return share(make_standard(StandardKind::boundary, n)); }
SSetPtr empty_sset(int dim_cap = 0);

/// The map from a subcomplex of Delta^n (vertex ids 0..n) classifying `top`.
SimplicialMap classify(const SSetPtr& standard_sub, const SSetPtr& target, const SimplexRef& top);

/// Sends each non-degenerate simplex to the equally named one in `target`.
SimplicialMap map_by_names(const SSetPtr& source, const SSetPtr& target);

// ---------------------------------------------------------------------------
// Caps, subcomplexes, coproducts

/// Copy of x authoritative up to `cap`; raising the cap requires x untruncated.
SimplicialSet with_cap(const SimplicialSet& x, int cap);

struct Subcomplex {
  SSetPtr set;
  SimplicialMap inclusion;
  std::vector<int> to_sub;  // parent id -> sub id or -1
};
/// Sub-simplicial set on the kept non-degenerate simplices; throws
/// ValidationError when `keep` is not closed under faces.
Subcomplex subcomplex(const SSetPtr& x, const std::vector<bool>& keep, std::string name = {});

struct Coproduct {
  SSetPtr set;
  std::vector<int> offsets;  // id offset of each summand
  std::vector<SimplicialMap> injections;
};
/// Disjoint union; summand simplices are renamed "<tag>:<name>" (tag may be empty).
Coproduct coproduct(const std::vector<SSetPtr>& parts, const std::vector<std::string>& tags,
                    std::string name = "coprod");
/// Map out of a coproduct given one leg per summand.
SimplicialMap copair(const Coproduct& c, const std::vector<SimplicialMap>& legs,
                     const SSetPtr& target);

// ---------------------------------------------------------------------------
// Colimits, products, cones

struct Pushout {
  SSetPtr object;
  SimplicialMap from_b;
  SimplicialMap from_c;
  /// Representative member of each non-degenerate simplex of the pushout:
  /// (0 for B / 1 for C, simplex id there).
  std::vector<std::pair<int, int>> origin;
};

/// Level-wise pushout of B <- A -> C. Representatives are the least members
/// under (tag, identifier); names are "<tag>:<id>" (bare id for empty tags).
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g, const std::string& tag_b = "B",
                const std::string& tag_c = "C", int cap = -1);
/// The induced map P -> Z from compatible legs B -> Z and C -> Z.
SimplicialMap pushout_universal(const Pushout& p, const SimplicialMap& f, const SimplicialMap& g,
                                const SimplicialMap& to_z_from_b,
                                const SimplicialMap& to_z_from_c);

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y, int dim_cap);

/// Left cone apex * K; apex joined simplices are named "<apex>*<name>".
SimplicialSet join_point(const SimplicialSet& k, const std::string& apex = "apex");

// ---------------------------------------------------------------------------
// Injectivity, isomorphism, components

struct InjectivityVerdict {
  bool injective = true;
  int level = -1;
  SimplexRef first;
  SimplexRef second;
};
InjectivityVerdict is_levelwise_injective(const SimplicialMap& f, int max_level = -1);
/// Injective and |source_n| == |target_n| for every level <= max_level.
bool is_levelwise_bijective(const SimplicialMap& f, int max_level = -1);

std::optional<SimplicialMap> find_sset_isomorphism(const SSetPtr& x, const SSetPtr& y);

/// The square of the injectivity lemma: A x Lambda^n_i -> X, A x Delta^n -> Y
/// and f : X -> Y. Elements of A are indexed 0..|A|-1; `cells[a]` is the
/// image of the top simplex of the a-th copy of Delta^n (this determines j)
/// and `top[a]` : Lambda^n_i -> X is the upper map on the a-th copy.
struct InjectivitySquare {
  SimplicialMap f;
  int n = 1;
  int i = 0;
  std::vector<SimplexRef> cells;
  std::vector<SimplicialMap> top;
};

struct InjectivityReport {
  // (1) f injective, (2) g^nd_{n-1} injective, (3) image disjointness,
  // (4) j_n and g_{n-1} preserve non-degeneracy.
  bool hypotheses[4] = {false, false, false, false};
  bool conclusion = false;
  InjectivityVerdict witness;  // failure of h when conclusion is false
  bool all_hypotheses() const { return hypotheses[0] && hypotheses[1] && hypotheses[2] && hypotheses[3]; }
};

/// Evaluates the four hypotheses by enumeration and, independently, whether
/// the induced map from the pushout to Y is a level-wise injection.
/// Throws ParameterError when the square does not commute.
InjectivityReport injectivity_criterion(const InjectivitySquare& sq);

/// Connected components (one representative vertex id each, ascending).
std::vector<int> components(const SimplicialSet& x);

/// Assigns each vertex its component index.
std::vector<int> component_index(const SimplicialSet& x);

}  // namespace sct

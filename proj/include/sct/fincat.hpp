#pragma once

// Finite 1-categories given by explicit composition tables, posets, nerves,
// and the passage back from simplicial sets to categories.

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sct/simpset.hpp"

namespace sct {

struct Morphism {
  std::string name;
  int src = -1;
  int dst = -1;
};

/// A finite category. Every object carries an identity named "id:<object>"
/// whose unit cells are filled in automatically; all other composites are
/// set explicitly with set_comp.
class FinCategory {
 public:
  explicit FinCategory(std::string name = "C") : name_(std::move(name)) {}

  int add_object(std::string name);
  int add_morphism(std::string name, int src, int dst);
  /// Records g o f = h. `tag` is kept for serialization (e.g. "forced").
  void set_comp(int g, int f, int h, std::string tag = {});

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object(int o) const { return objects_.at(static_cast<std::size_t>(o)); }
  const Morphism& morphism(int m) const { return morphisms_.at(static_cast<std::size_t>(m)); }
  int identity(int o) const { return identities_.at(static_cast<std::size_t>(o)); }
  bool is_identity(int m) const;
  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_morphism(std::string_view name) const;
  int require_object(std::string_view name) const;
  int require_morphism(std::string_view name) const;

  /// g o f, or -1 when the cell is unset.
  int comp(int g, int f) const {
    return table_[static_cast<std::size_t>(g) * stride_ + static_cast<std::size_t>(f)];
  }
  /// g o f; throws ValidationError if not composable or unset.
  int compose(int g, int f) const;
  const std::string& tag(int g, int f) const;
  std::vector<int> hom(int a, int b) const;

 private:
  void grow();

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> morphism_index_;
  std::size_t stride_ = 0;
  std::vector<int> table_;
  std::unordered_map<std::size_t, std::string> tags_;
};

struct CategoryVerdict {
  bool valid = true;
  std::string violation;  // empty when valid
};

/// Checks totality and typing of composition, unit laws and associativity
/// over all composable triples; reports the first failure.
CategoryVerdict validate_category(const FinCategory& c);

struct Poset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(elements.size()); }
  bool less(int i, int j) const { return i != j && leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  /// Throws ValidationError unless leq is reflexive, antisymmetric and transitive.
  void validate() const;
};

/// Total order 0 < 1 < ... < n-1 with elements named "0".."n-1".
Poset chain_poset(int n);
/// Discrete poset on n elements.
Poset discrete_poset(int n);
/// One representative of every isomorphism class of posets on n elements,
/// each with 0..n-1 as a linear extension.
std::vector<Poset> posets_up_to_isomorphism(int n);

/// The poset as a category; the arrow i -> j (i < j) is named "b(i,j)".
FinCategory poset_category(const Poset& p);

struct Functor {
  std::vector<int> objects;
  std::vector<int> morphisms;
};

/// True iff f preserves sources, targets, identities and composites.
bool is_functor(const FinCategory& c, const FinCategory& d, const Functor& f);

/// Nerve of c with non-degenerate simplices up to dim_cap. Chains are named
/// by their morphisms "f|g|..." (g after f); vertices by object names.
/// The result is flagged truncated when longer identity-free chains exist.
SimplicialSet nerve(const FinCategory& c, int dim_cap);

/// Chain of morphisms of an n-simplex of a nerve (n >= 1), or its object.
std::vector<int> nerve_chain(const FinCategory& c, const SimplicialSet& n, const SimplexRef& r);

/// Homotopy category of a quasi-category: edges modulo 2-simplices with a
/// degenerate d0 edge, composed through Lambda^2_1 fillers. Checks the inner
/// horns of dimensions 2 and 3 first (NotQuasiCategoryError on failure).
FinCategory homotopy_category(const SimplicialSet& x);

/// Fundamental category tau_1 of any simplicial set, by coset enumeration on
/// the path category of the 1-skeleton modulo the 2-simplex relations.
/// Throws ConstructionError when some hom-set exceeds `node_limit`.
FinCategory fundamental_category(const SimplicialSet& x, int node_limit = 200000);

/// Isomorphism search; the result maps c's objects and morphisms into d.
std::optional<Functor> find_isomorphism(const FinCategory& c, const FinCategory& d);

}  // namespace sct

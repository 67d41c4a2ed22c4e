#pragma once

// Finite presheaves Fun(E, FinSet), natural transformations, and the split
// and pure morphisms of the desk model.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sct/fincat.hpp"

namespace sct {

using CategoryPtr = std::shared_ptr<const FinCategory>;

/// A functor E -> FinSet. Elements of each value set are indices into
/// `values[o]`, which holds their names; actions[m][x] = F(m)(x).
struct FinPresheaf {
  CategoryPtr base;
  std::vector<std::vector<std::string>> values;
  std::vector<std::vector<int>> actions;

  int size(int o) const { return static_cast<int>(values.at(static_cast<std::size_t>(o)).size()); }
  /// Throws ValidationError unless the actions are typed and functorial.
  void validate() const;
  friend bool operator==(const FinPresheaf& a, const FinPresheaf& b);
};
using PresheafPtr = std::shared_ptr<const FinPresheaf>;

/// Presheaf with elements named "1".."n" per object; identity actions are
/// filled in, the others given by `actions` (keyed by morphism name).
FinPresheaf make_presheaf(const CategoryPtr& base, const std::vector<int>& sizes,
                          const std::map<std::string, std::vector<int>>& actions = {});

bool same_base(const FinCategory& a, const FinCategory& b);

struct PresheafMorphism {
  PresheafPtr source;
  PresheafPtr target;
  std::vector<std::vector<int>> components;  // per object

  /// Throws ValidationError unless typed and natural.
  void validate() const;
  friend bool operator==(const PresheafMorphism& a, const PresheafMorphism& b) {
    return *a.source == *b.source && *a.target == *b.target && a.components == b.components;
  }
};

PresheafMorphism identity_morphism(const PresheafPtr& a);
/// g o f.
PresheafMorphism compose(const PresheafMorphism& g, const PresheafMorphism& f);

/// All natural transformations a -> b, in lexicographic order of components.
std::vector<PresheafMorphism> enumerate_nat(const PresheafPtr& a, const PresheafPtr& b);

/// First r with r o f = Id in enumeration order.
std::optional<PresheafMorphism> is_split(const PresheafMorphism& f);

/// A square  A' --u--> A
///           |f'       |f
///           B' --v--> B   with no u_bar : B' -> A such that u_bar o f' = u.
struct PuritySquare {
  PresheafMorphism f_prime;
  PresheafMorphism u;
  PresheafMorphism v;
};

struct PurityVerdict {
  bool pure = true;
  std::optional<PuritySquare> witness;
  std::size_t squares = 0;  // pairs (f', u) with a commuting square
};

/// Purity against a fixed family of test objects. Hom-sets and the sets of
/// maps factoring through each f' are cached across calls. When f's source
/// and target are both tests, the identity square is examined first.
class PurityChecker {
 public:
  explicit PurityChecker(std::vector<PresheafPtr> tests);
  PurityVerdict check(const PresheafMorphism& f);
  const std::vector<PresheafMorphism>& hom(const PresheafPtr& a, const PresheafPtr& b);

 private:
  struct Hom {
    std::vector<PresheafMorphism> maps;
    std::unordered_map<std::string, int> index;
  };
  Hom& hom_entry(const PresheafPtr& a, const PresheafPtr& b);
  int index_of(const PresheafPtr& a, const PresheafPtr& b, const PresheafMorphism& m);
  // Maps w o f' for w : B' -> x, as a bitset over hom(A', x).
  const std::vector<bool>& through(std::size_t a, std::size_t b, int fp, const PresheafPtr& x);
  const PresheafPtr* find_test(const PresheafPtr& x) const;

  std::vector<PresheafPtr> tests_;
  std::map<std::pair<const FinPresheaf*, const FinPresheaf*>, Hom> homs_;
  std::map<std::tuple<std::size_t, std::size_t, int, const FinPresheaf*>, std::vector<bool>> through_;
};

PurityVerdict is_pure(const PresheafMorphism& f, const std::vector<PresheafPtr>& tests);

struct CobaseSplit {
  PresheafPtr pushout;             // B_bar = A +_{A_i} B_i
  PresheafMorphism f_prime;        // A -> B_bar
  PresheafMorphism b_leg;          // B_i -> B_bar
  std::optional<PresheafMorphism> retraction;  // r : B_bar -> A with r o f' = Id
  bool split = false;
};

/// Pushout of f_i along u. With g (g o f_i = u) the retraction is induced by
/// the universal property; otherwise is_split decides.
CobaseSplit cobase_split(const PresheafMorphism& fi, const PresheafMorphism& u,
                         const std::optional<PresheafMorphism>& g = std::nullopt);

/// Presheaves on base with every value set of size <= max_size, one per
/// isomorphism class.
std::vector<PresheafPtr> presheaf_corpus(const CategoryPtr& base, int max_size);

std::string describe(const PresheafMorphism& f);

}  // namespace sct

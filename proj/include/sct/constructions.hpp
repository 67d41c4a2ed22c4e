#pragma once

// Ret and wRet, gluing a free arrow (D, D^infty and its filtration D^m),
// cones with retracts with their localization tables, and hammock
// localization at bounded size.

#include <optional>
#include <string>
#include <vector>

#include "sct/fincat.hpp"
#include "sct/simpset.hpp"

namespace sct {

// ---------------------------------------------------------------------------
// Ret

/// Objects X, Y; morphisms Id_X, e, r : X -> Y, i : Y -> X, Id_Y with
/// r o i = Id_Y and i o r = e.
FinCategory ret_category();
SimplicialSet ret_nerve(int dim_cap);
/// Image of the 2-simplex (i, r) with long edge Id_Y.
SimplicialSet wret();

// ---------------------------------------------------------------------------
// Gluing a free arrow

struct MarkedCategory {
  FinCategory c;
  int x = 0;
};

/// Name of the glued object for x ("<x>'").
std::string primed(const std::string& object);
/// Name of the morphism a -> x' corresponding to f : a -> x ("bar(<f>)").
std::string barred(const std::string& morphism);

/// The category D: C plus an object x' with hom(a, x') = hom_C(a, x).
FinCategory d_category(const MarkedCategory& m);

/// D^infty_n = C_n + sum_{l <= n} C_l^x, with the face and degeneracy cases
/// of its definition. Marked simplices are named "x'" (l = 0) and
/// "(<chain>)'" for l >= 1; simplices of C keep their nerve names.
SimplicialSet dinfty(const MarkedCategory& m, int dim_cap);

/// The isomorphism N(D) -> D^infty of Lemma lem3, built by the case split on
/// the number of x' vertices. Throws ConstructionError unless it is a
/// level-wise bijection compatible with faces up to dim_cap.
SimplicialMap dinfty_iso(const MarkedCategory& m, int dim_cap);

struct FiltrationStage {
  int m = 0;
  SSetPtr dinfty;            // D^infty at the cap
  Subcomplex stage;          // D^m inside D^infty
  std::optional<Subcomplex> previous;  // D^{m-1} (m >= 1)
  // The square  A x Lambda^{m+1}_m -> D^{m-1}
  //                 |                   |
  //             A x Delta^{m+1}   ->   D^m
  // with A = the non-degenerate m-simplices of C ending at x.
  std::vector<std::string> cells;   // names of A in C
  SSetPtr horns;                    // A x Lambda^{m+1}_m as a coproduct
  SSetPtr deltas;                   // A x Delta^{m+1}
  SimplicialMap horn_inclusion;     // horns -> deltas
  SimplicialMap upper;              // horns -> D^{m-1}
  SimplicialMap lower;              // deltas -> D^m
  SimplicialMap previous_inclusion; // D^{m-1} -> D^m
};

/// D^m with, for m >= 1, the pushout square of Lemma "D^m pushout".
FiltrationStage d_filtration(const MarkedCategory& m, int stage, int dim_cap);

struct FiltrationCheck {
  bool levels_agree = true;       // D^m_n = D^infty_n for n <= m
  bool square_commutes = true;
  bool pushout_bijective = true;  // pushout -> D^m up to max_level
  InjectivityReport injectivity;  // the lemma's hypotheses on the square
  std::string failure;
  bool ok() const { return levels_agree && square_commutes && pushout_bijective; }
};
/// Verifies a stage m >= 1 square level-wise up to max_level.
FiltrationCheck check_filtration_square(const FiltrationStage& s, int max_level);

/// The map from the pushout C +_{Delta^0} Delta^1 (x glued to 0) to D^0.
struct FreeArrowPushout {
  Pushout pushout;
  SSetPtr d0;
  SimplicialMap comparison;
};
FreeArrowPushout free_arrow_pushout(const MarkedCategory& m, int dim_cap);

/// Glues a free arrow at every object of C, in lexicographic name order.
FinCategory glue_free_arrows(const FinCategory& c);

/// Adds an initial object "-inf" with maps "init(<a>)".
FinCategory cone_category(const FinCategory& c);

// ---------------------------------------------------------------------------
// Cone with retracts and the localization table

inline const std::string kMinusInfinity = "-inf";

/// I^< glued along each cone edge (-inf -> i) to the i-edge (Y -> X) of a
/// copy of N(Ret), at the given cap.
SimplicialSet cone_with_retracts(const Poset& p, int dim_cap);

/// The category of Corollaries cor2/cor3 with identities and forced cells.
/// Morphisms: "q<k>(<i>,<j>)", "g<k>(<i>)", "h<i>", "b(<i>,<j>)".
/// Throws ConstructionError if completion leaves a cell unset or conflicting.
FinCategory localization_table(const Poset& p);

/// Cell-by-cell check of the five composition laws; returns the first
/// violated instance.
std::optional<std::string> check_localization_laws(const Poset& p, const FinCategory& table);

// ---------------------------------------------------------------------------
// Hammocks

/// A hammock of width k (rows 0..k) and length n (columns 1..n) from x to y.
/// Node column 0 is x and node column n is y; z[r][c-1] is the object in row
/// r at internal node column c (1 <= c <= n-1).
struct Hammock {
  int width = 0;
  int x = -1;
  int y = -1;
  std::vector<bool> right;                 // per column
  std::vector<std::vector<int>> z;         // [row][internal column]
  std::vector<std::vector<int>> arrows;    // [row][column]
  std::vector<std::vector<int>> vertical;  // [row gap][internal column], row r -> r+1

  int length() const { return static_cast<int>(right.size()); }
  int object(int row, int node_column) const;
  friend bool operator==(const Hammock&, const Hammock&) = default;
  friend auto operator<=>(const Hammock&, const Hammock&) = default;
};

/// Printable form "x -f-> z <-w- ... y" (rows separated by " / ").
std::string describe(const FinCategory& c, const Hammock& h);

/// Throws ParameterError unless h satisfies conditions 1-3 (typing,
/// commutativity, verticals and left arrows in W).
void check_hammock(const FinCategory& c, const std::vector<bool>& w, const Hammock& h);

enum class ReductionOrder { leftmost, rightmost };
/// Composes adjacent same-direction columns and drops all-identity columns
/// until neither move applies.
Hammock reduce_hammock(const FinCategory& c, const std::vector<bool>& w, const Hammock& h,
                       ReductionOrder order = ReductionOrder::leftmost);
bool is_reduced(const FinCategory& c, const Hammock& h);

/// Row deletion and row duplication (before reduction).
Hammock delete_row(const FinCategory& c, const Hammock& h, int row);
Hammock duplicate_row(const FinCategory& c, const Hammock& h, int row);

struct HammockComplex {
  int x = -1;
  int y = -1;
  int max_len = 0;
  int max_width = 0;
  std::vector<std::vector<Hammock>> cells;              // by width
  std::vector<std::vector<std::vector<int>>> faces;     // [width][cell][row] -> index at width-1
  std::size_t out_of_bounds_degeneracies = 0;           // degeneracies above max_width
};

/// W as a membership vector over morphisms; throws ParameterError unless W
/// contains every identity and is closed under composition.
std::vector<bool> wide_subcategory(const FinCategory& c, const std::vector<std::string>& names);

/// All reduced hammocks from x to y of length <= max_len and width <=
/// max_width, with faces computed by row deletion and reduction. Throws
/// ConstructionError if a face leaves the enumerated set.
HammockComplex hammock_mapping(const FinCategory& c, const std::vector<bool>& w, int x, int y,
                               int max_len, int max_width);

/// Components of the width-0 hammocks under the width-1 faces; one
/// representative index (the least) per class.
std::vector<int> hammock_pi0(const HammockComplex& hc);
/// Class index of every width-0 hammock.
std::vector<int> hammock_classes(const HammockComplex& hc);

/// The setting of Prop prop3 for a poset I: C = I, D = glue_free_arrows(C),
/// the cone D^< with W generated by {-inf} and the glued objects, the table
/// localization_table(I), and the functor D^< -> table sending W to
/// identities, which labels width-0 hammocks.
struct Prop3Setup {
  Poset poset;
  FinCategory cone;
  std::vector<bool> w;
  FinCategory table;
  Functor label;
  /// Table object for a cone object that is -inf or an element of I.
  int table_object(int cone_object) const;
};
Prop3Setup prop3_setup(const Poset& p);

/// The table morphism represented by a width-0 hammock.
int hammock_label(const Prop3Setup& s, const Hammock& h);

struct DiscretenessReport {
  bool ok = true;
  std::size_t classes = 0;
  std::size_t table_size = 0;
  std::string failure;
};
/// pi0 of Hom_E(x, y) against hom_table(x, y): every class carries one
/// label, distinct classes carry distinct labels, every table morphism occurs,
/// and no width-1 hammock joins different labels.
DiscretenessReport check_discreteness(const Prop3Setup& s, int x, int y, int max_len, int max_width);

}  // namespace sct

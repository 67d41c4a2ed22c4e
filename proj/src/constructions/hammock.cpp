#include <algorithm>
#include <map>

#include "sct/constructions.hpp"
#include "sct/error.hpp"
#include "sct/union_find.hpp"

namespace sct {

int Hammock::object(int row, int node_column) const {
  if (node_column == 0) return x;
  if (node_column == length()) return y;
  return z[static_cast<std::size_t>(row)][static_cast<std::size_t>(node_column) - 1];
}

namespace {

// Vertical map in row gap r at node column c (identities at the ends).
int vertical_at(const FinCategory& c, const Hammock& h, int r, int col) {
  if (col == 0) return c.identity(h.x);
  if (col == h.length()) return c.identity(h.y);
  return h.vertical[static_cast<std::size_t>(r)][static_cast<std::size_t>(col) - 1];
}

int arrow(const Hammock& h, int row, int col) {
  return h.arrows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col) - 1];
}

bool identity_column(const FinCategory& c, const Hammock& h, int col) {
  for (int r = 0; r <= h.width; ++r)
    if (!c.is_identity(arrow(h, r, col))) return false;
  return true;
}

// Removes internal node column `node` (1..n-1) and column `col`, after the
// arrows of the surviving column have been rewritten.
void drop(Hammock& h, int node, int col) {
  for (auto& row : h.z) row.erase(row.begin() + node - 1);
  for (auto& gap : h.vertical) gap.erase(gap.begin() + node - 1);
  for (auto& row : h.arrows) row.erase(row.begin() + col - 1);
  h.right.erase(h.right.begin() + col - 1);
}

// One reduction move at column col; false if none applies there.
bool reduce_at(const FinCategory& c, Hammock& h, int col) {
  const int n = h.length();
  if (identity_column(c, h, col)) {
    if (n == 1) {
      h.right.clear();
      for (auto& row : h.arrows) row.clear();
      return true;
    }
    drop(h, col == n ? col - 1 : col, col);
    return true;
  }
  if (col < n && h.right[static_cast<std::size_t>(col) - 1] == h.right[static_cast<std::size_t>(col)]) {
    const bool right = h.right[static_cast<std::size_t>(col) - 1];
    for (int r = 0; r <= h.width; ++r) {
      const int a = arrow(h, r, col), b = arrow(h, r, col + 1);
      h.arrows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = right ? c.compose(b, a) : c.compose(a, b);
    }
    drop(h, col, col);
    return true;
  }
  return false;
}

}  // namespace

std::string describe(const FinCategory& c, const Hammock& h) {
  std::string out;
  for (int r = 0; r <= h.width; ++r) {
    if (r) out += " / ";
    out += c.object(h.x);
    for (int col = 1; col <= h.length(); ++col) {
      const std::string& a = c.morphism(arrow(h, r, col)).name;
      out += h.right[static_cast<std::size_t>(col) - 1] ? " -" + a + "-> " : " <-" + a + "- ";
      out += c.object(h.object(r, col));
    }
    if (h.length() == 0 && h.x != h.y) out += " ? " + c.object(h.y);
  }
  return out;
}

void check_hammock(const FinCategory& c, const std::vector<bool>& w, const Hammock& h) {
  const int n = h.length();
  const auto rows = static_cast<std::size_t>(h.width) + 1;
  auto fail = [&](const std::string& what) { throw ParameterError("hammock " + describe(c, h) + ": " + what); };
  if (h.width < 0 || h.z.size() != rows || h.arrows.size() != rows || h.vertical.size() != rows - 1)
    throw ParameterError("hammock: grid has the wrong number of rows");
  for (const auto& row : h.z)
    if (static_cast<int>(row.size()) != std::max(n - 1, 0)) throw ParameterError("hammock: ragged object grid");
  for (const auto& row : h.arrows)
    if (static_cast<int>(row.size()) != n) throw ParameterError("hammock: ragged arrow grid");
  for (const auto& gap : h.vertical)
    if (static_cast<int>(gap.size()) != std::max(n - 1, 0)) throw ParameterError("hammock: ragged vertical grid");
  if (n == 0 && h.x != h.y) fail("zero length between different objects");
  for (int col = 1; col <= n; ++col) {
    const bool right = h.right[static_cast<std::size_t>(col) - 1];
    for (int r = 0; r <= h.width; ++r) {
      const auto& m = c.morphism(arrow(h, r, col));
      const int from = right ? h.object(r, col - 1) : h.object(r, col);
      const int to = right ? h.object(r, col) : h.object(r, col - 1);
      if (m.src != from || m.dst != to) fail("arrow " + m.name + " has the wrong endpoints");
      if (!right && !w[static_cast<std::size_t>(arrow(h, r, col))]) fail("left arrow " + m.name + " is not in W");
    }
  }
  for (int r = 0; r < h.width; ++r)
    for (int col = 1; col < n; ++col) {
      const int v = vertical_at(c, h, r, col);
      const auto& m = c.morphism(v);
      if (m.src != h.object(r, col) || m.dst != h.object(r + 1, col)) fail("vertical " + m.name + " has the wrong endpoints");
      if (!w[static_cast<std::size_t>(v)]) fail("vertical " + m.name + " is not in W");
    }
  for (int r = 0; r < h.width; ++r)
    for (int col = 1; col <= n; ++col) {
      const int a = arrow(h, r, col), b = arrow(h, r + 1, col);
      const int vl = vertical_at(c, h, r, col - 1), vr = vertical_at(c, h, r, col);
      const bool ok = h.right[static_cast<std::size_t>(col) - 1] ? c.compose(vr, a) == c.compose(b, vl)
                                                                 : c.compose(vl, a) == c.compose(b, vr);
      if (!ok) fail("square at row " + std::to_string(r) + ", column " + std::to_string(col) + " does not commute");
    }
}

Hammock reduce_hammock(const FinCategory& c, const std::vector<bool>& w, const Hammock& h, ReductionOrder order) {
  check_hammock(c, w, h);
  Hammock out = h;
  for (bool moved = true; moved;) {
    moved = false;
    const int n = out.length();
    for (int t = 0; t < n && !moved; ++t) {
      const int col = order == ReductionOrder::leftmost ? t + 1 : n - t;
      moved = reduce_at(c, out, col);
    }
  }
  if (out.length() == 0) {
    for (auto& row : out.z) row.clear();
    for (auto& gap : out.vertical) gap.clear();
  }
  return out;
}

bool is_reduced(const FinCategory& c, const Hammock& h) {
  if (h.length() == 0) return h.x == h.y;
  for (int col = 1; col <= h.length(); ++col) {
    if (identity_column(c, h, col)) return false;
    if (col < h.length() && h.right[static_cast<std::size_t>(col) - 1] == h.right[static_cast<std::size_t>(col)]) return false;
  }
  return true;
}

Hammock delete_row(const FinCategory& c, const Hammock& h, int row) {
  if (h.width == 0 || row < 0 || row > h.width) throw ParameterError("delete_row: no such row");
  Hammock out = h;
  out.width = h.width - 1;
  out.z.erase(out.z.begin() + row);
  out.arrows.erase(out.arrows.begin() + row);
  if (row == 0) {
    out.vertical.erase(out.vertical.begin());
  } else if (row == h.width) {
    out.vertical.pop_back();
  } else {
    auto& merged = out.vertical[static_cast<std::size_t>(row) - 1];
    const auto& below = h.vertical[static_cast<std::size_t>(row)];
    for (std::size_t col = 0; col < merged.size(); ++col) merged[col] = c.compose(below[col], merged[col]);
    out.vertical.erase(out.vertical.begin() + row);
  }
  return out;
}

Hammock duplicate_row(const FinCategory& c, const Hammock& h, int row) {
  if (row < 0 || row > h.width) throw ParameterError("duplicate_row: no such row");
  Hammock out = h;
  out.width = h.width + 1;
  out.z.insert(out.z.begin() + row, h.z[static_cast<std::size_t>(row)]);
  out.arrows.insert(out.arrows.begin() + row, h.arrows[static_cast<std::size_t>(row)]);
  std::vector<int> ids;
  for (int obj : h.z[static_cast<std::size_t>(row)]) ids.push_back(c.identity(obj));
  out.vertical.insert(out.vertical.begin() + row, ids);
  return out;
}

std::vector<bool> wide_subcategory(const FinCategory& c, const std::vector<std::string>& names) {
  std::vector<bool> w(static_cast<std::size_t>(c.morphism_count()), false);
  for (int o = 0; o < c.object_count(); ++o) w[static_cast<std::size_t>(c.identity(o))] = true;
  for (const auto& name : names) w[static_cast<std::size_t>(c.require_morphism(name))] = true;
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      if (w[static_cast<std::size_t>(g)] && w[static_cast<std::size_t>(f)] && c.morphism(f).dst == c.morphism(g).src &&
          !w[static_cast<std::size_t>(c.compose(g, f))])
        throw ParameterError("W is not closed under composition: " + c.morphism(g).name + " o " + c.morphism(f).name);
  return w;
}

namespace {

// A node column: objects z_0..z_k and W-maps v_r : z_r -> z_{r+1}.
struct State {
  std::vector<int> z;
  std::vector<int> v;
};

class Enumerator {
 public:
  Enumerator(const FinCategory& c, const std::vector<bool>& w, int x, int y, int max_len, int width)
      : c_(c), w_(w), x_(x), y_(y), max_len_(max_len), width_(width) {
    for (int a = 0; a < c.object_count(); ++a)
      for (int b = 0; b < c.object_count(); ++b) hom_[{a, b}] = c.hom(a, b);
    build_states();
  }

  std::vector<Hammock> run() {
    if (x_ == y_) {
      Hammock h;
      h.width = width_;
      h.x = x_;
      h.y = y_;
      h.z.assign(static_cast<std::size_t>(width_) + 1, {});
      h.arrows.assign(static_cast<std::size_t>(width_) + 1, {});
      h.vertical.assign(static_cast<std::size_t>(width_), {});
      out_.push_back(h);
    }
    std::vector<const State*> nodes{&start_};
    std::vector<bool> dirs;
    std::vector<std::vector<int>> cols;
    extend(nodes, dirs, cols);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void build_states() {
    start_.z.assign(static_cast<std::size_t>(width_) + 1, x_);
    end_.z.assign(static_cast<std::size_t>(width_) + 1, y_);
    for (int r = 0; r < width_; ++r) {
      start_.v.push_back(c_.identity(x_));
      end_.v.push_back(c_.identity(y_));
    }
    std::vector<State> level;
    for (int o = 0; o < c_.object_count(); ++o) level.push_back({{o}, {}});
    for (int r = 0; r < width_; ++r) {
      std::vector<State> next;
      for (const auto& s : level)
        for (int m = 0; m < c_.morphism_count(); ++m)
          if (w_[static_cast<std::size_t>(m)] && c_.morphism(m).src == s.z.back()) {
            State t = s;
            t.z.push_back(c_.morphism(m).dst);
            t.v.push_back(m);
            next.push_back(std::move(t));
          }
      level = std::move(next);
    }
    states_ = std::move(level);
  }

  // Arrow columns from s to t in direction `right`, rows chosen in order.
  void columns(const State& s, const State& t, bool right, std::vector<int>& rows,
               std::vector<std::vector<int>>& found) {
    const std::size_t r = rows.size();
    if (r == s.z.size()) {
      bool all_id = true;
      for (int a : rows) all_id = all_id && c_.is_identity(a);
      if (!all_id) found.push_back(rows);
      return;
    }
    const int from = right ? s.z[r] : t.z[r];
    const int to = right ? t.z[r] : s.z[r];
    for (int a : hom_.at({from, to})) {
      if (!right && !w_[static_cast<std::size_t>(a)]) continue;
      if (r > 0) {
        const int prev = rows[r - 1];
        const bool ok = right ? c_.compose(t.v[r - 1], prev) == c_.compose(a, s.v[r - 1])
                              : c_.compose(s.v[r - 1], prev) == c_.compose(a, t.v[r - 1]);
        if (!ok) continue;
      }
      rows.push_back(a);
      columns(s, t, right, rows, found);
      rows.pop_back();
    }
  }

  void emit(const std::vector<const State*>& nodes, const std::vector<bool>& dirs,
            const std::vector<std::vector<int>>& cols) {
    Hammock h;
    h.width = width_;
    h.x = x_;
    h.y = y_;
    h.right = dirs;
    const auto rows = static_cast<std::size_t>(width_) + 1;
    h.z.assign(rows, {});
    h.arrows.assign(rows, {});
    h.vertical.assign(rows - 1, {});
    for (std::size_t node = 1; node + 1 < nodes.size(); ++node) {
      for (std::size_t r = 0; r < rows; ++r) h.z[r].push_back(nodes[node]->z[r]);
      for (std::size_t r = 0; r + 1 < rows; ++r) h.vertical[r].push_back(nodes[node]->v[r]);
    }
    for (const auto& col : cols)
      for (std::size_t r = 0; r < rows; ++r) h.arrows[r].push_back(col[r]);
    out_.push_back(std::move(h));
  }

  void extend(std::vector<const State*>& nodes, std::vector<bool>& dirs, std::vector<std::vector<int>>& cols) {
    const int len = static_cast<int>(dirs.size());
    if (len == max_len_) return;
    for (const bool right : {true, false}) {
      if (!dirs.empty() && dirs.back() == right) continue;
      auto step = [&](const State& t, bool final) {
        std::vector<int> rows;
        std::vector<std::vector<int>> found;
        columns(*nodes.back(), t, right, rows, found);
        for (auto& col : found) {
          nodes.push_back(&t);
          dirs.push_back(right);
          cols.push_back(col);
          if (final) emit(nodes, dirs, cols);
          else extend(nodes, dirs, cols);
          nodes.pop_back();
          dirs.pop_back();
          cols.pop_back();
        }
      };
      step(end_, true);
      if (len + 1 < max_len_)
        for (const auto& t : states_) step(t, false);
    }
  }

  const FinCategory& c_;
  const std::vector<bool>& w_;
  int x_, y_, max_len_, width_;
  std::map<std::pair<int, int>, std::vector<int>> hom_;
  State start_, end_;
  std::vector<State> states_;
  std::vector<Hammock> out_;
};

}  // namespace

HammockComplex hammock_mapping(const FinCategory& c, const std::vector<bool>& w, int x, int y, int max_len,
                               int max_width) {
  if (static_cast<int>(w.size()) != c.morphism_count()) throw ParameterError("hammock_mapping: W has the wrong size");
  for (int o = 0; o < c.object_count(); ++o)
    if (!w[static_cast<std::size_t>(c.identity(o))]) throw ParameterError("hammock_mapping: W is not wide");
  if (max_len < 1 || max_width < 0) throw ParameterError("hammock_mapping: bounds must be positive");
  HammockComplex hc;
  hc.x = x;
  hc.y = y;
  hc.max_len = max_len;
  hc.max_width = max_width;
  std::vector<std::map<Hammock, int>> index;
  for (int k = 0; k <= max_width; ++k) {
    hc.cells.push_back(Enumerator(c, w, x, y, max_len, k).run());
    index.emplace_back();
    for (std::size_t t = 0; t < hc.cells.back().size(); ++t) index.back().emplace(hc.cells.back()[t], static_cast<int>(t));
  }
  hc.faces.resize(static_cast<std::size_t>(max_width) + 1);
  for (int k = 1; k <= max_width; ++k)
    for (const auto& h : hc.cells[static_cast<std::size_t>(k)]) {
      std::vector<int> f;
      for (int r = 0; r <= k; ++r) {
        const Hammock d = reduce_hammock(c, w, delete_row(c, h, r));
        auto it = index[static_cast<std::size_t>(k) - 1].find(d);
        if (it == index[static_cast<std::size_t>(k) - 1].end())
          throw ConstructionError("hammock face outside the enumeration: " + describe(c, d));
        f.push_back(it->second);
      }
      hc.faces[static_cast<std::size_t>(k)].push_back(std::move(f));
    }
  for (int k = 0; k <= max_width; ++k)
    for (const auto& h : hc.cells[static_cast<std::size_t>(k)])
      for (int r = 0; r <= k; ++r) {
        if (k == max_width) {
          ++hc.out_of_bounds_degeneracies;
          continue;
        }
        if (!index[static_cast<std::size_t>(k) + 1].count(duplicate_row(c, h, r)))
          throw ConstructionError("hammock degeneracy outside the enumeration: " + describe(c, h));
      }
  return hc;
}

std::vector<int> hammock_classes(const HammockComplex& hc) {
  const auto n = hc.cells.empty() ? 0 : hc.cells[0].size();
  UnionFind uf(static_cast<int>(n));
  if (hc.faces.size() > 1)
    for (const auto& f : hc.faces[1]) uf.unite(f[0], f[1]);
  std::vector<int> root_class(n, -1), out(n);
  int next = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const auto root = static_cast<std::size_t>(uf.find(static_cast<int>(t)));
    if (root_class[root] < 0) root_class[root] = next++;
    out[t] = root_class[root];
  }
  return out;
}

std::vector<int> hammock_pi0(const HammockComplex& hc) {
  const auto cls = hammock_classes(hc);
  std::vector<int> reps;
  for (std::size_t t = 0; t < cls.size(); ++t)
    if (cls[t] == static_cast<int>(reps.size())) reps.push_back(static_cast<int>(t));
  return reps;
}

int Prop3Setup::table_object(int cone_object) const { return label.objects[static_cast<std::size_t>(cone_object)]; }

Prop3Setup prop3_setup(const Poset& p) {
  Prop3Setup s;
  s.poset = p;
  s.cone = cone_category(glue_free_arrows(poset_category(p)));
  s.table = localization_table(p);
  const FinCategory& c = s.cone;
  const int apex = c.require_object(kMinusInfinity);

  // Cone objects: elements of I, their primed copies and -inf.
  std::vector<int> element(static_cast<std::size_t>(c.object_count()), -1);
  std::vector<bool> glued(static_cast<std::size_t>(c.object_count()), false);
  for (int o = 0; o < c.object_count(); ++o) {
    const auto& name = c.object(o);
    if (o == apex) continue;
    auto it = std::find(p.elements.begin(), p.elements.end(), name);
    if (it != p.elements.end()) {
      element[static_cast<std::size_t>(o)] = static_cast<int>(it - p.elements.begin());
    } else {
      glued[static_cast<std::size_t>(o)] = true;
      auto base = std::find(p.elements.begin(), p.elements.end(), name.substr(0, name.size() - 1));
      element[static_cast<std::size_t>(o)] = static_cast<int>(base - p.elements.begin());
    }
  }
  auto in_w_objects = [&](int o) { return o == apex || glued[static_cast<std::size_t>(o)]; };
  s.w.assign(static_cast<std::size_t>(c.morphism_count()), false);
  for (int m = 0; m < c.morphism_count(); ++m)
    s.w[static_cast<std::size_t>(m)] =
        c.is_identity(m) || (in_w_objects(c.morphism(m).src) && in_w_objects(c.morphism(m).dst));

  const FinCategory& t = s.table;
  const int t_inf = t.require_object(kMinusInfinity);
  auto el = [&](int o) { return p.elements[static_cast<std::size_t>(element[static_cast<std::size_t>(o)])]; };
  for (int o = 0; o < c.object_count(); ++o)
    s.label.objects.push_back(o == apex || glued[static_cast<std::size_t>(o)] ? t_inf : t.require_object(el(o)));
  for (int m = 0; m < c.morphism_count(); ++m) {
    const int a = c.morphism(m).src, b = c.morphism(m).dst;
    int image;
    if (c.is_identity(m) || (a == apex && glued[static_cast<std::size_t>(b)])) image = t.identity(s.label.objects[static_cast<std::size_t>(b)]);
    else if (a == apex) image = t.require_morphism("h" + el(b));
    else if (glued[static_cast<std::size_t>(b)]) image = t.require_morphism("g" + el(b) + "(" + el(a) + ")");
    else image = t.require_morphism("b(" + el(a) + "," + el(b) + ")");
    s.label.morphisms.push_back(image);
  }
  if (!is_functor(c, t, s.label)) throw ConstructionError("prop3_setup: the labelling is not a functor");
  return s;
}

int hammock_label(const Prop3Setup& s, const Hammock& h) {
  if (h.width != 0) throw ParameterError("hammock_label: width-0 hammocks only");
  int acc = s.table.identity(s.label.objects[static_cast<std::size_t>(h.x)]);
  for (int col = 1; col <= h.length(); ++col) {
    const int image = s.label.morphisms[static_cast<std::size_t>(arrow(h, 0, col))];
    if (h.right[static_cast<std::size_t>(col) - 1]) acc = s.table.compose(image, acc);
    else if (!s.table.is_identity(image)) throw ConstructionError("hammock_label: a map of W is not sent to an identity");
  }
  return acc;
}

DiscretenessReport check_discreteness(const Prop3Setup& s, int x, int y, int max_len, int max_width) {
  DiscretenessReport out;
  const auto hc = hammock_mapping(s.cone, s.w, x, y, max_len, max_width);
  const auto& vertices = hc.cells[0];
  std::vector<int> labels;
  for (const auto& h : vertices) labels.push_back(hammock_label(s, h));
  auto fail = [&](const std::string& why) {
    if (out.ok) out.failure = "Hom(" + s.cone.object(x) + "," + s.cone.object(y) + "): " + why;
    out.ok = false;
  };
  if (max_width >= 1)
    for (const auto& f : hc.faces[1])
      if (labels[static_cast<std::size_t>(f[0])] != labels[static_cast<std::size_t>(f[1])])
        fail("a width-1 hammock joins " + s.table.morphism(labels[static_cast<std::size_t>(f[0])]).name + " and " +
             s.table.morphism(labels[static_cast<std::size_t>(f[1])]).name);
  const auto cls = hammock_classes(hc);
  const auto reps = hammock_pi0(hc);
  out.classes = reps.size();
  std::map<int, int> label_of_class;
  for (std::size_t t = 0; t < cls.size(); ++t) {
    auto [it, fresh] = label_of_class.emplace(cls[t], labels[t]);
    if (!fresh && it->second != labels[t]) fail("a class carries two labels");
  }
  std::vector<int> seen;
  for (const auto& [cl, lab] : label_of_class) seen.push_back(lab);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) fail("two classes carry the same label");
  auto hom = s.table.hom(s.table_object(x), s.table_object(y));
  std::sort(hom.begin(), hom.end());
  out.table_size = hom.size();
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  if (seen != hom) fail(std::to_string(seen.size()) + " labels against " + std::to_string(hom.size()) + " table morphisms");
  return out;
}

}  // namespace sct

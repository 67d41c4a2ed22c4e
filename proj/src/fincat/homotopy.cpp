#include <deque>
#include <unordered_map>

#include "sct/error.hpp"
#include "sct/fincat.hpp"
#include "sct/quasicat.hpp"
#include "sct/union_find.hpp"

namespace sct {

FinCategory homotopy_category(const SimplicialSet& x) {
  if (x.level_limit() < 3)
    throw TruncationError("homotopy_category needs dim_cap >= 3, " + x.name() + " has " + std::to_string(x.dim_cap()));
  const QuasiReport rep = is_quasicategory(x, 3, 1);
  if (!rep.ok) throw NotQuasiCategoryError("homotopy_category: unfilled inner horn " + rep.witnesses.front());

  const auto edges = x.simplices_at(1);
  std::unordered_map<SimplexRef, int, SimplexRefHash> edge_index;
  for (std::size_t t = 0; t < edges.size(); ++t) edge_index.emplace(edges[t], static_cast<int>(t));
  const auto triangles = x.simplices_at(2);
  UnionFind uf(static_cast<int>(edges.size()));
  for (const auto& s : triangles)
    if (!x.face(s, 0).nondegenerate()) uf.unite(edge_index.at(x.face(s, 2)), edge_index.at(x.face(s, 1)));

  FinCategory c("ho(" + x.name() + ")");
  std::vector<int> vertex_object(static_cast<std::size_t>(x.size()), -1);
  for (int v : x.nondeg_at(0)) vertex_object[static_cast<std::size_t>(v)] = c.add_object(x.simplex(v).name);

  // Class root -> morphism; identity classes first so they absorb homotopic edges.
  std::unordered_map<int, int> morphism_of;
  for (std::size_t t = 0; t < edges.size(); ++t) {
    if (edges[t].nondegenerate()) continue;
    morphism_of[uf.find(static_cast<int>(t))] = c.identity(vertex_object[static_cast<std::size_t>(edges[t].base)]);
  }
  for (std::size_t t = 0; t < edges.size(); ++t) {
    const int root = uf.find(static_cast<int>(t));
    if (morphism_of.count(root)) continue;
    const int src = vertex_object[static_cast<std::size_t>(x.vertex(edges[t], 0))];
    const int dst = vertex_object[static_cast<std::size_t>(x.vertex(edges[t], 1))];
    morphism_of[root] = c.add_morphism(x.label(edges[t]), src, dst);
  }
  auto mor = [&](const SimplexRef& e) { return morphism_of.at(uf.find(edge_index.at(e))); };
  for (const auto& s : triangles) {
    const int f = mor(x.face(s, 2)), g = mor(x.face(s, 0)), h = mor(x.face(s, 1));
    const int known = c.comp(g, f);
    if (known >= 0 && known != h)
      throw ConstructionError("homotopy_category: composition of " + c.morphism(g).name + " and " +
                              c.morphism(f).name + " is not well defined");
    if (known < 0) c.set_comp(g, f, h);
  }
  const auto verdict = validate_category(c);
  if (!verdict.valid) throw ConstructionError("homotopy_category: " + verdict.violation);
  return c;
}

namespace {

struct Relation {
  int start;
  std::vector<int> lhs, rhs;  // generator words, first letter applied first
};

class CosetTable {
 public:
  CosetTable(const std::vector<int>& gen_src, const std::vector<int>& gen_dst, int limit)
      : gen_src_(gen_src), gen_dst_(gen_dst), limit_(limit) {
    int objects = 0;
    for (int s : gen_src) objects = std::max(objects, s + 1);
    for (int d : gen_dst) objects = std::max(objects, d + 1);
    out_.resize(static_cast<std::size_t>(objects));
    slot_.resize(gen_src.size());
    for (std::size_t g = 0; g < gen_src.size(); ++g) {
      auto& list = out_[static_cast<std::size_t>(gen_src[g])];
      slot_[g] = static_cast<int>(list.size());
      list.push_back(static_cast<int>(g));
    }
  }
  void ensure_objects(int n) {
    if (static_cast<int>(out_.size()) < n) out_.resize(static_cast<std::size_t>(n));
  }

  int add_node(int obj) {
    if (static_cast<int>(obj_.size()) >= limit_)
      throw ConstructionError("fundamental_category: hom-set enumeration exceeded the node limit");
    obj_.push_back(obj);
    next_.emplace_back(out_[static_cast<std::size_t>(obj)].size(), -1);
    uf_.add();
    return static_cast<int>(obj_.size()) - 1;
  }
  int find(int u) { return uf_.find(u); }
  bool live(int u) { return uf_.find(u) == u; }
  int obj(int u) const { return obj_[static_cast<std::size_t>(u)]; }
  int size() const { return static_cast<int>(obj_.size()); }
  const std::vector<int>& out(int o) const { return out_[static_cast<std::size_t>(o)]; }

  int step(int u, int g, bool define) {
    u = find(u);
    int& n = next_[static_cast<std::size_t>(u)][static_cast<std::size_t>(slot_[static_cast<std::size_t>(g)])];
    if (n >= 0) return find(n);
    if (!define) return -1;
    const int v = add_node(gen_dst_[static_cast<std::size_t>(g)]);
    next_[static_cast<std::size_t>(u)][static_cast<std::size_t>(slot_[static_cast<std::size_t>(g)])] = v;
    return v;
  }
  int trace(int u, const std::vector<int>& word, bool define) {
    for (int g : word) {
      u = step(u, g, define);
      if (u < 0) return -1;
    }
    return find(u);
  }
  void coincide(int a, int b) {
    std::deque<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [u, v] = queue.front();
      queue.pop_front();
      u = find(u);
      v = find(v);
      if (u == v) continue;
      if (v < u) std::swap(u, v);
      uf_.unite(u, v);
      auto& nu = next_[static_cast<std::size_t>(u)];
      auto& nv = next_[static_cast<std::size_t>(v)];
      for (std::size_t s = 0; s < nu.size(); ++s) {
        if (nv[s] < 0) continue;
        if (nu[s] < 0) nu[s] = nv[s];
        else queue.emplace_back(nu[s], nv[s]);
      }
    }
  }

 private:
  std::vector<int> gen_src_, gen_dst_;
  int limit_;
  std::vector<std::vector<int>> out_;
  std::vector<int> slot_;
  std::vector<int> obj_;
  std::vector<std::vector<int>> next_;
  UnionFind uf_;
};

}  // namespace

FinCategory fundamental_category(const SimplicialSet& x, int node_limit) {
  std::vector<int> object_of(static_cast<std::size_t>(x.size()), -1);
  FinCategory c("tau1(" + x.name() + ")");
  for (int v : x.nondeg_at(0)) object_of[static_cast<std::size_t>(v)] = c.add_object(x.simplex(v).name);

  std::vector<int> gen_of(static_cast<std::size_t>(x.size()), -1);
  std::vector<int> gen_src, gen_dst, gen_edge;
  for (int e : x.nondeg_at(1)) {
    gen_of[static_cast<std::size_t>(e)] = static_cast<int>(gen_src.size());
    gen_src.push_back(object_of[static_cast<std::size_t>(x.simplex(e).faces[1].base)]);
    gen_dst.push_back(object_of[static_cast<std::size_t>(x.simplex(e).faces[0].base)]);
    gen_edge.push_back(e);
  }
  auto word = [&](const SimplexRef& e) {
    return e.nondegenerate() ? std::vector<int>{gen_of[static_cast<std::size_t>(e.base)]} : std::vector<int>{};
  };
  std::vector<std::vector<Relation>> relations(static_cast<std::size_t>(c.object_count()));
  for (int s : x.nondeg_at(2)) {
    const auto& faces = x.simplex(s).faces;
    Relation r;
    r.start = object_of[static_cast<std::size_t>(x.vertex(x.ref(s), 0))];
    r.lhs = word(faces[2]);
    const auto tail = word(faces[0]);
    r.lhs.insert(r.lhs.end(), tail.begin(), tail.end());
    r.rhs = word(faces[1]);
    relations[static_cast<std::size_t>(r.start)].push_back(std::move(r));
  }

  // One table per source object; nodes are morphisms out of that object.
  const int nobj = c.object_count();
  std::vector<std::vector<std::vector<int>>> words(static_cast<std::size_t>(nobj));
  std::vector<std::vector<int>> node_morphism(static_cast<std::size_t>(nobj));
  std::vector<CosetTable> tables;
  tables.reserve(static_cast<std::size_t>(nobj));
  for (int a = 0; a < nobj; ++a) {
    tables.emplace_back(gen_src, gen_dst, node_limit);
    CosetTable& t = tables.back();
    t.ensure_objects(nobj);
    t.add_node(a);
    bool complete = false;
    while (!complete) {
      for (int u = 0; u < t.size(); ++u) {
        for (const auto& r : relations[static_cast<std::size_t>(t.obj(u))]) {
          if (!t.live(u)) break;
          const int e1 = t.trace(u, r.lhs, true);
          const int e2 = t.trace(u, r.rhs, true);
          t.coincide(e1, e2);
        }
        if (!t.live(u)) continue;
        for (int g : t.out(t.obj(u))) t.step(u, g, true);
      }
      complete = true;
      for (int u = 0; u < t.size() && complete; ++u) {
        if (!t.live(u)) continue;
        for (int g : t.out(t.obj(u))) complete = complete && t.step(u, g, false) >= 0;
        for (const auto& r : relations[static_cast<std::size_t>(t.obj(u))])
          complete = complete && t.trace(u, r.lhs, false) == t.trace(u, r.rhs, false);
      }
    }
    // Shortest words by breadth-first search, generators in order.
    auto& w = words[static_cast<std::size_t>(a)];
    w.assign(static_cast<std::size_t>(t.size()), {});
    std::vector<bool> seen(static_cast<std::size_t>(t.size()), false);
    std::deque<int> queue{t.find(0)};
    seen[static_cast<std::size_t>(t.find(0))] = true;
    std::vector<int> order;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int g : t.out(t.obj(u))) {
        const int v = t.step(u, g, false);
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = true;
        w[static_cast<std::size_t>(v)] = w[static_cast<std::size_t>(u)];
        w[static_cast<std::size_t>(v)].push_back(g);
        queue.push_back(v);
      }
    }
    auto& nm = node_morphism[static_cast<std::size_t>(a)];
    nm.assign(static_cast<std::size_t>(t.size()), -1);
    for (int u : order) {
      const auto& wu = w[static_cast<std::size_t>(u)];
      if (wu.empty()) {
        nm[static_cast<std::size_t>(u)] = c.identity(a);
        continue;
      }
      std::string name;
      for (std::size_t k = 0; k < wu.size(); ++k)
        name += (k ? "|" : "") + x.simplex(gen_edge[static_cast<std::size_t>(wu[k])]).name;
      std::string unique = name;
      for (int extra = 2; c.find_morphism(unique); ++extra) unique = name + "#" + std::to_string(extra);
      nm[static_cast<std::size_t>(u)] = c.add_morphism(unique, a, t.obj(u));
    }
  }
  // g o f: follow g's word from f's node in the table of f's source.
  for (int a = 0; a < nobj; ++a) {
    CosetTable& t = tables[static_cast<std::size_t>(a)];
    for (int u = 0; u < t.size(); ++u) {
      const int f = node_morphism[static_cast<std::size_t>(a)][static_cast<std::size_t>(u)];
      if (f < 0) continue;
      const int xo = t.obj(u);
      const CosetTable& tx = tables[static_cast<std::size_t>(xo)];
      for (int v = 0; v < tx.size(); ++v) {
        const int g = node_morphism[static_cast<std::size_t>(xo)][static_cast<std::size_t>(v)];
        if (g < 0) continue;
        const int end = t.trace(u, words[static_cast<std::size_t>(xo)][static_cast<std::size_t>(v)], false);
        c.set_comp(g, f, node_morphism[static_cast<std::size_t>(a)][static_cast<std::size_t>(end)]);
      }
    }
  }
  const auto verdict = validate_category(c);
  if (!verdict.valid) throw ConstructionError("fundamental_category: " + verdict.violation);
  return c;
}

}  // namespace sct

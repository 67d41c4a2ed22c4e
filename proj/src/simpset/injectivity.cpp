#include <unordered_set>

#include "sct/error.hpp"
#include "sct/simpset.hpp"

namespace sct {

InjectivityReport injectivity_criterion(const InjectivitySquare& sq) {
  const int n = sq.n;
  const int i = sq.i;
  if (n < 1 || i < 0 || i > n) throw ParameterError("injectivity_criterion: bad (n, i)");
  if (sq.top.size() != sq.cells.size()) throw ParameterError("injectivity_criterion: one top map per element of A");
  const SimplicialSet& y = sq.f.target();
  const SSetPtr dn = delta(n);
  const SSetPtr hn = horn(n, i);
  const std::size_t a_size = sq.cells.size();

  for (std::size_t a = 0; a < a_size; ++a) {
    if (sq.cells[a].dim != n) throw ParameterError("injectivity_criterion: cell is not an n-simplex");
    if (sq.top[a].source().size() != hn->size() || sq.top[a].target_ptr().get() != sq.f.source_ptr().get())
      throw ParameterError("injectivity_criterion: top map must go from the horn to X");
    const SimplicialMap j_a = classify(hn, sq.f.target_ptr(), sq.cells[a]);
    for (int id = 0; id < hn->size(); ++id) {
      if (sq.f(sq.top[a].image(id)) != j_a.image(id))
        throw ParameterError("injectivity_criterion: the square does not commute");
    }
  }

  InjectivityReport rep;
  rep.hypotheses[0] = is_levelwise_injective(sq.f).injective;

  std::vector<SimplexRef> g_top;  // g on the non-degenerate (n-1)-simplices of A x Delta^{n-1}
  for (const auto& c : sq.cells) g_top.push_back(y.face(c, i));
  {
    std::unordered_set<SimplexRef, SimplexRefHash> seen(g_top.begin(), g_top.end());
    rep.hypotheses[1] = seen.size() == g_top.size();
  }
  {
    std::unordered_set<SimplexRef, SimplexRefHash> im_f_n1, im_f_n;
    for (const auto& r : sq.f.source().simplices_at(n - 1)) im_f_n1.insert(sq.f(r));
    if (n <= sq.f.source().level_limit())
      for (const auto& r : sq.f.source().simplices_at(n)) im_f_n.insert(sq.f(r));
    bool disjoint = true;
    for (const auto& r : g_top) disjoint = disjoint && !im_f_n1.count(r);
    for (const auto& r : sq.cells) disjoint = disjoint && !im_f_n.count(r);
    rep.hypotheses[2] = disjoint;
  }
  {
    bool nd = true;
    for (const auto& r : g_top) nd = nd && r.nondegenerate();
    for (const auto& r : sq.cells) nd = nd && r.nondegenerate();
    rep.hypotheses[3] = nd;
  }

  // Conclusion: build P = (A x Delta^n) +_{A x Lambda^n_i} X and test h.
  std::vector<SSetPtr> horns(a_size, hn), deltas(a_size, dn);
  std::vector<std::string> tags;
  for (std::size_t a = 0; a < a_size; ++a) tags.push_back("a" + std::to_string(a));
  const Coproduct ah = coproduct(horns, tags, "AxLambda");
  const Coproduct ad = coproduct(deltas, tags, "AxDelta");
  std::vector<SimplicialMap> incl_legs, j_legs;
  const SimplicialMap incl = classify(hn, dn, dn->ref(dn->size() - 1));
  for (std::size_t a = 0; a < a_size; ++a) {
    incl_legs.push_back(compose(ad.injections[a], incl));
    j_legs.push_back(classify(dn, sq.f.target_ptr(), sq.cells[a]));
  }
  const SimplicialMap left = copair(ah, incl_legs, ad.set);
  const SimplicialMap upper = copair(ah, sq.top, sq.f.source_ptr());
  const SimplicialMap j = copair(ad, j_legs, sq.f.target_ptr());
  const Pushout p = pushout(left, upper, "A", "");
  const SimplicialMap h = pushout_universal(p, left, upper, j, sq.f);
  rep.witness = is_levelwise_injective(h);
  rep.conclusion = rep.witness.injective;
  return rep;
}

}  // namespace sct

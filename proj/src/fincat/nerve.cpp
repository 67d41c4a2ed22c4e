#include "sct/error.hpp"
#include "sct/fincat.hpp"
#include "sct/level_model.hpp"
#include "sct/nerve_model.hpp"

namespace sct {


SimplicialSet nerve(const FinCategory& c, int dim_cap) {
  const auto verdict = validate_category(c);
  if (!verdict.valid) throw ValidationError("nerve: " + c.name() + " is not a category: " + verdict.violation);
  detail::NerveModel model{&c};
  auto r = realize(model, "N(" + c.name() + ")", dim_cap, false);
  // Flag truncation when some identity-free chain is longer than the cap.
  bool longer = false;
  if (dim_cap == 0) {
    for (int m = 0; m < c.morphism_count() && !longer; ++m) longer = !c.is_identity(m);
  } else {
    for (const auto& chain : r.nondeg_keys[static_cast<std::size_t>(dim_cap)]) {
      for (int m = 0; m < c.morphism_count() && !longer; ++m)
        longer = !c.is_identity(m) && c.morphism(m).src == c.morphism(chain.back()).dst;
      if (longer) break;
    }
  }
  r.set.set_truncated(longer);
  return std::move(r.set);
}

std::vector<int> nerve_chain(const FinCategory& c, const SimplicialSet& n, const SimplexRef& r) {
  if (r.dim == 0) return {c.require_object(n.simplex(r.base).name)};
  std::vector<int> out;
  for (int k = 0; k < r.dim; ++k) {
    const int theta[2] = {k, k + 1};
    const SimplexRef e = n.apply(r, theta);
    if (e.nondegenerate()) {
      out.push_back(c.require_morphism(n.simplex(e.base).name));
    } else {
      out.push_back(c.identity(c.require_object(n.simplex(e.base).name)));
    }
  }
  return out;
}

}  // namespace sct

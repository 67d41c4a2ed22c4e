#include "sct/error.hpp"
#include "sct/quasicat.hpp"

namespace sct {

namespace {

struct HornMap {
  int n;
  int i;
  std::vector<SimplexRef> images;
};

}  // namespace

FibrantReplacement fibrant_replace(const SSetPtr& k, int steps, int dim_cap) {
  if (steps < 0) throw ParameterError("fibrant_replace: negative step count");
  if (dim_cap < 0) throw ParameterError("fibrant_replace: negative dim_cap");
  SSetPtr stage = k->dim_cap() == dim_cap ? k : share(with_cap(*k, dim_cap));
  FibrantReplacement out;
  out.trace.stages.push_back(stage);
  SimplicialMap to_stage = SimplicialMap::identity(stage);

  for (int s = 1; s <= steps; ++s) {
    std::vector<HornMap> maps;
    LevelIndex index(*stage);
    for (int n = 2; n <= dim_cap; ++n) {
      for (int i = 1; i < n; ++i) {
        for_each_map(horn(n, i), index, [&](const std::vector<SimplexRef>& images) {
          maps.push_back({n, i, images});
          return true;
        });
      }
    }
    out.trace.glued.push_back(maps.size());
    if (maps.empty()) {
      out.trace.inclusions.push_back(SimplicialMap::identity(stage));
      out.trace.stages.push_back(stage);
      continue;
    }
    std::vector<SSetPtr> horns, deltas;
    std::vector<std::string> tags;
    std::vector<SimplicialMap> incl_legs, map_legs;
    for (std::size_t t = 0; t < maps.size(); ++t) {
      horns.push_back(horn(maps[t].n, maps[t].i));
      deltas.push_back(delta(maps[t].n));
      tags.push_back("h" + std::to_string(t));
    }
    const Coproduct ah = coproduct(horns, tags, "horns");
    const Coproduct ad = coproduct(deltas, tags, "cells");
    for (std::size_t t = 0; t < maps.size(); ++t) {
      incl_legs.push_back(compose(ad.injections[t], map_by_names(horns[t], deltas[t])));
      map_legs.emplace_back(horns[t], stage, maps[t].images);
    }
    const SimplicialMap left = copair(ah, incl_legs, ad.set);
    const SimplicialMap right = copair(ah, map_legs, stage);
    const Pushout p = pushout(left, right, "E" + std::to_string(s), "", dim_cap);
    SimplicialSet next = *p.object;
    next.set_name(k->name() + "_E" + std::to_string(s));
    SSetPtr next_ptr = share(std::move(next));
    SimplicialMap step(stage, next_ptr, p.from_c.images());
    out.trace.inclusions.push_back(step);
    to_stage = compose(step, to_stage);
    stage = next_ptr;
    out.trace.stages.push_back(stage);
  }
  out.result = stage;
  out.inclusion = to_stage;
  return out;
}

}  // namespace sct

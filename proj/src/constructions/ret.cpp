#include "sct/constructions.hpp"

namespace sct {

FinCategory ret_category() {
  FinCategory c("Ret");
  const int x = c.add_object("X"), y = c.add_object("Y");
  const int e = c.add_morphism("e", x, x);
  const int r = c.add_morphism("r", x, y);
  const int i = c.add_morphism("i", y, x);
  c.set_comp(r, i, c.identity(y));
  c.set_comp(i, r, e);
  c.set_comp(e, e, e);
  c.set_comp(e, i, i);
  c.set_comp(r, e, r);
  return c;
}

SimplicialSet ret_nerve(int dim_cap) {
  auto n = nerve(ret_category(), dim_cap);
  n.set_name("N(Ret)");
  return n;
}

SimplicialSet wret() {
  const auto n = share(ret_nerve(2));
  std::vector<bool> keep(static_cast<std::size_t>(n->size()), false);
  for (const char* name : {"X", "Y", "i", "r", "i|r"}) keep[static_cast<std::size_t>(n->require(name))] = true;
  auto sub = subcomplex(n, keep, "wRet");
  SimplicialSet out = *sub.set;
  out.set_truncated(false);
  return out;
}

}  // namespace sct

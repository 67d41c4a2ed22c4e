#pragma once

// Categories written out by hand for tests.

#include "sct/fincat.hpp"

namespace fixture {

// Objects X, Y; r : X -> Y, i : Y -> X, e = i o r, r o i = Id_Y.
inline sct::FinCategory ret_by_hand() {
  sct::FinCategory c("Ret");
  const int x = c.add_object("X"), y = c.add_object("Y");
  const int e = c.add_morphism("e", x, x);
  const int r = c.add_morphism("r", x, y);
  const int i = c.add_morphism("i", y, x);
  c.set_comp(i, r, e);
  c.set_comp(r, i, c.identity(y));
  c.set_comp(e, e, e);
  c.set_comp(e, i, i);
  c.set_comp(r, e, r);
  return c;
}

}  // namespace fixture

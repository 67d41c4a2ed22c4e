#include "sct/builtin.hpp"

namespace sct {

FinCategory terminal_category() {
  FinCategory c("terminal");
  c.add_object("x");
  return c;
}

FinCategory discrete_category(int n) {
  FinCategory c("discrete" + std::to_string(n));
  for (int i = 0; i < n; ++i) c.add_object(std::string(1, static_cast<char>('a' + i)));
  return c;
}

FinCategory arrow_category() {
  FinCategory c("arrow");
  const int a = c.add_object("a"), b = c.add_object("b");
  c.add_morphism("f", a, b);
  return c;
}

FinCategory idempotent_monoid() {
  FinCategory c("idempotent");
  const int o = c.add_object("x");
  const int e = c.add_morphism("e", o, o);
  c.set_comp(e, e, e);
  return c;
}

FinCategory involution_monoid() {
  FinCategory c("involution");
  const int o = c.add_object("x");
  const int t = c.add_morphism("t", o, o);
  c.set_comp(t, t, c.identity(o));
  return c;
}

FinCategory parallel_pair() {
  FinCategory c("parallel");
  const int a = c.add_object("a"), b = c.add_object("b");
  c.add_morphism("f", a, b);
  c.add_morphism("g", a, b);
  return c;
}

FinCategory walking_isomorphism() {
  FinCategory c("iso");
  const int a = c.add_object("a"), b = c.add_object("b");
  const int f = c.add_morphism("f", a, b);
  const int g = c.add_morphism("g", b, a);
  c.set_comp(g, f, c.identity(a));
  c.set_comp(f, g, c.identity(b));
  return c;
}

std::vector<NamedCategory> small_generator_corpus() {
  return {{"terminal", terminal_category()},
          {"discrete2", discrete_category(2)},
          {"arrow", arrow_category()},
          {"idempotent", idempotent_monoid()}};
}

std::vector<NamedCategory> extended_corpus() {
  auto out = small_generator_corpus();
  out.push_back({"involution", involution_monoid()});
  out.push_back({"parallel", parallel_pair()});
  out.push_back({"iso", walking_isomorphism()});
  return out;
}

}  // namespace sct

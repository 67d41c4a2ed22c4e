// sct: command-line front end. Exit status 0 pass, 1 check failure,
// 2 usage error, 3 input error.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sct/constructions.hpp"
#include "sct/error.hpp"
#include "sct/io.hpp"
#include "sct/quasicat.hpp"
#include "sct/verify.hpp"

using namespace sct;

namespace {

std::string out_path;
bool timings = true;

void emit(const std::string& text) {
  if (out_path.empty()) std::cout << text;
  else write_text(out_path, text);
}

struct PosetSpec {
  int chain = -1;
  int discrete = -1;
  std::string file;

  void add(CLI::App* cmd) {
    cmd->add_option("file", file, "poset as a thin .fcat file");
    cmd->add_option("--chain", chain, "total order on n elements");
    cmd->add_option("--discrete", discrete, "discrete poset on n elements");
  }

  Poset get() const {
    if (chain >= 0) return chain_poset(chain);
    if (discrete >= 0) return discrete_poset(discrete);
    if (file.empty()) throw ParameterError("give a poset file, --chain or --discrete");
    const auto c = read_fcat(file);
    Poset p;
    for (int o = 0; o < c.object_count(); ++o) p.elements.push_back(c.object(o));
    p.leq.assign(static_cast<std::size_t>(c.object_count()), std::vector<bool>(static_cast<std::size_t>(c.object_count()), false));
    for (int a = 0; a < c.object_count(); ++a)
      for (int b = 0; b < c.object_count(); ++b) {
        const auto h = c.hom(a, b).size();
        if (h > 1) throw ValidationError(c.name() + " is not thin at (" + c.object(a) + ", " + c.object(b) + ")");
        p.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = h == 1;
      }
    p.validate();
    return p;
  }
};

MarkedCategory marked(const std::string& file, const std::string& mark) {
  auto c = read_fcat(file);
  const auto x = c.find_object(mark);
  if (!x) throw ParameterError("--mark: no object '" + mark + "' in " + c.name());
  return {std::move(c), *x};
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string part; std::getline(in, part, ',');)
    if (!part.empty()) out.push_back(part);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial and categorical toolkit"};
  app.require_subcommand(1);
  app.add_option("--out", out_path, "write the result to a file");
  app.add_flag("--no-timings", [](std::int64_t) { timings = false; }, "leave timings out of reports");
  std::function<int()> action;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  std::string file, file2, file3, mark, from, to, w_names, apex = "apex";
  int dim = 3, steps = 1, stage = 0, iters = 1, n = 1, max_len = 4, max_width = 2, chain = -1;
  std::vector<std::string> tests, corpus;
  PosetSpec poset;
  VerifyOptions vopt;
  bool tau1 = false;

  auto* nerve_cmd = add("nerve", "nerve of a finite category");
  nerve_cmd->add_option("fcat", file)->required();
  nerve_cmd->add_option("--dim", dim);
  nerve_cmd->callback([&] { action = [&] { emit(serialize_sset(nerve(read_fcat(file), dim))); return 0; }; });

  auto* pushout_cmd = add("pushout", "pushout of B <- A -> C, maps matched by simplex names");
  pushout_cmd->add_option("a", file)->required();
  pushout_cmd->add_option("b", file2)->required();
  pushout_cmd->add_option("c", file3)->required();
  pushout_cmd->callback([&] {
    action = [&] {
      const auto a = share(read_sset(file)), b = share(read_sset(file2)), c = share(read_sset(file3));
      emit(serialize_sset(*pushout(map_by_names(a, b), map_by_names(a, c)).object));
      return 0;
    };
  });

  auto* product_cmd = add("product", "product of two simplicial sets");
  product_cmd->add_option("x", file)->required();
  product_cmd->add_option("y", file2)->required();
  product_cmd->add_option("--dim", dim);
  product_cmd->callback([&] { action = [&] { emit(serialize_sset(product(read_sset(file), read_sset(file2), dim))); return 0; }; });

  auto* cone_cmd = add("cone", "left cone on a simplicial set");
  cone_cmd->add_option("x", file)->required();
  cone_cmd->add_option("--apex", apex);
  cone_cmd->callback([&] { action = [&] { emit(serialize_sset(join_point(read_sset(file), apex))); return 0; }; });

  auto* qcheck_cmd = add("qcheck", "inner horn filling up to a dimension");
  qcheck_cmd->add_option("x", file)->required();
  qcheck_cmd->add_option("--dim", dim);
  qcheck_cmd->callback([&] {
    action = [&] {
      const auto r = is_quasicategory(read_sset(file), dim);
      std::ostringstream out;
      for (const auto& c : r.counts)
        out << "Lambda" << c.n << "_" << c.i << ": " << c.horn_maps << " horn maps, " << c.unfilled << " unfilled, "
            << c.multiply_filled << " with several fillers\n";
      for (const auto& w : r.witnesses) out << "unfilled " << w << "\n";
      out << (r.ok ? "quasi-category" : "not a quasi-category") << " to dimension " << dim
          << (r.ok && r.unique_fillers ? ", unique fillers" : "") << "\n";
      emit(out.str());
      return r.ok ? 0 : 1;
    };
  });

  auto* fibrant_cmd = add("fibrant", "small-object-argument tower");
  fibrant_cmd->add_option("x", file)->required();
  fibrant_cmd->add_option("--steps", steps);
  fibrant_cmd->add_option("--dim", dim);
  fibrant_cmd->callback([&] { action = [&] { emit(serialize_sset(*fibrant_replace(share(read_sset(file)), steps, dim).result)); return 0; }; });

  auto* ho_cmd = add("ho", "homotopy category of a quasi-category");
  ho_cmd->add_option("x", file)->required();
  ho_cmd->add_flag("--tau1", tau1, "fundamental category of any simplicial set");
  ho_cmd->callback([&] {
    action = [&] {
      const auto x = read_sset(file);
      emit(serialize_fcat(tau1 ? fundamental_category(x) : homotopy_category(x)));
      return 0;
    };
  });

  auto* dinfty_cmd = add("dinfty", "the simplicial set D^infty of a marked category");
  dinfty_cmd->add_option("fcat", file)->required();
  dinfty_cmd->add_option("--mark", mark)->required();
  dinfty_cmd->add_option("--dim", dim);
  dinfty_cmd->callback([&] { action = [&] { emit(serialize_sset(dinfty(marked(file, mark), dim))); return 0; }; });

  auto* dfilt_cmd = add("dfilt", "stage D^m of the filtration, with its pushout square checked");
  dfilt_cmd->add_option("fcat", file)->required();
  dfilt_cmd->add_option("--mark", mark)->required();
  dfilt_cmd->add_option("--stage", stage)->required();
  dfilt_cmd->add_option("--dim", dim);
  dfilt_cmd->callback([&] {
    action = [&] {
      const auto s = d_filtration(marked(file, mark), stage, std::max(dim, stage + 1));
      emit(serialize_sset(*s.stage.set));
      if (stage == 0) return 0;
      const auto c = check_filtration_square(s, std::max(dim, stage + 1));
      std::cerr << (c.ok() ? "square is a pushout" : "square check failed: " + c.failure) << "\n";
      return c.ok() ? 0 : 1;
    };
  });

  auto* glue_cmd = add("glue", "glue a free arrow at every object");
  glue_cmd->add_option("fcat", file)->required();
  glue_cmd->callback([&] { action = [&] { emit(serialize_fcat(glue_free_arrows(read_fcat(file)))); return 0; }; });

  auto* lcone_cmd = add("lcone", "cone with retracts on a poset");
  poset.add(lcone_cmd);
  lcone_cmd->add_option("--dim", dim);
  lcone_cmd->callback([&] { action = [&] { emit(serialize_sset(cone_with_retracts(poset.get(), dim))); return 0; }; });

  auto* ltable_cmd = add("ltable", "explicit localization table of a poset");
  poset.add(ltable_cmd);
  ltable_cmd->callback([&] { action = [&] { emit(serialize_fcat(localization_table(poset.get()))); return 0; }; });

  auto* hammock_cmd = add("hammock", "bounded hammock mapping complex");
  hammock_cmd->add_option("fcat", file, "category; omit with --chain");
  hammock_cmd->add_option("--w", w_names, "comma-separated morphisms generating W");
  hammock_cmd->add_option("--chain", chain, "use the retract cone on a chain of n elements");
  hammock_cmd->add_option("--from", from)->required();
  hammock_cmd->add_option("--to", to)->required();
  hammock_cmd->add_option("--max-len", max_len);
  hammock_cmd->add_option("--max-width", max_width);
  hammock_cmd->callback([&] {
    action = [&] {
      std::optional<Prop3Setup> s;
      FinCategory c;
      std::vector<bool> w;
      if (chain >= 0) {
        s = prop3_setup(chain_poset(chain));
        c = s->cone;
        w = s->w;
      } else {
        if (file.empty()) throw ParameterError("give a category file or --chain");
        c = read_fcat(file);
        w = wide_subcategory(c, split_names(w_names));
      }
      const auto x = c.find_object(from), y = c.find_object(to);
      if (!x || !y) throw ParameterError("--from/--to: unknown object");
      const auto hc = hammock_mapping(c, w, *x, *y, max_len, max_width);
      const auto cls = hammock_classes(hc);
      std::ostringstream out;
      for (std::size_t k = 0; k < hc.cells.size(); ++k) out << "width " << k << ": " << hc.cells[k].size() << " hammocks\n";
      out << "degeneracies beyond width " << max_width << ": " << hc.out_of_bounds_degeneracies << "\n";
      out << "components: " << hammock_pi0(hc).size() << "\n";
      for (std::size_t t = 0; t < hc.cells[0].size(); ++t) {
        out << "  [" << cls[t] << "] " << describe(c, hc.cells[0][t]);
        if (s) out << "  => " << s->table.morphism(hammock_label(*s, hc.cells[0][t])).name;
        out << "\n";
      }
      emit(out.str());
      if (s) {
        const auto r = check_discreteness(*s, *x, *y, max_len, max_width);
        std::cerr << (r.ok ? "discrete within bounds" : r.failure) << "\n";
        return r.ok ? 0 : 1;
      }
      return 0;
    };
  });

  auto* pure_cmd = add("pure", "split and pure verdicts for every map A -> B");
  pure_cmd->add_option("a", file)->required();
  pure_cmd->add_option("b", file2)->required();
  pure_cmd->add_option("--tests", tests, "test presheaves")->required();
  pure_cmd->callback([&] {
    action = [&] {
      const auto fa = read_fps(file), fb = read_fps(file2);
      auto a = std::make_shared<const FinPresheaf>(fa.presheaf);
      auto b = std::make_shared<const FinPresheaf>(fb.presheaf);
      std::vector<PresheafPtr> family;
      for (const auto& t : tests) family.push_back(std::make_shared<const FinPresheaf>(read_fps(t).presheaf));
      PurityChecker checker(family);
      std::ostringstream out;
      for (const auto& f : enumerate_nat(a, b)) {
        const auto v = checker.check(f);
        out << describe(f) << " | " << (is_split(f) ? "split" : "not split") << ", " << (v.pure ? "pure" : "not pure");
        if (v.witness) out << " (square with f' = " << describe(v.witness->f_prime) << ", u = " << describe(v.witness->u) << ")";
        out << "\n";
      }
      emit(out.str());
      return 0;
    };
  });

  auto* ex_cmd = add("ex", "iterated Kan Ex");
  ex_cmd->add_option("x", file)->required();
  ex_cmd->add_option("--iters", iters);
  ex_cmd->add_option("--dim", dim);
  ex_cmd->callback([&] { action = [&] { emit(serialize_sset(*ex_iterate(share(read_sset(file)), iters, dim).stages.back())); return 0; }; });

  auto* sd_cmd = add("sd", "barycentric subdivision of a standard simplex");
  sd_cmd->add_option("--n", n)->required();
  sd_cmd->callback([&] { action = [&] { emit(serialize_sset(sd_standard(n))); return 0; }; });

  std::string suite;
  auto* verify_cmd = add("verify", "run a named verification suite");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_ids()));
  verify_cmd->add_option("--corpus", corpus, "'builtin' or extra input files");
  verify_cmd->add_option("--dim", vopt.dim);
  verify_cmd->add_option("--max-size", vopt.max_size);
  verify_cmd->add_option("--count", vopt.count);
  verify_cmd->add_option("--seed", vopt.seed);
  verify_cmd->add_option("--max-len", vopt.max_len);
  verify_cmd->add_option("--max-width", vopt.max_width);
  verify_cmd->callback([&] {
    action = [&] {
      for (const auto& c : corpus)
        if (c != "builtin") vopt.corpus_files.push_back(c);
      const auto report = run_verify(suite, vopt);
      emit(report.render(timings));
      return report.passed() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}

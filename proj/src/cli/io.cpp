#include "sct/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "sct/error.hpp"

namespace sct {

namespace {

struct Line {
  int number = 0;
  std::string text;     // without comment, trimmed
  std::string comment;  // trimmed text after '#'
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line l{number, raw, {}};
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      l.text = raw.substr(0, hash);
      l.comment = trim(raw.substr(hash + 1));
    }
    l.text = trim(l.text);
    if (!l.text.empty()) out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw SyntaxError(line, "expected an integer for " + what + ", got '" + s + "'");
}

void require_token(const std::string& name, const std::string& what) {
  if (name.empty() || std::any_of(name.begin(), name.end(), [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '#'; }))
    throw ParameterError("cannot serialize " + what + " '" + name + "': names must be non-empty and free of blanks and '#'");
}

std::string word_list(const DegeneracyWord& w) {
  std::string out = "[";
  for (std::size_t t = 0; t < w.indices.size(); ++t) out += (t ? "," : "") + std::to_string(w.indices[t]);
  return out + "]";
}

}  // namespace

SimplicialSet parse_sset(const std::string& text, bool strict, std::vector<NonNormalFace>* non_normal) {
  struct Face {
    int line;
    std::string target;
    DegeneracyWord word;
  };
  struct Decl {
    int line;
    std::string id;
    int dim;
    std::map<int, Face> faces;
  };
  std::optional<std::string> name;
  std::optional<int> cap;
  bool truncated = false;
  std::vector<Decl> decls;
  std::map<std::string, std::size_t> by_id;

  for (const auto& l : split_lines(text)) {
    const auto t = tokens(l.text);
    if (!name) {
      if (t[0] != "sset" || t.size() < 2) throw SyntaxError(l.number, "expected 'sset <name>'");
      name = trim(l.text.substr(4));
      continue;
    }
    if (t[0] == "dimcap") {
      if (cap) throw SyntaxError(l.number, "dimcap given twice");
      if (t.size() < 2 || t.size() > 3 || (t.size() == 3 && t[2] != "truncated"))
        throw SyntaxError(l.number, "expected 'dimcap <d> [truncated]'");
      cap = parse_int(t[1], l.number, "dimcap");
      truncated = t.size() == 3;
    } else if (t[0] == "simplex") {
      if (t.size() != 3 || !t[2].starts_with("dim=")) throw SyntaxError(l.number, "expected 'simplex <id> dim=<n>'");
      const int dim = parse_int(t[2].substr(4), l.number, "dim");
      if (dim < 0) throw SyntaxError(l.number, "negative dimension");
      if (!by_id.emplace(t[1], decls.size()).second) throw SyntaxError(l.number, "simplex '" + t[1] + "' declared twice");
      decls.push_back({l.number, t[1], dim, {}});
    } else if (t[0] == "face") {
      if (t.size() != 5 || t[2] != "=" || !t[4].starts_with("deg=[") || !t[4].ends_with("]"))
        throw SyntaxError(l.number, "expected 'face <id>.<k> = <target> deg=[...]'");
      const auto dot = t[1].rfind('.');
      if (dot == std::string::npos) throw SyntaxError(l.number, "expected '<id>.<k>'");
      const auto id = t[1].substr(0, dot);
      const int k = parse_int(t[1].substr(dot + 1), l.number, "face index");
      auto it = by_id.find(id);
      if (it == by_id.end()) throw SyntaxError(l.number, "face of undeclared simplex '" + id + "'");
      Decl& d = decls[it->second];
      if (k < 0 || k > d.dim || d.dim == 0) throw SyntaxError(l.number, "face index " + std::to_string(k) + " out of range for '" + id + "'");
      DegeneracyWord w;
      const auto body = t[4].substr(5, t[4].size() - 6);
      std::istringstream in(body);
      for (std::string part; std::getline(in, part, ',');)
        if (!trim(part).empty()) w.indices.push_back(parse_int(trim(part), l.number, "degeneracy index"));
      if (!d.faces.emplace(k, Face{l.number, t[3], w}).second) throw SyntaxError(l.number, "face given twice");
    } else {
      throw SyntaxError(l.number, "unknown statement '" + t[0] + "'");
    }
  }
  if (!name) throw SyntaxError(1, "missing 'sset <name>'");
  if (!cap) {
    cap = 0;
    for (const auto& d : decls) cap = std::max(*cap, d.dim);
  }

  SimplicialSet x(*name, *cap);
  x.set_truncated(truncated);
  std::vector<std::size_t> order(decls.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return decls[a].dim < decls[b].dim; });
  std::map<std::string, int> id_of;
  for (std::size_t t : order) {
    const Decl& d = decls[t];
    std::vector<SimplexRef> faces;
    if (d.dim > 0) {
      if (static_cast<int>(d.faces.size()) != d.dim + 1)
        throw SyntaxError(d.line, "simplex '" + d.id + "' needs " + std::to_string(d.dim + 1) + " faces");
      for (const auto& [k, f] : d.faces) {
        auto target = id_of.find(f.target);
        if (target == id_of.end()) {
          if (by_id.count(f.target))
            throw DimensionError("line " + std::to_string(f.line) + ": face target '" + f.target + "' has dimension " +
                                 std::to_string(decls[by_id.at(f.target)].dim) + ", too large for a face of '" + d.id + "'");
          throw SyntaxError(f.line, "unknown face target '" + f.target + "'");
        }
        const int base_dim = x.simplex(target->second).dim;
        if (base_dim + static_cast<int>(f.word.indices.size()) != d.dim - 1)
          throw DimensionError("line " + std::to_string(f.line) + ": face " + d.id + "." + std::to_string(k) + " has dimension " +
                               std::to_string(base_dim + static_cast<int>(f.word.indices.size())) + ", expected " +
                               std::to_string(d.dim - 1));
        if (!f.word.applicable(base_dim)) throw DimensionError("line " + std::to_string(f.line) + ": degeneracy list " + word_list(f.word) + " is not applicable");
        const SimplexRef r = normalize(x, target->second, f.word);
        if (!f.word.is_normal()) {
          if (strict) throw SyntaxError(f.line, "degeneracy list " + word_list(f.word) + " is not strictly decreasing");
          if (non_normal) non_normal->push_back({f.line, d.id, k, f.word, r.word()});
        }
        faces.push_back(r);
      }
    }
    id_of[d.id] = x.add_simplex(d.id, d.dim, std::move(faces));
  }
  x.validate();
  return x;
}

std::string serialize_sset(const SimplicialSet& x) {
  std::ostringstream out;
  out << "sset " << x.name() << "\n";
  out << "dimcap " << x.dim_cap() << (x.truncated() ? " truncated" : "") << "\n";
  for (int id = 0; id < x.size(); ++id) {
    const auto& s = x.simplex(id);
    require_token(s.name, "simplex");
    out << "simplex " << s.name << " dim=" << s.dim << "\n";
    for (std::size_t k = 0; k < s.faces.size(); ++k)
      out << "face " << s.name << "." << k << " = " << x.simplex(s.faces[k].base).name << " deg=" << word_list(s.faces[k].word())
          << "\n";
  }
  return out.str();
}

FinCategory parse_fcat(const std::string& text) {
  std::optional<FinCategory> c;
  for (const auto& l : split_lines(text)) {
    const auto t = tokens(l.text);
    if (!c) {
      if (t[0] != "fcat" || t.size() < 2) throw SyntaxError(l.number, "expected 'fcat <name>'");
      c.emplace(trim(l.text.substr(4)));
      continue;
    }
    auto object = [&](const std::string& n) {
      auto o = c->find_object(n);
      if (!o) throw SyntaxError(l.number, "unknown object '" + n + "'");
      return *o;
    };
    auto morphism = [&](const std::string& n) {
      auto m = c->find_morphism(n);
      if (!m) throw SyntaxError(l.number, "unknown morphism '" + n + "'");
      return *m;
    };
    if (t[0] == "obj") {
      if (t.size() != 2) throw SyntaxError(l.number, "expected 'obj <id>'");
      if (c->find_object(t[1])) throw SyntaxError(l.number, "object '" + t[1] + "' declared twice");
      c->add_object(t[1]);
    } else if (t[0] == "mor") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "->") throw SyntaxError(l.number, "expected 'mor <id> : <src> -> <dst>'");
      if (t[1].starts_with("id:")) throw SyntaxError(l.number, "names starting with 'id:' are reserved for identities");
      if (c->find_morphism(t[1])) throw SyntaxError(l.number, "morphism '" + t[1] + "' declared twice");
      c->add_morphism(t[1], object(t[3]), object(t[5]));
    } else if (t[0] == "comp") {
      if (t.size() != 6 || t[2] != "o" || t[4] != "=") throw SyntaxError(l.number, "expected 'comp <g> o <f> = <h>'");
      const int g = morphism(t[1]), f = morphism(t[3]), h = morphism(t[5]);
      if (c->morphism(f).dst != c->morphism(g).src) throw SyntaxError(l.number, t[1] + " o " + t[3] + " is not composable");
      if (c->is_identity(g) || c->is_identity(f)) {
        if (c->comp(g, f) != h) throw SyntaxError(l.number, "unit law contradicts " + t[1] + " o " + t[3] + " = " + t[5]);
        continue;
      }
      if (c->comp(g, f) >= 0) throw SyntaxError(l.number, "composite " + t[1] + " o " + t[3] + " given twice");
      if (c->morphism(h).src != c->morphism(f).src || c->morphism(h).dst != c->morphism(g).dst)
        throw SyntaxError(l.number, t[5] + " has the wrong source or target for " + t[1] + " o " + t[3]);
      c->set_comp(g, f, h, l.comment);
    } else {
      throw SyntaxError(l.number, "unknown statement '" + t[0] + "'");
    }
  }
  if (!c) throw SyntaxError(1, "missing 'fcat <name>'");
  const auto verdict = validate_category(*c);
  if (!verdict.valid) throw ValidationError(c->name() + ": " + verdict.violation);
  return std::move(*c);
}

std::string serialize_fcat(const FinCategory& c) {
  std::ostringstream out;
  out << "fcat " << c.name() << "\n";
  for (int o = 0; o < c.object_count(); ++o) {
    require_token(c.object(o), "object");
    out << "obj " << c.object(o) << "\n";
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const auto& mor = c.morphism(m);
    require_token(mor.name, "morphism");
    out << "mor " << mor.name << " : " << c.object(mor.src) << " -> " << c.object(mor.dst) << "\n";
  }
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(g) || c.is_identity(f) || c.comp(g, f) < 0) continue;
      out << "comp " << c.morphism(g).name << " o " << c.morphism(f).name << " = " << c.morphism(c.comp(g, f)).name;
      if (const auto& tag = c.tag(g, f); !tag.empty()) out << "  # " << tag;
      out << "\n";
    }
  return out.str();
}

PresheafFile parse_fps(const std::string& text, const std::function<CategoryPtr(const std::string&)>& load_base) {
  std::optional<PresheafFile> out;
  std::vector<bool> declared;
  std::vector<std::vector<int>> filled;  // per morphism, elements with an act line
  for (const auto& l : split_lines(text)) {
    const auto t = tokens(l.text);
    if (!out) {
      if (t.size() != 4 || t[0] != "fps" || t[2] != "over") throw SyntaxError(l.number, "expected 'fps <name> over <fcat-file>'");
      out.emplace();
      out->name = t[1];
      out->base_path = t[3];
      out->presheaf.base = load_base(t[3]);
      const FinCategory& e = *out->presheaf.base;
      out->presheaf.values.assign(static_cast<std::size_t>(e.object_count()), {});
      out->presheaf.actions.assign(static_cast<std::size_t>(e.morphism_count()), {});
      declared.assign(static_cast<std::size_t>(e.object_count()), false);
      continue;
    }
    const FinCategory& e = *out->presheaf.base;
    auto& p = out->presheaf;
    if (t[0] == "set") {
      const auto eq = l.text.find('=');
      const auto open = l.text.find('{'), close = l.text.rfind('}');
      if (t.size() < 3 || eq == std::string::npos || open == std::string::npos || close == std::string::npos || close < open)
        throw SyntaxError(l.number, "expected 'set <obj> = {e1,e2,...}'");
      auto o = e.find_object(t[1]);
      if (!o) throw SyntaxError(l.number, "unknown object '" + t[1] + "'");
      if (declared[static_cast<std::size_t>(*o)]) throw SyntaxError(l.number, "set for '" + t[1] + "' given twice");
      declared[static_cast<std::size_t>(*o)] = true;
      std::istringstream in(l.text.substr(open + 1, close - open - 1));
      auto& vals = p.values[static_cast<std::size_t>(*o)];
      for (std::string part; std::getline(in, part, ',');) {
        const auto v = trim(part);
        if (v.empty()) continue;
        if (std::find(vals.begin(), vals.end(), v) != vals.end()) throw SyntaxError(l.number, "element '" + v + "' repeated");
        vals.push_back(v);
      }
    } else if (t[0] == "act") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "->") throw SyntaxError(l.number, "expected 'act <mor> : e -> e''");
      auto m = e.find_morphism(t[1]);
      if (!m) throw SyntaxError(l.number, "unknown morphism '" + t[1] + "'");
      const auto& mor = e.morphism(*m);
      if (!declared[static_cast<std::size_t>(mor.src)] || !declared[static_cast<std::size_t>(mor.dst)])
        throw SyntaxError(l.number, "act before the sets of " + t[1] + " are given");
      const auto& src = p.values[static_cast<std::size_t>(mor.src)];
      const auto& dst = p.values[static_cast<std::size_t>(mor.dst)];
      const auto x = std::find(src.begin(), src.end(), t[3]);
      const auto y = std::find(dst.begin(), dst.end(), t[5]);
      if (x == src.end() || y == dst.end()) throw SyntaxError(l.number, "unknown element in act statement");
      auto& act = p.actions[static_cast<std::size_t>(*m)];
      act.resize(src.size(), -1);
      int& slot = act[static_cast<std::size_t>(x - src.begin())];
      if (slot >= 0) throw SyntaxError(l.number, "act for " + t[1] + " on '" + t[3] + "' given twice");
      slot = static_cast<int>(y - dst.begin());
    } else {
      throw SyntaxError(l.number, "unknown statement '" + t[0] + "'");
    }
  }
  if (!out) throw SyntaxError(1, "missing 'fps <name> over <fcat-file>'");
  const FinCategory& e = *out->presheaf.base;
  auto& p = out->presheaf;
  for (int m = 0; m < e.morphism_count(); ++m) {
    auto& act = p.actions[static_cast<std::size_t>(m)];
    const int n = p.size(e.morphism(m).src);
    if (e.is_identity(m)) {
      if (!act.empty()) {
        for (int x = 0; x < n; ++x)
          if (act[static_cast<std::size_t>(x)] >= 0 && act[static_cast<std::size_t>(x)] != x)
            throw ValidationError("identity " + e.morphism(m).name + " must act trivially");
      }
      act.resize(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) act[static_cast<std::size_t>(x)] = x;
      continue;
    }
    act.resize(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
      if (act[static_cast<std::size_t>(x)] < 0)
        throw ValidationError("no act line for " + e.morphism(m).name + " on '" +
                              p.values[static_cast<std::size_t>(e.morphism(m).src)][static_cast<std::size_t>(x)] + "'");
  }
  p.validate();
  return std::move(*out);
}

std::string serialize_fps(const std::string& name, const std::string& base_path, const FinPresheaf& p) {
  const FinCategory& e = *p.base;
  std::ostringstream out;
  require_token(name, "presheaf");
  out << "fps " << name << " over " << base_path << "\n";
  for (int o = 0; o < e.object_count(); ++o) {
    out << "set " << e.object(o) << " = {";
    for (int x = 0; x < p.size(o); ++x) {
      require_token(p.values[static_cast<std::size_t>(o)][static_cast<std::size_t>(x)], "element");
      out << (x ? "," : "") << p.values[static_cast<std::size_t>(o)][static_cast<std::size_t>(x)];
    }
    out << "}\n";
  }
  for (int m = 0; m < e.morphism_count(); ++m) {
    if (e.is_identity(m)) continue;
    const auto& mor = e.morphism(m);
    for (int x = 0; x < p.size(mor.src); ++x)
      out << "act " << mor.name << " : " << p.values[static_cast<std::size_t>(mor.src)][static_cast<std::size_t>(x)] << " -> "
          << p.values[static_cast<std::size_t>(mor.dst)][static_cast<std::size_t>(p.actions[static_cast<std::size_t>(m)][static_cast<std::size_t>(x)])]
          << "\n";
  }
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

SimplicialSet read_sset(const std::string& path) { return parse_sset(read_text(path)); }
FinCategory read_fcat(const std::string& path) { return parse_fcat(read_text(path)); }

PresheafFile read_fps(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_fps(read_text(path), [&](const std::string& base) {
    const auto p = std::filesystem::path(base);
    return std::make_shared<const FinCategory>(read_fcat((p.is_absolute() ? p : dir / p).string()));
  });
}

}  // namespace sct

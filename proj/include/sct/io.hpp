#pragma once

// Text formats: .sset simplicial sets, .fcat finite categories and .fps
// presheaves. One statement per line; '#' starts a comment.

#include <functional>
#include <string>
#include <vector>

#include "sct/fincat.hpp"
#include "sct/presheaf.hpp"
#include "sct/simpset.hpp"

namespace sct {

/// A face statement whose degeneracy list is not strictly decreasing.
struct NonNormalFace {
  int line = 0;
  std::string simplex;
  int k = 0;
  DegeneracyWord given;
  DegeneracyWord normal;
};

/// Parses a .sset file. Strict parsing rejects non-normal degeneracy lists;
/// otherwise they are normalized and reported in `non_normal`.
SimplicialSet parse_sset(const std::string& text, bool strict = true, std::vector<NonNormalFace>* non_normal = nullptr);
std::string serialize_sset(const SimplicialSet& x);

/// Parses a .fcat file and runs validate_category (ValidationError).
/// A comment after a comp statement is kept as the cell's tag.
FinCategory parse_fcat(const std::string& text);
std::string serialize_fcat(const FinCategory& c);

struct PresheafFile {
  std::string name;
  std::string base_path;  // as written in the file
  FinPresheaf presheaf;
};
/// `load_base` resolves the path after "over".
PresheafFile parse_fps(const std::string& text, const std::function<CategoryPtr(const std::string&)>& load_base);
std::string serialize_fps(const std::string& name, const std::string& base_path, const FinPresheaf& p);

/// File helpers; I/O failures raise InputError.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
SimplicialSet read_sset(const std::string& path);
FinCategory read_fcat(const std::string& path);
/// The base path is resolved relative to the .fps file.
PresheafFile read_fps(const std::string& path);

}  // namespace sct

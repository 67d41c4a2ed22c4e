#include <sstream>

#include "sct/error.hpp"
#include "sct/simpset.hpp"

namespace sct {

bool DegeneracyWord::is_normal() const {
  for (std::size_t t = 1; t < indices.size(); ++t)
    if (indices[t - 1] <= indices[t]) return false;
  return true;
}

bool DegeneracyWord::applicable(int base_dim) const {
  if (base_dim < 0) return false;
  int d = base_dim;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    if (*it < 0 || *it > d) return false;
    ++d;
  }
  return d <= kMaxDim;
}

std::string DegeneracyWord::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t t = 0; t < indices.size(); ++t) os << (t ? "," : "") << indices[t];
  os << ']';
  return os.str();
}

namespace degen {

std::uint32_t apply_degeneracy(std::uint32_t m, int k) {
  const std::uint32_t lo = low_bits(k);
  return (m & lo) | (1u << k) | ((m & ~lo) << 1);
}

std::uint32_t remove_bit(std::uint32_t m, int p) {
  const std::uint32_t lo = low_bits(p);
  return (m & lo) | ((m >> 1) & ~lo);
}

std::uint32_t compose(std::uint32_t outer, std::uint32_t inner, int n) {
  std::uint32_t out = 0;
  for (int j = 0; j < n; ++j) {
    if ((inner >> j) & 1u) {
      out |= 1u << j;
    } else if ((outer >> image_of(inner, j)) & 1u) {
      out |= 1u << j;
    }
  }
  return out;
}

std::uint32_t from_word(const DegeneracyWord& w, int base_dim) {
  if (!w.applicable(base_dim))
    throw DimensionError("degeneracy word " + w.str() + " is not applicable to a " +
                         std::to_string(base_dim) + "-simplex");
  std::uint32_t m = 0;
  for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) m = apply_degeneracy(m, *it);
  return m;
}

DegeneracyWord to_word(std::uint32_t m, int n) {
  DegeneracyWord w;
  for (int j = n - 1; j >= 0; --j)
    if ((m >> j) & 1u) w.indices.push_back(j);
  return w;
}

}  // namespace degen

SimplexRef normalize(const SimplicialSet& x, int base, const DegeneracyWord& word) {
  if (base < 0 || base >= x.size()) throw ParameterError("normalize: unknown base simplex");
  const int d = x.simplex(base).dim;
  const std::uint32_t m = degen::from_word(word, d);
  return {base, d + static_cast<int>(word.indices.size()), m};
}

SimplexRef apply_operator(const SimplicialSet& x, const SimplexRef& r, OperatorKind op, int k) {
  return op == OperatorKind::face ? x.face(r, k) : x.degeneracy(r, k);
}

}  // namespace sct

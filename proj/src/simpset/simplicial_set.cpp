#include <algorithm>
#include <sstream>

#include "sct/error.hpp"
#include "sct/simpset.hpp"

namespace sct {

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
  return r;
}

}  // namespace

SimplicialSet::SimplicialSet(std::string name, int dim_cap) : name_(std::move(name)), dim_cap_(dim_cap) {
  if (dim_cap < 0 || dim_cap > kMaxDim) throw ParameterError("dim_cap out of range");
  by_dim_.resize(static_cast<std::size_t>(dim_cap) + 1);
}

int SimplicialSet::add_simplex(std::string name, int dim, std::vector<SimplexRef> faces) {
  if (dim < 0 || dim > dim_cap_)
    throw ParameterError("simplex '" + name + "' has dimension outside 0.." + std::to_string(dim_cap_));
  if (index_.count(name)) throw ParameterError("duplicate simplex name '" + name + "'");
  const std::size_t expected = dim == 0 ? 0 : static_cast<std::size_t>(dim) + 1;
  if (faces.size() != expected)
    throw ValidationError("simplex '" + name + "' needs " + std::to_string(expected) + " faces");
  for (const auto& f : faces) {
    check_ref(f);
    if (f.dim != dim - 1)
      throw ValidationError("face of '" + name + "' has dimension " + std::to_string(f.dim));
  }
  const int id = size();
  simplices_.push_back({name, dim, std::move(faces)});
  by_dim_[static_cast<std::size_t>(dim)].push_back(id);
  index_.emplace(std::move(name), id);
  return id;
}

void SimplicialSet::check_ref(const SimplexRef& r) const {
  if (r.base < 0 || r.base >= size()) throw ValidationError("reference to unknown simplex");
  if (r.dim < 0 || r.dim > kMaxDim) throw ValidationError("reference dimension out of range");
  if (r.dim < 32 && (r.degen >> r.dim) != 0) throw ValidationError("degeneracy index out of range");
  if (r.base_dim() != simplex(r.base).dim) throw ValidationError("reference dimension mismatch");
}

int SimplicialSet::top_dim() const {
  for (int n = dim_cap_; n >= 0; --n)
    if (!by_dim_[static_cast<std::size_t>(n)].empty()) return n;
  return -1;
}

const std::vector<int>& SimplicialSet::nondeg_at(int n) const {
  static const std::vector<int> none;
  if (n < 0 || n > dim_cap_) return none;
  return by_dim_[static_cast<std::size_t>(n)];
}

std::optional<int> SimplicialSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SimplicialSet::require(std::string_view name) const {
  auto id = find(name);
  if (!id) throw ParameterError("unknown simplex '" + std::string(name) + "' in " + name_);
  return *id;
}

SimplexRef SimplicialSet::face(const SimplexRef& r, int k) const {
  check_ref(r);
  const int n = r.dim;
  if (k < 0 || k > n || n == 0)
    throw ParameterError("face index " + std::to_string(k) + " out of range for a " +
                         std::to_string(n) + "-simplex");
  const std::uint32_t m = r.degen;
  if (k < n && ((m >> k) & 1u)) return {r.base, n - 1, degen::remove_bit(m, k)};
  if (k > 0 && ((m >> (k - 1)) & 1u)) return {r.base, n - 1, degen::remove_bit(m, k - 1)};
  // k is alone in its fibre: the face lands on a face of the base.
  const int v = degen::image_of(m, k);
  const SimplexRef& f = simplex(r.base).faces[static_cast<std::size_t>(v)];
  return degenerate(f, degen::remove_bit(m, k), n - 1);
}

SimplexRef SimplicialSet::degeneracy(const SimplexRef& r, int k) const {
  check_ref(r);
  if (k < 0 || k > r.dim)
    throw ParameterError("degeneracy index " + std::to_string(k) + " out of range for a " +
                         std::to_string(r.dim) + "-simplex");
  if (r.dim + 1 > level_limit())
    throw TruncationError("degeneracy s" + std::to_string(k) + " exceeds dim_cap " +
                          std::to_string(dim_cap_) + " of " + name_);
  return {r.base, r.dim + 1, degen::apply_degeneracy(r.degen, k)};
}

SimplexRef SimplicialSet::degenerate(const SimplexRef& r, std::uint32_t mask, int n) const {
  return {r.base, n, degen::compose(r.degen, mask, n)};
}

SimplexRef SimplicialSet::apply(const SimplexRef& r, std::span<const int> theta) const {
  check_ref(r);
  if (theta.empty()) throw ParameterError("apply: empty operator");
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (theta[t] < 0 || theta[t] > r.dim || (t && theta[t] < theta[t - 1]))
      throw ParameterError("apply: operator is not a monotone map into [" + std::to_string(r.dim) + "]");
  }
  const int d = r.base_dim();
  std::vector<int> c(theta.size());
  std::vector<bool> hit(static_cast<std::size_t>(d) + 1, false);
  for (std::size_t t = 0; t < theta.size(); ++t) {
    c[t] = degen::image_of(r.degen, theta[t]);
    hit[static_cast<std::size_t>(c[t])] = true;
  }
  SimplexRef cur = ref(r.base);
  for (int v = d; v >= 0; --v)
    if (!hit[static_cast<std::size_t>(v)]) cur = face(cur, v);
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t + 1 < c.size(); ++t)
    if (c[t] == c[t + 1]) mask |= 1u << t;
  return degenerate(cur, mask, static_cast<int>(theta.size()) - 1);
}

int SimplicialSet::vertex(const SimplexRef& r, int k) const {
  const int theta[1] = {k};
  return apply(r, theta).base;
}

std::vector<int> SimplicialSet::vertices(const SimplexRef& r) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(r.dim) + 1);
  for (int k = 0; k <= r.dim; ++k) out.push_back(vertex(r, k));
  return out;
}

std::vector<SimplexRef> SimplicialSet::simplices_at(int n) const {
  if (n < 0) throw ParameterError("negative level");
  if (n > level_limit())
    throw TruncationError("level " + std::to_string(n) + " exceeds dim_cap " + std::to_string(dim_cap_) +
                          " of " + name_);
  std::vector<SimplexRef> out;
  out.reserve(count_at(n));
  for (int id = 0; id < size(); ++id) {
    const int d = simplices_[static_cast<std::size_t>(id)].dim;
    if (d > n) continue;
    const int ones = n - d;
    if (ones == 0) {
      out.push_back({id, n, 0});
      continue;
    }
    // Gosper's hack over n-bit masks with `ones` bits set.
    std::uint64_t m = (std::uint64_t{1} << ones) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (m < limit) {
      out.push_back({id, n, static_cast<std::uint32_t>(m)});
      const std::uint64_t c = m & (~m + 1);
      const std::uint64_t rr = m + c;
      m = (((rr ^ m) >> 2) / c) | rr;
    }
  }
  return out;
}

std::size_t SimplicialSet::count_at(int n) const {
  std::size_t total = 0;
  for (int d = 0; d <= std::min(n, dim_cap_); ++d)
    total += by_dim_[static_cast<std::size_t>(d)].size() * binomial(n, n - d);
  return total;
}

std::vector<std::size_t> SimplicialSet::nondeg_counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_dim_) out.push_back(level.size());
  return out;
}

std::string SimplicialSet::label(const SimplexRef& r) const {
  const std::string& base = simplex(r.base).name;
  if (r.nondegenerate()) return base;
  std::ostringstream os;
  os << base << '^';
  for (int j : r.word().indices) os << 's' << j;
  return os.str();
}

void SimplicialSet::validate() const {
  for (int id = 0; id < size(); ++id) {
    const auto& s = simplices_[static_cast<std::size_t>(id)];
    if (s.dim > dim_cap_) throw ValidationError("simplex '" + s.name + "' above dim_cap");
    const std::size_t expected = s.dim == 0 ? 0 : static_cast<std::size_t>(s.dim) + 1;
    if (s.faces.size() != expected) throw ValidationError("simplex '" + s.name + "' has wrong face count");
    for (const auto& f : s.faces) {
      check_ref(f);
      if (f.dim != s.dim - 1) throw ValidationError("face of '" + s.name + "' has wrong dimension");
    }
    if (s.dim < 2) continue;
    const SimplexRef r = ref(id);
    for (int j = 1; j <= s.dim; ++j) {
      for (int i = 0; i < j; ++i) {
        if (face(face(r, j), i) != face(face(r, i), j - 1)) {
          std::ostringstream os;
          os << "simplicial identity d" << i << " d" << j << " = d" << j - 1 << " d" << i
             << " fails on '" << s.name << "'";
          throw ValidationError(os.str());
        }
      }
    }
  }
}

}  // namespace sct

#include "mpmorse/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "mpmorse/error.hpp"

namespace mpmorse {

namespace {

constexpr int kMaxTopDimension = 15;

void canonicalize(std::vector<VertexId>& vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("simplex has a repeated vertex");
}

}  // namespace

Simplex::Simplex(std::initializer_list<VertexId> vertices) : vertices_(vertices) {
  canonicalize(vertices_);
}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  canonicalize(vertices_);
}

std::string Simplex::to_string() const { return fmt::format("({})", fmt::join(vertices_, ",")); }

bool precedes(std::span<const double> u, std::span<const double> v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

bool strictly_precedes(std::span<const double> u, std::span<const double> v) {
  return precedes(u, v) && !same_grade(u, v);
}

bool same_grade(std::span<const double> u, std::span<const double> v) {
  return std::equal(u.begin(), u.end(), v.begin(), v.end());
}

bool lex_less(std::span<const double> u, std::span<const double> v) {
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

// ---------------------------------------------------------------------------

std::size_t SimplicialComplex::count(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return dim_offset_[k + 1] - dim_offset_[k];
}

std::pair<SimplexId, SimplexId> SimplicialComplex::dimension_range(int k) const {
  if (k < 0 || k > dimension()) {
    auto end = static_cast<SimplexId>(size());
    return {end, end};
  }
  return {dim_offset_[k], dim_offset_[k + 1]};
}

std::span<const VertexId> SimplicialComplex::vertices(SimplexId s) const {
  int k = dim_of_[s];
  std::size_t local = s - dim_offset_[k];
  return {by_dim_[k].data() + local * (k + 1), static_cast<std::size_t>(k + 1)};
}

Simplex SimplicialComplex::simplex(SimplexId s) const {
  auto v = vertices(s);
  return Simplex(std::vector<VertexId>(v.begin(), v.end()));
}

std::span<const SimplexId> SimplicialComplex::facets(SimplexId s) const {
  return {facets_.data() + facet_offset_[s], facet_offset_[s + 1] - facet_offset_[s]};
}

std::span<const SimplexId> SimplicialComplex::cofacets(SimplexId s) const {
  return {cofacets_.data() + cofacet_offset_[s], cofacet_offset_[s + 1] - cofacet_offset_[s]};
}

std::span<const SimplexId> SimplicialComplex::vertex_star(VertexId v) const {
  return {stars_.data() + star_offset_[v], star_offset_[v + 1] - star_offset_[v]};
}

std::optional<SimplexId> SimplicialComplex::find(std::span<const VertexId> key) const {
  if (key.empty()) return std::nullopt;
  int k = static_cast<int>(key.size()) - 1;
  if (k > dimension()) return std::nullopt;
  const auto& block = by_dim_[k];
  std::size_t stride = key.size();
  std::size_t lo = 0;
  std::size_t hi = block.size() / stride;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    const VertexId* p = block.data() + mid * stride;
    if (std::lexicographical_compare(p, p + stride, key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < block.size() / stride &&
      std::equal(key.begin(), key.end(), block.data() + lo * stride))
    return static_cast<SimplexId>(dim_offset_[k] + lo);
  return std::nullopt;
}

SimplexId SimplicialComplex::id_of(const Simplex& s) const {
  if (auto id = find(s)) return *id;
  throw std::out_of_range(fmt::format("simplex {} is not in the complex", s.to_string()));
}

bool SimplicialComplex::is_face(SimplexId a, SimplexId b) const {
  auto va = vertices(a);
  auto vb = vertices(b);
  return std::includes(vb.begin(), vb.end(), va.begin(), va.end());
}

SimplicialComplex build_complex(std::size_t vertex_count,
                                std::span<const std::vector<VertexId>> top_simplices) {
  SimplicialComplex c;
  int top_dim = vertex_count > 0 ? 0 : -1;

  std::vector<std::vector<VertexId>> tops;
  tops.reserve(top_simplices.size());
  for (const auto& t : top_simplices) {
    if (t.empty()) throw std::invalid_argument("empty top simplex");
    for (VertexId v : t)
      if (v >= vertex_count)
        throw std::invalid_argument(
            fmt::format("vertex id {} out of range [0, {})", v, vertex_count));
    auto sorted = t;
    canonicalize(sorted);
    int k = static_cast<int>(sorted.size()) - 1;
    if (k > kMaxTopDimension)
      throw std::invalid_argument(fmt::format("simplex dimension {} is too large", k));
    top_dim = std::max(top_dim, k);
    tops.push_back(std::move(sorted));
  }

  c.by_dim_.assign(static_cast<std::size_t>(top_dim + 1), {});
  if (top_dim < 0) {
    c.dim_offset_ = {0};
    c.facet_offset_ = {0};
    c.cofacet_offset_ = {0};
    c.star_offset_ = {0};
    return c;
  }

  // Face closure: every non-empty subset of every top simplex. Vertices are
  // added explicitly so that isolated vertices are kept.
  std::vector<std::vector<VertexId>> faces(top_dim + 1);
  for (VertexId v = 0; v < vertex_count; ++v) faces[0].push_back(v);
  for (const auto& t : tops) {
    std::size_t n = t.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      int k = std::popcount(mask) - 1;
      if (k == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) faces[k].push_back(t[i]);
    }
  }

  for (int k = 0; k <= top_dim; ++k) {
    std::size_t stride = k + 1;
    std::size_t n = faces[k].size() / stride;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const VertexId* base = faces[k].data();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(base + a * stride, base + (a + 1) * stride,
                                          base + b * stride, base + (b + 1) * stride);
    });
    auto& block = c.by_dim_[k];
    block.reserve(faces[k].size());
    for (std::size_t i = 0; i < n; ++i) {
      const VertexId* p = base + order[i] * stride;
      if (!block.empty() &&
          std::equal(p, p + stride, block.end() - static_cast<std::ptrdiff_t>(stride)))
        continue;
      block.insert(block.end(), p, p + stride);
    }
    std::vector<VertexId>().swap(faces[k]);
  }

  c.dim_offset_.assign(top_dim + 2, 0);
  for (int k = 0; k <= top_dim; ++k)
    c.dim_offset_[k + 1] = c.dim_offset_[k] + static_cast<SimplexId>(c.by_dim_[k].size() / (k + 1));
  std::size_t total = c.dim_offset_.back();

  c.dim_of_.resize(total);
  for (int k = 0; k <= top_dim; ++k)
    std::fill(c.dim_of_.begin() + c.dim_offset_[k], c.dim_of_.begin() + c.dim_offset_[k + 1],
              static_cast<std::uint8_t>(k));

  // Facets: delete each vertex in turn.
  c.facet_offset_.assign(total + 1, 0);
  for (SimplexId s = 0; s < total; ++s) {
    int k = c.dim_of_[s];
    c.facet_offset_[s + 1] = c.facet_offset_[s] + (k == 0 ? 0 : k + 1);
  }
  c.facets_.resize(c.facet_offset_.back());
  std::vector<VertexId> scratch;
  for (SimplexId s = 0; s < total; ++s) {
    int k = c.dim_of_[s];
    if (k == 0) continue;
    auto v = c.vertices(s);
    for (int drop = 0; drop <= k; ++drop) {
      scratch.clear();
      for (int i = 0; i <= k; ++i)
        if (i != drop) scratch.push_back(v[i]);
      c.facets_[c.facet_offset_[s] + drop] = *c.find(scratch);
    }
  }

  // Cofacets, in increasing id order.
  c.cofacet_offset_.assign(total + 1, 0);
  for (SimplexId f : c.facets_) ++c.cofacet_offset_[f + 1];
  std::partial_sum(c.cofacet_offset_.begin(), c.cofacet_offset_.end(), c.cofacet_offset_.begin());
  c.cofacets_.resize(c.cofacet_offset_.back());
  {
    std::vector<std::size_t> fill(c.cofacet_offset_.begin(), c.cofacet_offset_.end() - 1);
    for (SimplexId s = 0; s < total; ++s)
      for (SimplexId f : c.facets(s)) c.cofacets_[fill[f]++] = s;
  }

  // Vertex stars.
  c.star_offset_.assign(vertex_count + 1, 0);
  for (SimplexId s = 0; s < total; ++s)
    for (VertexId v : c.vertices(s)) ++c.star_offset_[v + 1];
  std::partial_sum(c.star_offset_.begin(), c.star_offset_.end(), c.star_offset_.begin());
  c.stars_.resize(c.star_offset_.back());
  {
    std::vector<std::size_t> fill(c.star_offset_.begin(), c.star_offset_.end() - 1);
    for (SimplexId s = 0; s < total; ++s)
      for (VertexId v : c.vertices(s)) c.stars_[fill[v]++] = s;
  }

  return c;
}

SimplicialComplex build_complex(std::size_t vertex_count,
                                std::initializer_list<std::vector<VertexId>> top_simplices) {
  return build_complex(vertex_count,
                       std::span<const std::vector<VertexId>>(top_simplices.begin(),
                                                              top_simplices.size()));
}

std::vector<SimplexId> star(const SimplicialComplex& c, SimplexId s) {
  std::vector<SimplexId> out;
  auto v = c.vertices(s);
  for (SimplexId t : c.vertex_star(v.front()))
    if (c.dimension(t) >= c.dimension(s) && c.is_face(s, t)) out.push_back(t);
  return out;
}

std::vector<Simplex> star(const SimplicialComplex& c, const Simplex& s) {
  std::vector<Simplex> out;
  for (SimplexId t : star(c, c.id_of(s))) out.push_back(c.simplex(t));
  return out;
}

// ---------------------------------------------------------------------------

VertexFunction::VertexFunction(std::size_t parameters, std::vector<double> values)
    : parameters_(parameters), values_(std::move(values)) {
  if (parameters_ == 0 || values_.size() % parameters_ != 0)
    throw std::invalid_argument("vertex function size is not a multiple of the parameter count");
}

VertexFunction::VertexFunction(std::initializer_list<Multigrade> grades) {
  if (grades.size() == 0) return;
  parameters_ = grades.begin()->size();
  for (const auto& g : grades) {
    if (g.size() != parameters_)
      throw std::invalid_argument("vertex grades have different lengths");
    values_.insert(values_.end(), g.components().begin(), g.components().end());
  }
}

std::optional<InjectivityViolation> find_injectivity_violation(const VertexFunction& f) {
  std::size_t n = f.vertex_count();
  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < f.parameters(); ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return f(a, i) < f(b, i); });
    for (std::size_t j = 1; j < n; ++j)
      if (f(order[j - 1], i) == f(order[j], i))
        return InjectivityViolation{i, std::min(order[j - 1], order[j]),
                                    std::max(order[j - 1], order[j])};
  }
  return std::nullopt;
}

VertexFunction make_injective(const VertexFunction& f) {
  std::size_t n = f.vertex_count();
  VertexFunction out(n, f.parameters());
  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < f.parameters(); ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return f(a, i) < f(b, i); });
    for (std::size_t r = 0; r < n; ++r) out(order[r], i) = static_cast<double>(r);
  }
  return out;
}

MultiFiltration extend_filtration(const SimplicialComplex& c, const VertexFunction& f) {
  if (f.vertex_count() != c.vertex_count())
    throw std::invalid_argument(fmt::format("vertex function covers {} vertices, complex has {}",
                                            f.vertex_count(), c.vertex_count()));
  if (auto bad = find_injectivity_violation(f))
    throw InjectivityError(fmt::format(
        "component {} is not injective: vertices {} and {} share the value {}", bad->component,
        bad->first, bad->second, f(bad->first, bad->component)));

  MultiFiltration mf;
  std::size_t n = f.parameters();
  mf.parameters_ = n;
  mf.grades_.resize(c.size() * n);
  for (SimplexId s = 0; s < c.size(); ++s) {
    auto v = c.vertices(s);
    double* out = mf.grades_.data() + static_cast<std::size_t>(s) * n;
    for (std::size_t i = 0; i < n; ++i) {
      double m = f(v[0], i);
      for (std::size_t j = 1; j < v.size(); ++j) m = std::max(m, f(v[j], i));
      out[i] = m;
    }
  }
  return mf;
}

}  // namespace mpmorse

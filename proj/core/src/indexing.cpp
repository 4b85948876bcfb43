#include "mpmorse/indexing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "mpmorse/error.hpp"

namespace mpmorse {

VertexIndexing::VertexIndexing(std::vector<std::uint32_t> rank)
    : rank_(std::move(rank)), by_rank_(rank_.size()) {
  std::vector<bool> seen(rank_.size(), false);
  for (VertexId v = 0; v < rank_.size(); ++v) {
    if (rank_[v] >= rank_.size() || seen[rank_[v]])
      throw std::invalid_argument("vertex ranks are not a permutation");
    seen[rank_[v]] = true;
    by_rank_[rank_[v]] = v;
  }
}

std::uint32_t VertexIndexing::simplex_rank(const SimplicialComplex& c, SimplexId s) const {
  std::uint32_t r = 0;
  for (VertexId v : c.vertices(s)) r = std::max(r, rank_[v]);
  return r;
}

VertexId VertexIndexing::top_vertex(const SimplicialComplex& c, SimplexId s) const {
  auto vs = c.vertices(s);
  return *std::max_element(vs.begin(), vs.end(),
                           [&](VertexId a, VertexId b) { return rank_[a] < rank_[b]; });
}

std::vector<std::uint32_t> VertexIndexing::lex_key(const SimplicialComplex& c,
                                                   SimplexId s) const {
  std::vector<std::uint32_t> key;
  for (VertexId v : c.vertices(s)) key.push_back(rank_[v]);
  std::sort(key.begin(), key.end(), std::greater<>());
  return key;
}

VertexIndexing compute_indexing(const MultiFiltration& mf, std::size_t vertex_count) {
  std::vector<VertexId> order(vertex_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return mf.vertex_grade(a)[0] < mf.vertex_grade(b)[0];
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (mf.vertex_grade(order[i - 1])[0] == mf.vertex_grade(order[i])[0])
      throw InjectivityError(fmt::format("vertices {} and {} share the first component {}",
                                         order[i - 1], order[i],
                                         mf.vertex_grade(order[i])[0]));
  std::vector<std::uint32_t> rank(vertex_count);
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return VertexIndexing(std::move(rank));
}

bool IndexLexOrder::operator()(SimplexId a, SimplexId b) const {
  int da = c_->dimension(a);
  int db = c_->dimension(b);
  if (da != db) return da < db;
  // Both tuples have da+1 entries; compare decreasing-rank tuples without
  // allocating.
  constexpr std::size_t kInline = 16;
  std::uint32_t ka[kInline];
  std::uint32_t kb[kInline];
  auto va = c_->vertices(a);
  auto vb = c_->vertices(b);
  std::size_t n = va.size();
  for (std::size_t i = 0; i < n; ++i) {
    ka[i] = idx_->rank(va[i]);
    kb[i] = idx_->rank(vb[i]);
  }
  std::sort(ka, ka + n, std::greater<>());
  std::sort(kb, kb + n, std::greater<>());
  return std::lexicographical_compare(ka, ka + n, kb, kb + n);
}

std::vector<SimplexId> index_lower_star(VertexId v, const VertexIndexing& idx,
                                        const SimplicialComplex& c) {
  std::vector<SimplexId> low;
  std::uint32_t r = idx.rank(v);
  for (SimplexId s : c.vertex_star(v))
    if (idx.simplex_rank(c, s) == r) low.push_back(s);
  return low;
}

std::vector<LevelSet> split_index_lower_star(VertexId owner, std::span<const SimplexId> low,
                                             const SimplicialComplex& c,
                                             const MultiFiltration& mf,
                                             const VertexIndexing& idx) {
  auto grade_less = [&](SimplexId a, SimplexId b) { return lex_less(mf.grade(a), mf.grade(b)); };
  std::map<SimplexId, std::vector<SimplexId>, decltype(grade_less)> groups(grade_less);
  for (SimplexId s : low) {
    auto it = groups.find(s);
    if (it == groups.end()) groups.emplace(s, std::vector<SimplexId>{s});
    else it->second.push_back(s);
  }

  IndexLexOrder order(c, idx);
  std::vector<LevelSet> out;
  out.reserve(groups.size());
  for (auto& [rep, members] : groups) {
    std::sort(members.begin(), members.end(), order);
    out.push_back(LevelSet{owner, mf.multigrade(rep), std::move(members)});
  }
  return out;
}

std::vector<LevelSet> decompose(const SimplicialComplex& c, const MultiFiltration& mf,
                                const VertexIndexing& idx) {
  std::vector<LevelSet> out;
  for (std::uint32_t r = 0; r < idx.size(); ++r) {
    VertexId v = idx.vertex_at(r);
    auto low = index_lower_star(v, idx, c);
    auto sets = split_index_lower_star(v, low, c, mf, idx);
    std::move(sets.begin(), sets.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace mpmorse

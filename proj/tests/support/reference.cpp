#include "reference.hpp"

#include <algorithm>

namespace mpmorse::testing {

std::vector<SimplexId> reference_star(const SimplicialComplex& c, SimplexId s) {
  auto vs = c.vertices(s);
  std::vector<SimplexId> out;
  for (SimplexId t = 0; t < c.size(); ++t) {
    auto vt = c.vertices(t);
    if (std::includes(vt.begin(), vt.end(), vs.begin(), vs.end())) out.push_back(t);
  }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][col])
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] ^ rows[rank][j];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> reference_betti(const SimplicialComplex& c,
                                         const std::vector<bool>& members) {
  int top = c.size() == 0 ? -1 : c.dimension(static_cast<SimplexId>(c.size() - 1));
  for (SimplexId s = 0; s < c.size(); ++s) top = std::max(top, c.dimension(s));
  auto in = [&](SimplexId s) { return members.empty() || members[s]; };

  std::vector<std::vector<SimplexId>> by_dim(top + 2);
  for (SimplexId s = 0; s < c.size(); ++s)
    if (in(s)) by_dim[c.dimension(s)].push_back(s);

  // rank of the boundary from dimension k to k-1.
  auto boundary_rank = [&](int k) -> std::size_t {
    if (k <= 0 || k > top) return 0;
    const auto& cols = by_dim[k];
    const auto& rows = by_dim[k - 1];
    if (cols.empty() || rows.empty()) return 0;
    std::vector<std::vector<bool>> m(cols.size(), std::vector<bool>(rows.size(), false));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto vt = c.vertices(cols[j]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto vs = c.vertices(rows[i]);
        m[j][i] = std::includes(vt.begin(), vt.end(), vs.begin(), vs.end());
      }
    }
    return dense_rank(std::move(m));
  };

  std::vector<std::size_t> betti(std::max(top + 1, 0));
  for (int k = 0; k <= top; ++k)
    betti[k] = by_dim[k].size() - boundary_rank(k) - boundary_rank(k + 1);
  return betti;
}

}  // namespace mpmorse::testing

#include "mpmorse/expansion.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>

namespace mpmorse {

namespace {

using Local = std::uint32_t;

/// Level-set members re-addressed by their position in the expansion order,
/// with facet and cofacet lists restricted to the set.
class LocalCells {
 public:
  LocalCells(const SimplicialComplex& c, std::vector<SimplexId> ordered)
      : ids_(std::move(ordered)) {
    std::vector<std::pair<SimplexId, Local>> lookup;
    lookup.reserve(ids_.size());
    for (Local i = 0; i < ids_.size(); ++i) lookup.emplace_back(ids_[i], i);
    std::sort(lookup.begin(), lookup.end());

    auto local_of = [&](SimplexId s) -> std::optional<Local> {
      auto it = std::lower_bound(lookup.begin(), lookup.end(), std::pair<SimplexId, Local>(s, 0));
      if (it != lookup.end() && it->first == s) return it->second;
      return std::nullopt;
    };

    facets_.resize(ids_.size());
    cofacets_.resize(ids_.size());
    for (Local i = 0; i < ids_.size(); ++i) {
      for (SimplexId f : c.facets(ids_[i]))
        if (auto j = local_of(f)) facets_[i].push_back(*j);
      for (SimplexId f : c.cofacets(ids_[i]))
        if (auto j = local_of(f)) cofacets_[i].push_back(*j);
    }
  }

  std::size_t size() const { return ids_.size(); }
  SimplexId id(Local i) const { return ids_[i]; }
  const std::vector<Local>& facets(Local i) const { return facets_[i]; }
  const std::vector<Local>& cofacets(Local i) const { return cofacets_[i]; }

 private:
  std::vector<SimplexId> ids_;
  std::vector<std::vector<Local>> facets_;
  std::vector<std::vector<Local>> cofacets_;
};

}  // namespace

ExpansionResult homotopy_expansion(const SimplicialComplex& c,
                                   std::span<const SimplexId> level_set,
                                   const SimplexLess& less) {
  std::vector<SimplexId> ordered(level_set.begin(), level_set.end());
  std::sort(ordered.begin(), ordered.end(), less);
  for (std::size_t i = 1; i < ordered.size(); ++i)
    if (!less(ordered[i - 1], ordered[i]))
      throw std::logic_error("simplex order is not total on the level set");

  LocalCells cells(c, std::move(ordered));
  std::vector<bool> declared(cells.size(), false);

  auto num_undeclared_facets = [&](Local t) {
    std::size_t n = 0;
    for (Local f : cells.facets(t)) n += !declared[f];
    return n;
  };
  auto unpaired_facet = [&](Local t) {
    for (Local f : cells.facets(t))
      if (!declared[f]) return f;
    throw std::logic_error("no undeclared facet");
  };

  // Positions in `cells` follow the expansion order, so ordered sets of
  // positions pop the smallest cell first.
  std::set<Local> ord0;
  std::set<Local> ord1;
  auto add_cofacets = [&](Local s) {
    for (Local t : cells.cofacets(s))
      if (!declared[t] && num_undeclared_facets(t) == 1) ord1.insert(t);
  };

  for (Local t = 0; t < cells.size(); ++t) {
    std::size_t n = num_undeclared_facets(t);
    if (n == 0) ord0.insert(t);
    else if (n == 1) ord1.insert(t);
  }

  ExpansionResult result;
  while (!ord1.empty() || !ord0.empty()) {
    while (!ord1.empty()) {
      Local t = *ord1.begin();
      ord1.erase(ord1.begin());
      if (declared[t]) continue;
      if (num_undeclared_facets(t) == 0) {
        ord0.insert(t);
      } else {
        Local s = unpaired_facet(t);
        ord0.erase(s);
        result.pairs.emplace_back(cells.id(s), cells.id(t));
        declared[s] = true;
        declared[t] = true;
        add_cofacets(s);
        add_cofacets(t);
      }
    }
    if (!ord0.empty()) {
      Local t = *ord0.begin();
      ord0.erase(ord0.begin());
      if (declared[t]) continue;
      result.criticals.push_back(cells.id(t));
      declared[t] = true;
      add_cofacets(t);
    }
  }
  if (std::find(declared.begin(), declared.end(), false) != declared.end())
    throw std::logic_error("homotopy expansion left a cell unclassified");
  return result;
}

}  // namespace mpmorse

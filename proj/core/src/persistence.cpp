#include "mpmorse/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace mpmorse {

namespace {

bool pair_less(const PersistencePair& a, const PersistencePair& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

bool close(double a, double b, double rel_tol) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::vector<PersistencePair> PersistenceDiagram::positive() const {
  std::vector<PersistencePair> out;
  for (const auto& p : pairs)
    if (p.essential() || p.death > p.birth) out.push_back(p);
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

std::size_t PersistenceDiagram::essential_count(int dim) const {
  return static_cast<std::size_t>(std::count_if(
      pairs.begin(), pairs.end(), [&](const auto& p) { return p.dim == dim && p.essential(); }));
}

std::vector<CellId> filtration_order(const LefschetzComplex& m, std::span<const double> phi) {
  if (phi.size() != m.size()) throw std::invalid_argument("filter size does not match the complex");
  for (CellId t = 0; t < m.size(); ++t)
    for (CellId s : m.facets(t))
      if (phi[s] > phi[t])
        throw std::invalid_argument(
            fmt::format("filter is not monotone: cell {} ({}) > cofacet {} ({})", s, phi[s], t, phi[t]));

  std::vector<CellId> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](CellId a, CellId b) {
    if (phi[a] != phi[b]) return phi[a] < phi[b];
    if (m.dimension(a) != m.dimension(b)) return m.dimension(a) < m.dimension(b);
    auto ka = m.key(a);
    auto kb = m.key(b);
    if (!std::equal(ka.begin(), ka.end(), kb.begin(), kb.end()))
      return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
    return a < b;
  });
  return order;
}

FiltrationMatrix build_filtration_matrix(const LefschetzComplex& m, std::span<const CellId> order,
                                         std::span<const double> phi) {
  std::vector<std::uint32_t> position(m.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  FiltrationMatrix d;
  d.columns.resize(order.size());
  d.values.resize(order.size());
  d.dims.resize(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    CellId c = order[i];
    d.values[i] = phi[c];
    d.dims[i] = m.dimension(c);
    auto& col = d.columns[i];
    for (CellId s : m.facets(c)) col.push_back(position[s]);
    std::sort(col.begin(), col.end());
  }
  return d;
}

ReducedPairs reduce(const FiltrationMatrix& d) {
  std::size_t n = d.size();
  std::vector<std::vector<std::uint32_t>> r = d.columns;
  constexpr std::uint32_t none = ReducedPairs::kUnpaired;
  std::vector<std::uint32_t> column_with_low(n, none);
  std::vector<std::uint32_t> scratch;
  std::vector<bool> killed(n, false);

  ReducedPairs out;
  for (std::uint32_t j = 0; j < n; ++j) {
    auto& col = r[j];
    while (!col.empty() && column_with_low[col.back()] != none)
      add_column(col, r[column_with_low[col.back()]], scratch);
    if (!col.empty()) {
      column_with_low[col.back()] = j;
      killed[col.back()] = true;
      out.pairs.emplace_back(col.back(), j);
    }
  }

  // Lowest ones of nonzero reduced columns are distinct by construction of
  // column_with_low; check it independently.
  std::vector<bool> seen(n, false);
  for (std::uint32_t j = 0; j < n; ++j) {
    if (r[j].empty()) continue;
    if (seen[r[j].back()]) throw std::logic_error("reduced matrix has repeated lowest ones");
    seen[r[j].back()] = true;
  }

  for (std::uint32_t j = 0; j < n; ++j)
    if (r[j].empty() && !killed[j]) out.pairs.emplace_back(j, none);
  return out;
}

PersistenceDiagram reindex(const ReducedPairs& r, const FiltrationMatrix& d) {
  PersistenceDiagram diagram;
  diagram.pairs.reserve(r.pairs.size());
  for (auto [birth, death] : r.pairs) {
    PersistencePair p;
    p.dim = d.dims[birth];
    p.birth = d.values[birth];
    p.death = death == ReducedPairs::kUnpaired ? kInfinity : d.values[death];
    diagram.pairs.push_back(p);
  }
  std::sort(diagram.pairs.begin(), diagram.pairs.end(), pair_less);
  return diagram;
}

PersistenceDiagram reduce_and_pair(const FiltrationMatrix& d) { return reindex(reduce(d), d); }

PersistenceDiagram compute_persistence(const LefschetzComplex& m, std::span<const double> phi) {
  auto order = filtration_order(m, phi);
  return reduce_and_pair(build_filtration_matrix(m, order, phi));
}

bool same_positive_persistence(const PersistenceDiagram& a, const PersistenceDiagram& b,
                               double rel_tol) {
  auto pa = a.positive();
  auto pb = b.positive();
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i].dim != pb[i].dim) return false;
    if (!close(pa[i].birth, pb[i].birth, rel_tol)) return false;
    if (!close(pa[i].death, pb[i].death, rel_tol)) return false;
  }
  return true;
}

void write_diagram_csv_header(std::ostream& out) { out << "dim,birth,death,lambda,b1,b2\n"; }

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& d, std::optional<SliceTag> tag) {
  auto pairs = d.pairs;
  std::sort(pairs.begin(), pairs.end(), pair_less);
  for (const auto& p : pairs) {
    fmt::print(out, "{},{},", p.dim, p.birth);
    if (p.essential()) out << "inf";
    else fmt::print(out, "{}", p.death);
    if (tag) fmt::print(out, ",{},{},{}\n", tag->lambda, tag->b1, tag->b2);
    else out << ",,,\n";
  }
}

}  // namespace mpmorse

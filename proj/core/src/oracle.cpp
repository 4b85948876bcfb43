#include "mpmorse/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "mpmorse/error.hpp"

namespace mpmorse::oracle {

GlobalIndexing build_global_indexing(const SimplicialComplex& c, const MultiFiltration& mf,
                                     const VertexIndexing& idx) {
  std::size_t n = c.size();
  std::vector<std::vector<SimplexId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (SimplexId a = 0; a < n; ++a)
    for (SimplexId b = 0; b < n; ++b) {
      if (a == b) continue;
      bool proper_face = c.dimension(a) < c.dimension(b) && c.is_face(a, b);
      if (proper_face || strictly_precedes(mf.grade(a), mf.grade(b))) {
        succ[a].push_back(b);
        ++indegree[b];
      }
    }

  IndexLexOrder lex(c, idx);
  auto tie_break = [&](SimplexId a, SimplexId b) {
    auto ra = idx.simplex_rank(c, a);
    auto rb = idx.simplex_rank(c, b);
    if (ra != rb) return ra < rb;
    return lex(a, b);
  };
  std::set<SimplexId, decltype(tie_break)> ready(tie_break);
  for (SimplexId s = 0; s < n; ++s)
    if (indegree[s] == 0) ready.insert(s);

  GlobalIndexing j;
  j.position.assign(n, 0);
  while (!ready.empty()) {
    SimplexId s = *ready.begin();
    ready.erase(ready.begin());
    j.position[s] = static_cast<std::uint32_t>(j.order.size());
    j.order.push_back(s);
    for (SimplexId t : succ[s])
      if (--indegree[t] == 0) ready.insert(t);
  }
  if (j.order.size() != n)
    throw std::logic_error("face and grade relations contain a cycle; the filtration is corrupt");
  return j;
}

std::vector<SimplexId> filtration_lower_star(const SimplicialComplex& c, const MultiFiltration& mf,
                                             SimplexId s) {
  std::vector<SimplexId> out;
  for (SimplexId t : star(c, s))
    if (precedes(mf.grade(t), mf.grade(s))) out.push_back(t);
  return out;
}

MatchingTrace matching_global(const SimplicialComplex& c, const MultiFiltration& mf,
                              const GlobalIndexing& j, const SimplexLess& less) {
  MatchingTrace trace{DiscreteGradient(c.size()), {}, {}};
  for (SimplexId s : j.order) {
    if (trace.gradient.is_classified(s)) continue;
    auto low = filtration_lower_star(c, mf, s);
    for (SimplexId t : low)
      if (trace.gradient.is_classified(t))
        throw std::logic_error(fmt::format("lower star of {} overlaps an earlier one", s));
    auto r = homotopy_expansion(c, low, less);
    for (auto [a, b] : r.pairs) trace.gradient.add_pair(a, b);
    for (SimplexId t : r.criticals) trace.gradient.add_critical(t);
    trace.primaries.push_back(s);
    trace.lower_stars.push_back(std::move(low));
  }
  return trace;
}

PartitionReport check_partition_equivalence(const SimplicialComplex& c, const MultiFiltration& mf) {
  PartitionReport report;
  auto idx = compute_indexing(mf, c.vertex_count());
  auto sets = decompose(c, mf, idx);

  std::vector<std::vector<SimplexId>> local;
  for (const auto& set : sets) {
    auto members = set.simplices;
    std::sort(members.begin(), members.end());
    local.push_back(std::move(members));
  }

  auto j = build_global_indexing(c, mf, idx);
  auto trace = matching_global(c, mf, j, IndexLexOrder(c, idx));
  auto global = trace.lower_stars;

  std::sort(local.begin(), local.end());
  std::sort(global.begin(), global.end());
  report.same_partition = local == global;
  if (!report.same_partition)
    report.detail = fmt::format("local decomposition has {} level sets, matching expanded {}",
                                local.size(), global.size());

  report.unique_representatives = true;
  for (const auto& members : local) {
    std::size_t hits = 0;
    SimplexId representative = kNoSimplex;
    for (SimplexId s : members)
      if (filtration_lower_star(c, mf, s) == members) {
        ++hits;
        representative = s;
      }
    bool ok = hits == 1;
    if (ok) {
      // The representative is the common face of every member.
      auto common = c.vertices(members.front());
      std::vector<VertexId> meet(common.begin(), common.end());
      for (SimplexId s : members) {
        auto v = c.vertices(s);
        std::vector<VertexId> next;
        std::set_intersection(meet.begin(), meet.end(), v.begin(), v.end(),
                              std::back_inserter(next));
        meet.swap(next);
      }
      auto rv = c.vertices(representative);
      ok = std::equal(meet.begin(), meet.end(), rv.begin(), rv.end());
    }
    if (!ok) {
      report.unique_representatives = false;
      if (report.detail.empty())
        report.detail = fmt::format("level set {{{}}} has {} representatives",
                                    fmt::join(members, ","), hits);
    }
  }
  return report;
}

bool verify_partition_equivalence(const SimplicialComplex& c, const MultiFiltration& mf) {
  return check_partition_equivalence(c, mf).ok();
}

DiscreteGradient matching_gradient(const SimplicialComplex& c, const MultiFiltration& mf) {
  auto idx = compute_indexing(mf, c.vertex_count());
  auto j = build_global_indexing(c, mf, idx);
  return matching_global(c, mf, j, IndexLexOrder(c, idx)).gradient;
}

// ---------------------------------------------------------------------------

GradePoset build_grade_poset(const LefschetzComplex& m) {
  GradePoset poset;
  poset.parameters = m.parameters();
  std::set<std::vector<double>> seen;
  std::vector<std::vector<double>> pending;
  for (CellId c = 0; c < m.size(); ++c) {
    std::vector<double> g(m.grade(c).begin(), m.grade(c).end());
    if (seen.insert(g).second) pending.push_back(std::move(g));
  }
  std::vector<std::vector<double>> closed;
  while (!pending.empty()) {
    auto g = std::move(pending.back());
    pending.pop_back();
    for (const auto& h : closed) {
      std::vector<double> join(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) join[i] = std::max(g[i], h[i]);
      if (seen.insert(join).second) pending.push_back(std::move(join));
    }
    closed.push_back(std::move(g));
  }
  poset.grades.assign(seen.begin(), seen.end());
  return poset;
}

namespace {

/// Dense F2 vector.
using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

int highest_bit(const Bits& b) {
  for (std::size_t w = b.size(); w-- > 0;)
    if (b[w]) return static_cast<int>(w * 64 + 63 - std::countl_zero(b[w]));
  return -1;
}

void xor_into(Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

/// Row-echelon basis keyed by highest set bit.
class Echelon {
 public:
  explicit Echelon(std::size_t bits) : pivots_(bits, -1) {}

  /// Adds v to the span; returns false when it was already in it.
  bool insert(Bits v) {
    for (;;) {
      int h = highest_bit(v);
      if (h < 0) return false;
      if (pivots_[h] < 0) {
        pivots_[h] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      xor_into(v, rows_[pivots_[h]]);
    }
  }
  std::size_t dim() const { return rows_.size(); }

 private:
  std::vector<int> pivots_;
  std::vector<Bits> rows_;
};

/// Kernel basis of the boundary restricted to `chains`, as chains over all
/// k-cells.
std::vector<Bits> cycle_basis(const std::vector<std::size_t>& chains, const std::vector<Bits>& boundary,
                              std::size_t chain_bits, std::size_t boundary_bits) {
  std::size_t cw = (chain_bits + 63) / 64;
  struct Row {
    Bits image;
    Bits chain;
  };
  std::vector<int> pivot(boundary_bits, -1);
  std::vector<Row> rows;
  std::vector<Bits> kernel;
  for (std::size_t i : chains) {
    Row r{boundary[i], Bits(cw, 0)};
    r.chain[i / 64] |= std::uint64_t{1} << (i % 64);
    for (;;) {
      int h = highest_bit(r.image);
      if (h < 0) {
        kernel.push_back(std::move(r.chain));
        break;
      }
      if (pivot[h] < 0) {
        pivot[h] = static_cast<int>(rows.size());
        rows.push_back(std::move(r));
        break;
      }
      xor_into(r.image, rows[pivot[h]].image);
      xor_into(r.chain, rows[pivot[h]].chain);
    }
  }
  return kernel;
}

}  // namespace

RankInvariant rank_invariant_bruteforce(const LefschetzComplex& m, const GradePoset& poset,
                                        int max_dim) {
  if (m.size() > kRankInvariantCellLimit)
    throw std::length_error(fmt::format("rank invariant oracle is limited to {} cells, got {}",
                                        kRankInvariantCellLimit, m.size()));
  RankInvariant result;
  std::size_t np = poset.grades.size();

  for (int k = 0; k <= max_dim; ++k) {
    auto cells = m.cells_of_dimension(k);
    auto lower = m.cells_of_dimension(k - 1);
    auto upper = m.cells_of_dimension(k + 1);
    std::size_t nk = cells.size();
    std::size_t kw = (nk + 63) / 64;
    std::size_t lw = (lower.size() + 63) / 64;

    std::vector<std::size_t> slot_k(m.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) slot_k[cells[i]] = i;
    std::vector<std::size_t> slot_lower(m.size(), 0);
    for (std::size_t i = 0; i < lower.size(); ++i) slot_lower[lower[i]] = i;

    std::vector<Bits> boundary_k(nk, Bits(lw, 0));
    for (std::size_t i = 0; i < nk; ++i)
      for (CellId s : m.facets(cells[i])) {
        auto r = slot_lower[s];
        boundary_k[i][r / 64] |= std::uint64_t{1} << (r % 64);
      }
    std::vector<Bits> boundary_up(upper.size(), Bits(kw, 0));
    for (std::size_t i = 0; i < upper.size(); ++i)
      for (CellId s : m.facets(upper[i])) {
        auto r = slot_k[s];
        boundary_up[i][r / 64] |= std::uint64_t{1} << (r % 64);
      }

    auto sublevel = [&](const std::vector<CellId>& pool, std::size_t g) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (precedes(m.grade(pool[i]), poset.grades[g])) out.push_back(i);
      return out;
    };

    std::vector<std::vector<Bits>> cycles(np);
    std::vector<std::vector<Bits>> boundaries(np);
    for (std::size_t g = 0; g < np; ++g) {
      cycles[g] = cycle_basis(sublevel(cells, g), boundary_k, nk, lower.size());
      Echelon e(nk);
      for (std::size_t i : sublevel(upper, g))
        if (any(boundary_up[i]) && e.insert(boundary_up[i])) boundaries[g].push_back(boundary_up[i]);
    }

    for (std::size_t u = 0; u < np; ++u)
      for (std::size_t v = 0; v < np; ++v) {
        if (!precedes(poset.grades[u], poset.grades[v])) continue;
        Echelon e(nk);
        for (const auto& b : boundaries[v]) e.insert(b);
        std::size_t base = e.dim();
        for (const auto& z : cycles[u]) e.insert(z);
        result.set(k, u, v, e.dim() - base);
      }
  }
  return result;
}

RankInvariant rank_invariant_bruteforce(const LefschetzComplex& m) {
  return rank_invariant_bruteforce(m, build_grade_poset(m), m.max_dimension());
}

void write_rank_invariant_csv(std::ostream& out, const RankInvariant& r, const GradePoset& poset) {
  out << "dim,u,v,rank\n";
  for (const auto& [key, rank] : r.entries()) {
    auto [k, u, v] = key;
    fmt::print(out, "{},{},{},{}\n", k, fmt::join(poset.grades[u], ";"),
               fmt::join(poset.grades[v], ";"), rank);
  }
}

std::vector<std::pair<SimplexId, SimplexId>> enumerate_separatrix_parity(
    const DiscreteGradient& g, const SimplicialComplex& c) {
  std::vector<std::pair<SimplexId, SimplexId>> out;
  std::vector<std::uint64_t> hits(c.size(), 0);

  std::function<void(SimplexId, std::size_t)> walk = [&](SimplexId s, std::size_t depth) {
    if (depth > c.size()) throw InvalidGradient("V-path longer than the complex");
    if (g.is_critical(s)) {
      ++hits[s];
      return;
    }
    if (g.role(s) != DiscreteGradient::Role::tail) return;
    for (SimplexId n : c.facets(g.partner(s)))
      if (n != s) walk(n, depth + 1);
  };

  for (SimplexId t : g.sorted_criticals()) {
    if (c.dimension(t) == 0) continue;
    std::fill(hits.begin(), hits.end(), 0);
    for (SimplexId f : c.facets(t)) walk(f, 0);
    for (SimplexId s = 0; s < c.size(); ++s)
      if (hits[s] % 2 == 1) out.emplace_back(t, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mpmorse::oracle

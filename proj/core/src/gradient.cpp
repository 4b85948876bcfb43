#include "mpmorse/gradient.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "mpmorse/expansion.hpp"
#include "mpmorse/parallel.hpp"

namespace mpmorse {

void DiscreteGradient::add_pair(SimplexId tail, SimplexId head) {
  if (is_classified(tail) || is_classified(head))
    throw std::logic_error(fmt::format("simplex paired twice ({} -> {})", tail, head));
  role_[tail] = Role::tail;
  role_[head] = Role::head;
  partner_[tail] = head;
  partner_[head] = tail;
  pairs_.emplace_back(tail, head);
}

void DiscreteGradient::add_critical(SimplexId s) {
  if (is_classified(s)) throw std::logic_error(fmt::format("simplex {} classified twice", s));
  role_[s] = Role::critical;
  criticals_.push_back(s);
}

std::vector<SimplexId> DiscreteGradient::sorted_criticals() const {
  std::vector<SimplexId> out(criticals_.begin(), criticals_.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<ExpansionResult> expand_vertex(VertexId v, const SimplicialComplex& c,
                                           const MultiFiltration& mf, const VertexIndexing& idx,
                                           const SimplexLess& less) {
  auto low = index_lower_star(v, idx, c);
  auto sets = split_index_lower_star(v, low, c, mf, idx);
  std::vector<ExpansionResult> out;
  out.reserve(sets.size());
  for (const auto& set : sets) out.push_back(homotopy_expansion(c, set.simplices, less));
  return out;
}

void append(DiscreteGradient& g, const ExpansionResult& r) {
  for (auto [s, t] : r.pairs) g.add_pair(s, t);
  for (SimplexId s : r.criticals) g.add_critical(s);
}

}  // namespace

DiscreteGradient compute_discrete_gradient(const SimplicialComplex& c, const MultiFiltration& mf,
                                           const GradientOptions& options) {
  VertexIndexing idx = compute_indexing(mf, c.vertex_count());
  IndexLexOrder order(c, idx);
  SimplexLess less = order;

  std::size_t nv = c.vertex_count();
  std::vector<std::vector<ExpansionResult>> per_vertex(nv);

  // Lower stars are independent. Visiting vertices by id keeps memory
  // access local; results are merged in rank order (or shuffled) below.
  std::vector<VertexId> schedule(nv);
  std::iota(schedule.begin(), schedule.end(), 0);
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  if (options.shuffle_seed) std::shuffle(schedule.begin(), schedule.end(), rng);

  parallel_for(nv, options.workers, [&](std::size_t i) {
    VertexId v = schedule[i];
    per_vertex[v] = expand_vertex(v, c, mf, idx, less);
  });

  DiscreteGradient g(c.size());
  for (std::size_t i = 0; i < nv; ++i) {
    auto& results = per_vertex[options.shuffle_seed ? schedule[i] : idx.vertex_at(i)];
    if (options.shuffle_seed) std::shuffle(results.begin(), results.end(), rng);
    for (const auto& r : results) append(g, r);
  }
  return g;
}

VectorFieldStatus check_vector_field(const DiscreteGradient& g, const SimplicialComplex& c) {
  if (g.simplex_count() != c.size()) return VectorFieldStatus::illegal_pairing;
  for (SimplexId s = 0; s < c.size(); ++s) {
    switch (g.role(s)) {
      case DiscreteGradient::Role::tail: {
        SimplexId t = g.partner(s);
        if (t == kNoSimplex || g.partner(t) != s || g.role(t) != DiscreteGradient::Role::head)
          return VectorFieldStatus::illegal_pairing;
        auto f = c.facets(t);
        if (std::find(f.begin(), f.end(), s) == f.end()) return VectorFieldStatus::illegal_pairing;
        break;
      }
      case DiscreteGradient::Role::head: {
        SimplexId t = g.partner(s);
        if (t == kNoSimplex || g.partner(t) != s || g.role(t) != DiscreteGradient::Role::tail)
          return VectorFieldStatus::illegal_pairing;
        break;
      }
      case DiscreteGradient::Role::unclassified:
      case DiscreteGradient::Role::critical:
        break;
    }
  }

  // V-path graph on tails: s -> s' whenever s' != s is a tail facet of s's
  // partner. A closed V-path is a directed cycle.
  enum : std::uint8_t { white, grey, black };
  std::vector<std::uint8_t> colour(c.size(), white);
  std::vector<std::pair<SimplexId, std::size_t>> stack;
  for (SimplexId root = 0; root < c.size(); ++root) {
    if (g.role(root) != DiscreteGradient::Role::tail || colour[root] != white) continue;
    colour[root] = grey;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [s, next] = stack.back();
      auto f = c.facets(g.partner(s));
      if (next == f.size()) {
        colour[s] = black;
        stack.pop_back();
        continue;
      }
      SimplexId n = f[next++];
      if (n == s || g.role(n) != DiscreteGradient::Role::tail) continue;
      if (colour[n] == grey) return VectorFieldStatus::closed_path;
      if (colour[n] == white) {
        colour[n] = grey;
        stack.emplace_back(n, 0);
      }
    }
  }
  return VectorFieldStatus::acyclic;
}

bool verify_gradient_acyclic(const DiscreteGradient& g, const SimplicialComplex& c) {
  return check_vector_field(g, c) == VectorFieldStatus::acyclic;
}

bool verify_compatibility(const DiscreteGradient& g, const MultiFiltration& mf) {
  return std::all_of(g.pairs().begin(), g.pairs().end(), [&](const auto& p) {
    return same_grade(mf.grade(p.first), mf.grade(p.second));
  });
}

long euler_characteristic_of_criticals(const DiscreteGradient& g, const SimplicialComplex& c) {
  long chi = 0;
  for (SimplexId s : g.criticals()) chi += (c.dimension(s) % 2 == 0) ? 1 : -1;
  return chi;
}

long euler_characteristic(const SimplicialComplex& c) {
  long chi = 0;
  for (int k = 0; k <= c.dimension(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.count(k));
  return chi;
}

void write_gradient(std::ostream& out, const DiscreteGradient& g, const SimplicialComplex& c) {
  for (SimplexId s = 0; s < c.size(); ++s) {
    if (g.role(s) == DiscreteGradient::Role::tail)
      fmt::print(out, "P {} | {}\n", fmt::join(c.vertices(s), " "),
                 fmt::join(c.vertices(g.partner(s)), " "));
    else if (g.role(s) == DiscreteGradient::Role::critical)
      fmt::print(out, "C {}\n", fmt::join(c.vertices(s), " "));
  }
}

std::string gradient_stats(const DiscreteGradient& g) {
  std::size_t cells = g.simplex_count();
  std::size_t crit = g.criticals().size();
  if (crit == 0) return fmt::format("cells={} criticals=0 compression=inf", cells);
  return fmt::format("cells={} criticals={} compression={:.2f}", cells, crit,
                     static_cast<double>(cells) / static_cast<double>(crit));
}

void write_decomposition(std::ostream& out, std::span<const LevelSet> sets,
                         const SimplicialComplex& c) {
  for (const auto& set : sets) {
    fmt::print(out, "v={} grade={} cells=", set.owner, fmt::join(set.grade.components(), ","));
    for (std::size_t i = 0; i < set.simplices.size(); ++i)
      fmt::print(out, "{}({})", i ? " " : "", fmt::join(c.vertices(set.simplices[i]), ","));
    out << '\n';
  }
}

}  // namespace mpmorse

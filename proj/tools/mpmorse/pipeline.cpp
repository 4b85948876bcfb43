#include "pipeline.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mpmorse/error.hpp"
#include "mpmorse/foliation.hpp"
#include "mpmorse/indexing.hpp"
#include "mpmorse/io.hpp"
#include "mpmorse/oracle.hpp"

namespace mpmorse::cli {

namespace {

using Clock = std::chrono::steady_clock;
using Status = CheckResult::Status;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Configuration problems detected after the input has been read.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_artifact(const std::filesystem::path& dir, const char* name) {
  std::ofstream out(dir / name);
  if (!out) throw ConfigError(fmt::format("cannot write '{}'", (dir / name).string()));
  return out;
}

CheckResult check(std::string name, bool ok, std::string note = {}) {
  return {std::move(name), ok ? Status::pass : Status::fail, ok ? std::string{} : std::move(note)};
}

CheckResult skip(std::string name, std::string why) { return {std::move(name), Status::skip, std::move(why)}; }

struct Loaded {
  SimplicialComplex complex;
  VertexFunction function;
};

Loaded load(const PipelineConfig& cfg) {
  Loaded l;
  if (cfg.format == InputFormat::off) {
    auto mesh = read_off_file(cfg.input.string());
    l.complex = build_complex(mesh.points.size(), mesh.faces);
    if (cfg.filtration) {
      l.function = read_vertex_function_file(cfg.filtration->string(), mesh.points.size());
    } else {
      auto columns = parse_coordinate_columns(cfg.coords);
      l.function = coordinate_function(mesh, columns);
    }
  } else {
    auto data = read_generic_file(cfg.input.string());
    l.complex = build_complex(data.vertex_count, data.top_simplices);
    l.function = cfg.filtration
                     ? read_vertex_function_file(cfg.filtration->string(), data.vertex_count)
                     : std::move(data.function);
  }
  return l;
}

std::vector<std::pair<SimplexId, SimplexId>> morse_incidences(const LefschetzComplex& m,
                                                              const DiscreteGradient& g) {
  auto simplex_of = g.sorted_criticals();
  std::vector<std::pair<SimplexId, SimplexId>> out;
  for (CellId t = 0; t < m.size(); ++t)
    for (CellId s : m.facets(t)) out.emplace_back(simplex_of[t], simplex_of[s]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Mode parse_mode(const std::string& s) {
  if (s == "gradient") return Mode::gradient;
  if (s == "morse") return Mode::morse;
  if (s == "space") return Mode::space;
  if (s == "rank-invariant") return Mode::rank_invariant;
  if (s == "verify") return Mode::verify;
  throw std::invalid_argument(fmt::format("unknown mode '{}'", s));
}

InputFormat parse_format(const std::string& s) {
  if (s == "off") return InputFormat::off;
  if (s == "generic") return InputFormat::generic;
  throw std::invalid_argument(fmt::format("unknown format '{}'", s));
}

std::vector<CheckResult> run_oracle_battery(const SimplicialComplex& c, const MultiFiltration& mf,
                                            const DiscreteGradient& g, const LefschetzComplex& morse,
                                            const BatteryLimits& limits, unsigned workers) {
  std::vector<CheckResult> r;
  std::size_t n = c.size();

  auto status = check_vector_field(g, c);
  r.push_back(check("gradient_acyclic", status == VectorFieldStatus::acyclic,
                    status == VectorFieldStatus::closed_path ? "closed V-path" : "illegal pairing"));
  r.push_back(check("compatibility", verify_compatibility(g, mf)));
  r.push_back(check("euler_invariant",
                    euler_characteristic_of_criticals(g, c) == euler_characteristic(c)));
  std::size_t classified = 2 * g.pairs().size() + g.criticals().size();
  r.push_back(check("partition_totality", classified == n,
                    fmt::format("{} of {} simplices classified", classified, n)));

  auto idx = compute_indexing(mf, c.vertex_count());
  std::vector<int> owner_hits(n, 0);
  for (VertexId v = 0; v < c.vertex_count(); ++v)
    for (SimplexId s : index_lower_star(v, idx, c)) ++owner_hits[s];
  r.push_back(check("lower_star_partition",
                    std::all_of(owner_hits.begin(), owner_hits.end(), [](int h) { return h == 1; })));

  if (n <= limits.matching) {
    auto report = oracle::check_partition_equivalence(c, mf);
    r.push_back(check("matching_partition", report.same_partition, report.detail));
    r.push_back(check("level_set_representatives", report.unique_representatives, report.detail));
    r.push_back(check("matching_gradient", oracle::matching_gradient(c, mf) == g));
  } else {
    auto why = fmt::format("|S| = {} exceeds {}", n, limits.matching);
    r.push_back(skip("matching_partition", why));
    r.push_back(skip("level_set_representatives", why));
    r.push_back(skip("matching_gradient", why));
  }

  bool squares = boundary_squares_to_zero(morse);
  r.push_back(check("morse_boundary_squares_to_zero", squares));
  r.push_back(check("morse_incidence_monotone", incidence_is_monotone(morse)));
  if (squares) {
    auto original = betti_numbers_f2(simplicial_lefschetz(c, mf));
    auto reduced = betti_numbers_f2(morse);
    reduced.resize(original.size(), 0);
    r.push_back(check("homology_invariance", original == reduced));
  } else {
    r.push_back(skip("homology_invariance", "Morse boundary does not square to zero"));
  }

  if (n <= limits.separatrix)
    r.push_back(check("separatrix_parity",
                      oracle::enumerate_separatrix_parity(g, c) == morse_incidences(morse, g)));
  else
    r.push_back(skip("separatrix_parity", fmt::format("|S| = {} exceeds {}", n, limits.separatrix)));

  if (n <= limits.rank_invariant) {
    auto original = simplicial_lefschetz(c, mf);
    auto poset = oracle::build_grade_poset(original);
    int top = original.max_dimension();
    r.push_back(check("rank_invariant", oracle::rank_invariant_bruteforce(original, poset, top) ==
                                            oracle::rank_invariant_bruteforce(morse, poset, top)));
  } else {
    r.push_back(skip("rank_invariant", fmt::format("|S| = {} exceeds {}", n, limits.rank_invariant)));
  }

  if (mf.parameters() == 2 && n > 0) {
    auto extremes = compute_extremes(mf, c.vertex_count());
    auto a = compute_persistence_space(simplicial_lefschetz(c, mf), extremes, limits.omega, workers);
    auto b = compute_persistence_space(morse, extremes, limits.omega, workers);
    r.push_back(check("slice_invariance", same_persistence_space(a, b)));
  } else {
    r.push_back(skip("slice_invariance", "needs a non-empty bifiltration"));
  }
  return r;
}

void write_battery_report(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& c : results) {
    switch (c.status) {
      case Status::pass: fmt::print(out, "PASS {}\n", c.name); break;
      case Status::fail:
        fmt::print(out, "FAIL {}{}{}\n", c.name, c.note.empty() ? "" : ": ", c.note);
        break;
      case Status::skip: fmt::print(out, "SKIP {}: {}\n", c.name, c.note); break;
    }
  }
}

int run_pipeline(const PipelineConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    if (cfg.omega == 0) throw ConfigError("--slices must be at least 1");
    std::filesystem::create_directories(cfg.out);

    auto wall = Clock::now();
    auto input = load(cfg);
    if (auto bad = find_injectivity_violation(input.function)) {
      if (!cfg.auto_perturb)
        throw InjectivityError(fmt::format(
            "vertices {} and {} share component {}; rerun with --auto-perturb to rank-perturb",
            bad->first, bad->second, bad->component));
      input.function = make_injective(input.function);
    }
    const auto& c = input.complex;
    auto mf = extend_filtration(c, input.function);

    if (cfg.mode == Mode::space && mf.parameters() != 2)
      throw ConfigError(fmt::format("mode space needs 2 filtration parameters, got {}", mf.parameters()));
    if (cfg.mode == Mode::rank_invariant && c.size() > oracle::kRankInvariantCellLimit)
      throw ConfigError(fmt::format("mode rank-invariant is limited to {} simplices, got {}",
                                    oracle::kRankInvariantCellLimit, c.size()));

    auto t0 = Clock::now();
    auto g = compute_discrete_gradient(c, mf, {cfg.workers, std::nullopt});
    double gradient_ms = ms_since(t0);
    {
      auto out = open_artifact(cfg.out, "gradient.txt");
      write_gradient(out, g, c);
    }
    auto stats = gradient_stats(g);
    open_artifact(cfg.out, "stats.txt") << stats << '\n';
    log << stats << '\n';
    if (cfg.dump_decomposition) {
      auto out = open_artifact(cfg.out, "decomposition.txt");
      auto idx = compute_indexing(mf, c.vertex_count());
      write_decomposition(out, decompose(c, mf, idx), c);
    }

    bool verify = cfg.verify || cfg.mode == Mode::verify;
    if (cfg.mode == Mode::gradient && !verify) return kExitOk;

    t0 = Clock::now();
    auto morse = extract_morse_complex(g, c, mf, cfg.workers);
    double morse_ms = ms_since(t0);
    {
      auto out = open_artifact(cfg.out, "morse.txt");
      write_morse_complex(out, morse);
    }

    bool failed = false;
    if (cfg.mode == Mode::space) {
      auto original = simplicial_lefschetz(c, mf);
      auto extremes = compute_extremes(mf, c.vertex_count());
      PhaseTimings t_original, t_morse;
      auto a = compute_persistence_space(original, extremes, cfg.omega, cfg.workers, &t_original);
      auto b = compute_persistence_space(morse, extremes, cfg.omega, cfg.workers, &t_morse);
      {
        auto out = open_artifact(cfg.out, "diagrams_original.csv");
        write_persistence_space_csv(out, a);
      }
      {
        auto out = open_artifact(cfg.out, "diagrams_morse.csv");
        write_persistence_space_csv(out, b);
      }
      PhaseTimings reduction;
      reduction.total = gradient_ms + morse_ms;
      auto out = open_artifact(cfg.out, "timings.csv");
      write_timings_csv_header(out);
      write_timings_csv_row(out, "reduction", reduction);
      write_timings_csv_row(out, "original", t_original);
      write_timings_csv_row(out, "morse", t_morse);
      PhaseTimings all;
      all.total = ms_since(wall);
      write_timings_csv_row(out, "wall", all);

      bool same = same_persistence_space(a, b);
      log << fmt::format("slices={} positive_persistence_match={}\n", a.slices.size(),
                         same ? "yes" : "no");
      failed |= !same;
    }

    if (cfg.mode == Mode::rank_invariant) {
      auto original = simplicial_lefschetz(c, mf);
      auto poset = oracle::build_grade_poset(original);
      int top = original.max_dimension();
      auto ra = oracle::rank_invariant_bruteforce(original, poset, top);
      auto rb = oracle::rank_invariant_bruteforce(morse, poset, top);
      {
        auto out = open_artifact(cfg.out, "rank_invariant_original.csv");
        oracle::write_rank_invariant_csv(out, ra, poset);
      }
      {
        auto out = open_artifact(cfg.out, "rank_invariant_morse.csv");
        oracle::write_rank_invariant_csv(out, rb, poset);
      }
      log << fmt::format("rank_invariant_entries={} match={}\n", ra.entries().size(),
                         ra == rb ? "yes" : "no");
      failed |= !(ra == rb);
    }

    if (verify) {
      auto results = run_oracle_battery(c, mf, g, morse, {}, cfg.workers);
      auto out = open_artifact(cfg.out, "verify.txt");
      write_battery_report(out, results);
      write_battery_report(log, results);
      for (const auto& r : results) failed |= r.status == CheckResult::Status::fail;
    }
    return failed ? kExitVerification : kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InjectivityError& e) {
    err << "injectivity error: " << e.what() << '\n';
    return kExitInjectivity;
  } catch (const InvalidGradient& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const CorruptComplex& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace mpmorse::cli

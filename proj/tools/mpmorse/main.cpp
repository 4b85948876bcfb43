#include <iostream>

#include <CLI11.hpp>

#include "pipeline.hpp"

int main(int argc, char** argv) {
  using namespace mpmorse::cli;

  CLI::App app{"Multiparameter discrete Morse preprocessing and persistence spaces"};
  PipelineConfig cfg;
  std::string format = "generic";
  std::string mode = "gradient";
  std::string input;
  std::string filtration;
  std::string out = ".";

  app.add_option("input", input, "Input complex (OFF mesh or generic format)")->required();
  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"off", "generic"}))
      ->capture_default_str();
  app.add_option("--coords", cfg.coords, "OFF coordinate columns forming f, e.g. x,y")
      ->capture_default_str();
  app.add_option("--filtration", filtration, "Per-vertex filtration file (overrides --coords)");
  app.add_option("--mode", mode, "gradient | morse | space | rank-invariant | verify")
      ->check(CLI::IsMember({"gradient", "morse", "space", "rank-invariant", "verify"}))
      ->capture_default_str();
  app.add_option("--slices", cfg.omega, "Samples per axis; space mode uses slices^2 lines")
      ->capture_default_str();
  app.add_flag("--auto-perturb", cfg.auto_perturb,
               "Replace non-injective components by vertex ranks instead of failing");
  app.add_option("--workers", cfg.workers, "Worker threads (0 = available parallelism)")
      ->capture_default_str();
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_flag("--dump-decomposition", cfg.dump_decomposition, "Write decomposition.txt");
  app.add_flag("--verify", cfg.verify, "Run the oracle battery after the selected mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  cfg.input = input;
  cfg.format = parse_format(format);
  cfg.mode = parse_mode(mode);
  if (!filtration.empty()) cfg.filtration = filtration;
  cfg.out = out;
  return run_pipeline(cfg, std::cout, std::cerr);
}

// Writes a synthetic torus or grid mesh as OFF.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mpmorse/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Synthetic triangle meshes"};
  std::size_t rows = 40;
  std::size_t cols = 42;
  std::uint64_t seed = 1;
  bool grid = false;
  std::string out;
  app.add_option("--rows", rows)->capture_default_str();
  app.add_option("--cols", cols)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  app.add_flag("--grid", grid, "Planar grid instead of a torus");
  app.add_option("-o,--output", out, "Output file (default stdout)");
  CLI11_PARSE(app, argc, argv);

  try {
    auto mesh = grid ? mpmorse::make_grid(rows, cols, seed) : mpmorse::make_torus(rows, cols, 3.0, 1.0, seed);
    if (out.empty()) {
      mpmorse::write_off(std::cout, mesh);
    } else {
      std::ofstream f(out);
      mpmorse::write_off(f, mesh);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

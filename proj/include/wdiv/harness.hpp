#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wdiv {

enum class Command {
  sieve,
  eval,
  voronoi,
  voronoi_sweep,
  riesz,
  meansquare,
  meansquare_sweep,
  check_bessel,
  check_funceq,
  check_laurent,
  recipe,
};

struct ExperimentConfig {
  Command command = Command::sieve;
  std::string target;  // F, E, F0 for eval; recipe name for recipe
  std::int64_t h = 1;
  std::int64_t k = 1;
  double re = 0.0;
  double im = 0.0;
  std::string method = "hurwitz";
  std::uint64_t xmax = 0;  // table size; 0 picks the command's default
  double x = 0.0;
  std::uint64_t N = 0;  // 0 means floor(x)
  std::uint64_t M = 100000;
  int a = 0;
  std::uint64_t cutoff = 0;  // 0 picks 1e5 (a = 0) or 1e4 (a >= 1)
  double X = 0.0;
  double grid_min = 1000.0;
  double grid_max = 10000.0;
  int points = 50;
  std::vector<std::uint64_t> Nlist;
  std::vector<double> Xlist;
  std::vector<double> bessel_x;
  int max_order = 2;
  std::string main_kind = "residue";  // residue or printed
  std::string formula = "printed";    // laurent closed form: printed or derived
  std::string out;                    // file, or directory for recipes; empty = stdout
  std::uint64_t seed = 0;
};

// Exit status: 0 success, 1 validation error, 2 numeric failure.
int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

struct RecipeResult {
  bool pass = false;
  std::string summary;
  std::string csv;
};

RecipeResult run_recipe(const std::string& name, std::uint64_t seed);

}  // namespace wdiv

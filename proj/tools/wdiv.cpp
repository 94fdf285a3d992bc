#include <iostream>

#include "CLI11.hpp"
#include "wdiv/harness.hpp"

int main(int argc, char** argv) {
  wdiv::ExperimentConfig cfg;
  CLI::App app{"Twisted weighted divisor sums: tables, Dirichlet series, Voronoi and mean-square checks"};
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "seed for randomized grids")->capture_default_str();
  app.add_option("--out", cfg.out, "output file (directory for recipes)");
  app.add_option("--table", cfg.xmax, "divisor table size override");

  auto phase_opts = [&](CLI::App* c) {
    c->add_option("--h", cfg.h, "numerator of the twist h/k")->capture_default_str();
    c->add_option("--k", cfg.k, "denominator of the twist h/k")->capture_default_str();
  };

  auto* sieve = app.add_subcommand("sieve", "dump n,d,D1,d01 as CSV");
  sieve->add_option("--xmax", cfg.xmax, "last n")->required();

  auto* eval = app.add_subcommand("eval", "evaluate F, E or F0 at a complex point");
  eval->add_option("function", cfg.target, "F, E or F0")->required()->check(CLI::IsMember({"F", "E", "F0"}));
  eval->add_option("--re", cfg.re)->required();
  eval->add_option("--im", cfg.im)->capture_default_str();
  eval->add_option("--method", cfg.method)->check(CLI::IsMember({"hurwitz", "series"}))->capture_default_str();
  phase_opts(eval);

  auto* vor = app.add_subcommand("voronoi", "direct error term against the truncated formula");
  vor->add_option("--x", cfg.x);
  vor->add_option("--N", cfg.N, "truncation for a = 0 (default floor(x))");
  vor->add_option("--M", cfg.M, "Bessel series cutoff for a >= 1")->capture_default_str();
  vor->add_option("--a", cfg.a)->capture_default_str();
  vor->add_option("--main", cfg.main_kind)->check(CLI::IsMember({"residue", "printed"}))->capture_default_str();
  phase_opts(vor);
  auto* vsweep = vor->add_subcommand("sweep", "CSV over a half-integer grid");
  vsweep->add_option("--xmin", cfg.grid_min)->capture_default_str();
  vsweep->add_option("--xmax", cfg.grid_max)->capture_default_str();
  vsweep->add_option("--points", cfg.points)->capture_default_str();
  vsweep->add_option("--Nlist", cfg.Nlist, "truncations; 0 means floor(x)")->delimiter(',');
  vsweep->add_option("--main", cfg.main_kind)->check(CLI::IsMember({"residue", "printed"}));
  phase_opts(vsweep);

  auto* riesz = app.add_subcommand("riesz", "Riesz mean B_a(x, h/k)");
  riesz->add_option("--x", cfg.x)->required();
  riesz->add_option("--a", cfg.a)->capture_default_str();
  phase_opts(riesz);

  auto* ms = app.add_subcommand("meansquare", "integral of |Delta_a|^2 against the theorem main term");
  ms->add_option("--X", cfg.X);
  ms->add_option("--a", cfg.a)->capture_default_str();
  ms->add_option("--cutoff", cfg.cutoff, "series cutoff (default 1e5 for a = 0, 1e4 otherwise)");
  ms->add_option("--main", cfg.main_kind)->check(CLI::IsMember({"residue", "printed"}))->capture_default_str();
  phase_opts(ms);
  auto* msweep = ms->add_subcommand("sweep", "CSV over a list of X");
  msweep->add_option("--Xlist", cfg.Xlist)->delimiter(',')->required();
  msweep->add_option("--a", cfg.a);
  msweep->add_option("--cutoff", cfg.cutoff);
  phase_opts(msweep);

  auto* check = app.add_subcommand("check", "self-checks; exit 2 on tolerance breach");
  check->require_subcommand(1);
  auto* cb = check->add_subcommand("bessel", "Y, K against their leading asymptotics");
  cb->add_option("--x", cfg.bessel_x, "arguments")->delimiter(',');
  cb->add_option("--max-order", cfg.max_order)->capture_default_str();
  auto* cf = check->add_subcommand("funceq", "functional equation residuals at random points");
  cf->add_option("--points", cfg.points)->capture_default_str();
  phase_opts(cf);
  auto* cl = check->add_subcommand("laurent", "closed-form Laurent data against a contour fit");
  cl->add_option("--formula", cfg.formula)->check(CLI::IsMember({"printed", "derived"}))->capture_default_str();
  phase_opts(cl);

  auto* rec = app.add_subcommand("recipe", "canonical experiment with CSV and a pass/fail line");
  rec->add_option("name", cfg.target)
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "theorem4", "funceq", "corollary"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*sieve) {
    cfg.command = wdiv::Command::sieve;
  } else if (*eval) {
    cfg.command = wdiv::Command::eval;
  } else if (*vor) {
    cfg.command = *vsweep ? wdiv::Command::voronoi_sweep : wdiv::Command::voronoi;
    if (!*vsweep && vor->count("--x") == 0) {
      std::cerr << "{\"error\":\"validation\",\"message\":\"voronoi needs --x\"}\n";
      return 1;
    }
  } else if (*riesz) {
    cfg.command = wdiv::Command::riesz;
  } else if (*ms) {
    cfg.command = *msweep ? wdiv::Command::meansquare_sweep : wdiv::Command::meansquare;
    if (!*msweep && ms->count("--X") == 0) {
      std::cerr << "{\"error\":\"validation\",\"message\":\"meansquare needs --X\"}\n";
      return 1;
    }
  } else if (*check) {
    cfg.command = *cb ? wdiv::Command::check_bessel : *cf ? wdiv::Command::check_funceq : wdiv::Command::check_laurent;
  } else if (*rec) {
    cfg.command = wdiv::Command::recipe;
  }
  return wdiv::run(cfg, std::cout, std::cerr);
}

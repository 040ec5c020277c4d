#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "gz0: ends of groups, translational almost-stability, electoral "
      "flexibility witnesses, and shift-continuous topologies on a group "
      "with adjoined zero"};
  app.require_subcommand(1);

  gz0::RunConfig cfg;
  cfg.element_cap = gz0::element_cap_from_env();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group,
                    "group spec (Z, Z^2, Z^3, F2, Dinf, ZxC2, ZxC6, DirSumC2, "
                    "FinSym, C12, Sym5)");
    sub->add_option("--seed", cfg.seed, "seed for randomized families");
    sub->add_option("--json", cfg.json_path, "also write the report here");
  };

  CLI::App* ends = app.add_subcommand("ends", "estimate the number of ends");
  add_common(ends);
  ends->add_option("--rmax", cfg.rmax, "largest inner radius (default 12)");
  ends->add_option("--window", cfg.window, "stabilization window (default 4)");

  CLI::App* stab = app.add_subcommand(
      "stability", "translational almost-stability of a subset");
  add_common(stab);
  stab->add_option("--A", cfg.subset_a, "subset literal")->required();
  stab->add_option("--x", cfg.x_expr, "profile a single translate");
  stab->add_option("--rmax", cfg.rmax, "truncation radius (default 16)")
      ->default_val(16);

  CLI::App* wit = app.add_subcommand("witness", "search for a flexibility witness");
  add_common(wit);
  wit->add_option("--A", cfg.subset_a, "subset literal")->required();
  wit->add_option("--B", cfg.subset_b, "subset literal (default: complement)");
  wit->add_option("--r", cfg.r, "search radius (default 20)");
  wit->add_option("--m", cfg.m, "certificate size threshold (default 20)");
  wit->add_option("--side", cfg.side, "right | left | both");

  CLI::App* witc = app.add_subcommand(
      "witness-cyclic", "constructive witness through an infinite cyclic subgroup");
  add_common(witc);
  witc->add_option("--A", cfg.subset_a, "subset literal")->required();
  witc->add_option("--B", cfg.subset_b, "subset literal (default: complement)");
  witc->add_option("--z", cfg.z_expr, "axis element (default: the oracle axis)");
  witc->add_option("--r", cfg.r, "ball radius (default 20)");
  witc->add_option("--m", cfg.m, "certificate size threshold (default 20)");

  CLI::App* p10 = app.add_subcommand(
      "prop10", "alternating stable partition of a locally finite chain group");
  add_common(p10);
  p10->add_option("--depth", cfg.depth, "chain depth (default: oracle's)");

  CLI::App* topo = app.add_subcommand(
      "topology", "verdict bundle and classification for a zero topology");
  add_common(topo);
  topo->add_option("--topology", cfg.topology,
                   "discrete | cofinite | end:+ | end:- | explicit:<file>")
      ->required();
  topo->add_option("--R", cfg.big_r, "check scale (default 30)");

  CLI::App* census = app.add_subcommand(
      "census", "the four zero topologies on Z: bundle, classes, semigroup count");
  add_common(census);
  census->add_option("--R", cfg.big_r, "check scale (default 20)")
      ->default_val(20);

  CLI::App* cons = app.add_subcommand(
      "consistency", "seeded partition families cross-checked for flexibility");
  add_common(cons);
  cons->add_option("--count", cfg.count, "number of partitions (default 50)");
  cons->add_option("--kind", cfg.kind, "hash | annulus");
  cons->add_option("--r", cfg.r, "search radius (default 20)");
  cons->add_option("--m", cfg.m, "certificate size threshold (default 20)");

  CLI11_PARSE(app, argc, argv);

  std::string command = app.get_subcommands().front()->get_name();
  gz0::RunOutcome outcome = gz0::run(command, cfg);
  std::cout << outcome.report.dump(2) << std::endl;
  return outcome.exit_code;
}

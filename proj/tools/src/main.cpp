#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace eorad::cli;

  CLI::App app{"Euclidean operator radius toolkit"};
  app.require_subcommand(1);

  ComputeOptions copt;
  auto* compute = app.add_subcommand("compute", "w_e, tuple norm and per-entry numerical radii of a tuple file");
  compute->add_option("input", copt.input, "TupleFile (JSON)")->required();
  compute->add_option("--json", copt.json_out, "write a JSON report here");
  compute->add_option("--seed", copt.seed, "seed for the optimizer restarts")->capture_default_str();
  compute->add_option("--restarts", copt.restarts, "random restarts for w_e")->check(CLI::NonNegativeNumber);

  BoundsOptions bopt;
  auto* bounds = app.add_subcommand("bounds", "upper bounds for w_e of a tuple file");
  bounds->add_option("input", bopt.input, "TupleFile (JSON)")->required();
  bounds->add_option("--t", bopt.t, "polar exponent t in [0, 1] (default 0.5)");
  bounds->add_option("--alpha", bopt.alpha, "power-pair exponent alpha in [0, 1] (default 0.5)");
  bounds->add_option("--fg", bopt.fg, "function pair: sqrt, mixed or power:<alpha>")->capture_default_str();
  bounds->add_flag("--all", bopt.all, "sweep the default t and alpha grids");
  bounds->add_option("--json", bopt.json_out, "write a JSON report here");
  bounds->add_option("--seed", bopt.seed, "seed for the optimizer restarts")->capture_default_str();
  bounds->add_option("--restarts", bopt.restarts, "random restarts for w_e")->check(CLI::NonNegativeNumber);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run a randomized verification suite");
  verify->add_option("--suite", vopt.suite, "lemmas, bounds, blockmat or all")->capture_default_str();
  verify->add_option("--trials", vopt.trials, "trials per family")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "master seed")->capture_default_str();
  verify->add_option("--out", vopt.out, "records .csv or JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*compute) return cmd_compute(copt, std::cout, std::cerr);
  if (*bounds) return cmd_bounds(bopt, std::cout, std::cerr);
  return cmd_verify(vopt, std::cout, std::cerr);
}

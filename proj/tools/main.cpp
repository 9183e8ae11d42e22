#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using torschain::cli::CommandArgs;
  CommandArgs args;
  CLI::App app{"torschain: chains of torsion classes over type-A quivers"};
  app.require_subcommand(1);

  const std::map<std::string, std::string> about = {
      {"indecs", "list the indecomposables with dimension vectors and Hom dimensions"},
      {"tors-lattice", "torsion classes, cover relations, number of maximal green sequences"},
      {"tors-check", "is --class/--members a torsion class; canonical sequence of --module"},
      {"chain-pt", "nonzero phase categories of --chain, or the one at --t"},
      {"hn", "HN filtration of --module along --chain"},
      {"phase-word", "phase word of --module, optionally compared with --module2"},
      {"mgs-list", "maximal green sequences as chains of torsion classes"},
      {"mgs-bricks", "brick labels and c-vectors of every maximal green sequence"},
      {"stab-chain", "chain induced by stability form --form"},
      {"stab-verify", "phase categories vs semistables for --form or --count random forms"},
      {"hall-verify", "wall-crossing identity for --chain, or torsion-pair identity for --class"},
      {"dist", "distance between --chain and --chain2; ball membership with --eps"},
      {"chamber-test", "perturbation invariance of --chain within --eps"},
      {"slicing-verify", "slicing axioms and round trip for --chain"},
  };
  for (const auto& name : torschain::cli::command_names()) {
    auto it = about.find(name);
    auto* sub = app.add_subcommand(name, it == about.end() ? "" : it->second);
    sub->add_option("--scenario", args.scenario, "scenario JSON file")->required();
    sub->add_flag("--json", args.json, "machine-readable report");
    sub->add_option("--seed", args.seed, "seed for randomised sweeps");
    sub->add_option("--count", args.count, "number of random forms (stab-verify)");
    sub->add_option("--chain", args.chain, "chain name, \"trivial\" or \"mgs:<k>\"");
    sub->add_option("--chain2", args.chain2, "second chain (dist)");
    sub->add_option("--module", args.module, "module, e.g. \"S1+S3\"");
    sub->add_option("--module2", args.module2, "second module (phase-word)");
    sub->add_option("--bound", args.bound, "dimension bound, a name or \"2,2\"");
    sub->add_option("--form", args.form, "stability form name");
    sub->add_option("--class", args.cls, "torsion class name");
    sub->add_option("--members", args.members, "comma-separated indecomposables (tors-check)");
    sub->add_option("--eps", args.eps, "radius \"a/b\"");
    sub->add_option("--t", args.t, "phase \"a/b\" (chain-pt)");
    sub->callback([&args, name] { args.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return torschain::cli::run(args, std::cout, std::cerr);
}

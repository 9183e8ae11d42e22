#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <torschain/torschain.hpp>

namespace torschain::cli {

struct Guards {
  int max_total = 5;  // largest total dimension for exhaustive module sweeps
};

// A parsed and validated scenario file. The universe is heap-held so chains
// and algebras can keep references to it while the scenario moves around.
struct Scenario {
  std::string quiver;  // e.g. "A3:>>"
  int p = 2;
  std::unique_ptr<Universe> universe;
  std::map<std::string, TorsionClass> classes;
  std::map<std::string, StabilityForm> forms;
  std::map<std::string, StepChain> chains;
  std::map<std::string, DimVector> bounds;
  Guards guards;

  // Names from the file, plus "trivial" and "mgs:<k>" (1-based, lattice order).
  StepChain chain(const std::string& name) const;
  TorsionClass torsion_class(const std::string& name) const;
  const StabilityForm& form(const std::string& name) const;
  // A name from "bounds" or a literal "2,2".
  DimVector bound(const std::string& text) const;
};

Scenario parse_scenario_text(std::string_view text, const std::string& origin = "<scenario>");
Scenario load_scenario(const std::string& path);

// "A3:>>" -> (3, ">>"); "A1" -> (1, "").
std::pair<int, std::string> parse_quiver(const std::string& text);
DimVector parse_dims(const std::string& text, int vertices);
std::vector<std::string> split_list(const std::string& text, char sep = ',');

}  // namespace torschain::cli

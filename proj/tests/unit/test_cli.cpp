#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"

using namespace torschain;
using namespace torschain::cli;

namespace {

const std::string kScenarios = TORSCHAIN_SCENARIO_DIR;

struct Run {
  int code;
  std::string out;
};

// Runs the real executable through the shell.
Run exe(const std::string& args) {
  const std::string cmd = std::string(TORSCHAIN_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run in_process(CommandArgs args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str()};
}

CommandArgs args_for(const std::string& command, const std::string& scenario) {
  CommandArgs a;
  a.command = command;
  a.scenario = kScenarios + "/" + scenario;
  return a;
}

}  // namespace

TEST_CASE("scenario parsing") {
  const auto minimal = parse_scenario_text(R"({"quiver": "A1", "p": 2})");
  CHECK(minimal.universe->size() == 1);
  CHECK(minimal.chain("trivial").piece_count() == 1);

  for (const char* name : {"a2.json", "a3_nowide.json", "a2_hall.json"}) {
    CHECK_NOTHROW(load_scenario(kScenarios + "/" + name));
  }
  const auto s = load_scenario(kScenarios + "/a3_nowide.json");
  const auto& u = *s.universe;
  const auto c = s.chain("nowide");
  CHECK(describe(c, u) == "(0,1/3) add{S1, S2, M[1..2], M[2..3], M[1..3]}, (1/3,2/3) add{S1}, (2/3,1) {0}");
  CHECK(s.chain("mgs:1").pieces().front() == u.all());
  CHECK_THROWS_AS(s.chain("mgs:99"), InputError);
  CHECK(s.bound("default") == DimVector{1, 1, 1});
  CHECK(s.bound("1,0,1") == DimVector{1, 0, 1});
  CHECK_THROWS_AS(s.bound("1,1"), InputError);

  auto message = [](const std::string& text) {
    try {
      parse_scenario_text(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  const std::string out_of_order = message(R"({"quiver": "A2:>", "p": 2, "chains": {"bad": [
      {"end": "2/3", "class": ["S1", "S2", "M[1..2]"]}, {"end": "1/3", "class": []}]}})");
  CHECK(out_of_order.find("chains.bad") != std::string::npos);
  CHECK(out_of_order.find("increase") != std::string::npos);
  CHECK(message(R"({"quiver": "A2:>", "p": 2, "colour": 1})").find("colour") != std::string::npos);
  CHECK(message(R"({"quiver": "A2:>", "p": 2, "forms": {"f": {"theta": [1, 0], "rho": [1, 1], "x": 0}}})")
            .find("forms.f") != std::string::npos);
  CHECK(message(R"({"quiver": "A2:>", "p": 4})").find("p") != std::string::npos);
  CHECK(message(R"({"quiver": "B2", "p": 2})").find("quiver") != std::string::npos);
  CHECK(message(R"({"quiver": "A2:>", "p": 2, "chains": {"c": [{"end": "1", "class": ["S9"]}]}})")
            .find("chains.c[0].class") != std::string::npos);
  CHECK(message(R"({"quiver": "A2:>", "p": 2, "chains": {"c": [{"end": "x/y", "class": []}]}})")
            .find("chains.c[0].end") != std::string::npos);
  CHECK(message("{not json") .find("JSON") != std::string::npos);
  CHECK(message(R"({"quiver": "A2:>", "p": 2, "chains": {"c": [{"end": "1", "class": ["S2", "M[1..2]"]}]}})")
            .find("not a torsion class") != std::string::npos);
}

TEST_CASE("reference outputs") {
  auto hn = args_for("hn", "a3_nowide.json");
  hn.chain = "nowide";
  hn.module = "S1+S3";
  const auto r = in_process(hn);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("S1+S3: [S1 @ 2/3, S3 @ 0]\n", 0) == 0);

  auto hall = args_for("hall-verify", "a2.json");
  hall.chain = "pair";
  hall.bound = "2,2";
  const auto h = in_process(hall);
  CHECK(h.code == 0);
  CHECK(h.out.rfind("wall-crossing identity holds", 0) == 0);

  const auto lat = in_process(args_for("tors-lattice", "a2.json"));
  CHECK(lat.code == 0);
  CHECK(lat.out.rfind("5 torsion classes, 2 maximal green sequences\n", 0) == 0);
}

TEST_CASE("every command through the executable") {
  const std::string a2 = "--scenario " + kScenarios + "/a2.json";
  const std::string a3 = "--scenario " + kScenarios + "/a3_nowide.json";
  const std::vector<std::pair<std::string, int>> cases = {
      {"indecs " + a2, 0},
      {"tors-lattice " + a3, 0},
      {"tors-check " + a2 + " --class proj --module M[1..2]", 0},
      {"tors-check " + a2 + " --members S2,M[1..2]", 1},
      {"chain-pt " + a3 + " --chain nowide --t 1/3", 0},
      {"hn " + a3 + " --chain nowide --module S1+S3", 0},
      {"phase-word " + a3 + " --chain nowide --module S1+S3 --module2 S2", 0},
      {"mgs-list " + a3, 0},
      {"mgs-bricks " + a2, 0},
      {"stab-chain " + a2 + " --form king", 0},
      {"stab-verify " + a2 + " --seed 3 --count 4", 0},
      {"hall-verify " + a2 + " --chain pair --bound 2,2", 0},
      {"hall-verify " + a2 + " --class simple1", 0},
      {"dist " + a3 + " --chain nowide --chain2 mgs:1", 0},
      {"chamber-test " + a2 + " --chain mgs:1", 0},
      {"chamber-test " + a2 + " --chain trivial", 0},
      {"slicing-verify " + a2 + " --chain steps", 0},
      {"hn " + a3 + " --chain missing --module S1", 2},
      {"hn " + a3 + " --chain nowide --module S7", 2},
      {"hn " + a3 + " --chain nowide", 2},
      {"frobnicate " + a3, 2},
      {"hn --scenario /nonexistent.json --chain x --module S1", 2},
      {"hall-verify " + a2 + " --chain pair --bound 2", 2},
      {"chamber-test " + a2 + " --chain mgs:1 --eps 1/2", 2},
  };
  for (const auto& [args, code] : cases) CHECK_MESSAGE(exe(args).code == code, args);
}

TEST_CASE("resource guards exit 3") {
  const std::string path = std::string(TORSCHAIN_BINARY_DIR) + "/a5_guard.json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs(R"({"quiver": "A5:>>>>", "p": 2})", f);
    std::fclose(f);
  }
  CHECK(exe("tors-lattice --scenario " + path).code == 3);
  CHECK(exe("tors-lattice --scenario " + path + " --json").out.find("\"error\": \"resource\"") != std::string::npos);
}

TEST_CASE("json reports are deterministic") {
  const std::string a3 = "--scenario " + kScenarios + "/a3_nowide.json";
  for (const std::string& args : {"stab-verify " + a3 + " --json --seed 5 --count 3",
                                  "chamber-test " + a3 + " --json --chain nowide",
                                  "mgs-bricks " + a3 + " --json"}) {
    const auto first = exe(args);
    const auto second = exe(args);
    CHECK(first.out == second.out);
    CHECK(first.out.rfind("{\n  \"command\"", 0) == 0);
  }
  const auto one = exe("stab-verify " + a3 + " --json --seed 5 --count 3");
  const auto other = exe("stab-verify " + a3 + " --json --seed 6 --count 3");
  CHECK(one.out != other.out);
}

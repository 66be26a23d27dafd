#pragma once

// Golden-case table and runner for the CLI, shared by the standalone golden
// test and the acceptance suite.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace golden {

struct RunResult {
  std::string output;
  int exit_code = -1;
};

inline RunResult run_cli(const std::string& cli, const std::string& args) {
  const std::string command = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  return {output, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Case {
  std::string name;
  std::string args;
  int expected_exit;
};

inline std::vector<Case> cases(const std::string& fx) {
  return {
      {"check_weak", "check " + fx + "instance.json --map db", 0},
      {"check_general", "check " + fx + "instance.json --map skew", 0},
      {"topology_sierpinski", "topology " + fx + "instance.json --family P", 0},
      {"filter_discrete", "filter " + fx + "instance.json --family D", 0},
      {"minopen_sierpinski", "minopen " + fx + "instance.json --family P", 0},
      {"minopen_point", "minopen " + fx + "instance.json --family P --point b", 0},
      {"absorbs_lipschitz_scaled",
       "absorbs " + fx + "instance.json --kind lipschitz --absorbed D3 --absorbing D", 0},
      {"absorbs_topological_failure",
       "absorbs " + fx + "instance.json --kind topological --absorbed S --absorbing C", 1},
      {"absorbs_uniform",
       "absorbs " + fx + "instance.json --kind uniform --absorbed D3 --absorbing D", 0},
      {"member_false",
       "member " + fx + "instance.json --kind topological --map dprime --family C", 1},
      {"member_true", "member " + fx + "instance.json --kind lipschitz --map zero --family D", 0},
      {"equivalent_scaled",
       "equivalent " + fx + "instance.json --kind lipschitz --left D --right D3", 0},
      {"equivalent_false",
       "equivalent " + fx + "instance.json --kind topological --left D --right Z", 1},
      {"morphism_inclusion",
       "morphism " + fx + "instance.json " + fx + "triple.json " + fx + "abmap.json "
       "--kind topological --domain-family D --codomain-family E", 0},
      {"morphism_failure",
       "morphism " + fx + "instance.json " + fx + "triple.json " + fx + "abmap.json "
       "--kind topological --domain-family Z --codomain-family E", 1},
      {"oracle_morphism_continuity",
       "oracle-morphism " + fx + "instance.json " + fx + "triple.json " + fx + "abmap.json "
       "--kind topological --domain-family D --codomain-family E", 0},
      {"oracle_morphism_epsilon",
       "oracle-morphism " + fx + "instance.json " + fx + "triple.json " + fx + "abmap.json "
       "--kind strong-delta-local --domain-family D --codomain-family E", 0},
      {"same_type_discrete",
       "same-type " + fx + "instance.json " + fx + "triple.json --kind topological "
       "--left-family D --right-family E", 0},
      {"initial_single",
       "initial " + fx + "instance.json --kind topological --target " + fx + "triple.json,E," +
           fx + "abmap.json", 0},
      {"subspace_restriction",
       "subspace " + fx + "triple.json --kind topological --family E --subset a,b", 0},
      {"product_pair",
       "product --kind topological --factor " + fx + "instance.json,D --factor " + fx +
           "instance.json,D", 0},
      {"realize_sierpinski", "realize " + fx + "sierpinski_topology.json", 0},
      {"enumerate_count", "enumerate -n 3 --count-only", 0},
      {"enumerate_small", "enumerate -n 2", 0},
      {"falsify_none_found", "falsify --prop closure-scale-topological --trials 50 --seed 9", 0},
      {"falsify_counterexample",
       "falsify --prop closure-domination-topological --trials 5000 --seed 1", 1},
      {"error_unknown_map",
       "member " + fx + "instance.json --kind lipschitz --map nope --family D", 2},
      {"error_negative_entry", "check " + fx + "bad_negative.json --map m", 2},
      {"error_unknown_kind",
       "absorbs " + fx + "instance.json --kind sideways --absorbed D --absorbing D", 2},
      {"error_missing_args", "topology", 2},
      {"error_product_bound",
       "product --kind topological --max-size 4 --factor " + fx + "triple.json,E --factor " + fx +
           "triple.json,E", 2},
  };
}

// Runs every case twice (reports must be byte-identical across runs) and
// compares against the stored golden output. Returns the failure count.
inline int run_all(const std::string& cli, const std::string& tests_dir, bool update,
                   std::ostream& log) {
  const std::string fx = tests_dir + "/fixtures/";
  const std::string golden_dir = tests_dir + "/golden/";
  int failures = 0;
  for (const auto& c : cases(fx)) {
    const RunResult first = run_cli(cli, c.args);
    const RunResult second = run_cli(cli, c.args);
    const std::string golden_path = golden_dir + c.name + ".out";
    if (update) {
      std::ofstream out(golden_path, std::ios::binary);
      out << first.output;
    }
    bool ok = true;
    if (first.exit_code != c.expected_exit) {
      log << "FAIL " << c.name << ": exit " << first.exit_code << ", expected "
          << c.expected_exit << "\n";
      ok = false;
    }
    if (first.output != second.output) {
      log << "FAIL " << c.name << ": output differs between identical runs\n";
      ok = false;
    }
    if (!update && first.output != slurp(golden_path)) {
      log << "FAIL " << c.name << ": output differs from golden " << golden_path << "\n";
      ok = false;
    }
    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace golden

// Golden-file tests for the command-line surface: every subcommand runs on
// fixture inputs; stdout must match the stored golden byte-for-byte and the
// exit code must match the contract (0 holds, 1 fails, 2 errors).
//
// Set RS_UPDATE_GOLDEN=1 to regenerate the golden files.

#include <cstdlib>
#include <iostream>

#include "golden_cases.hpp"

int main() {
  const char* cli = std::getenv("RS_CLI");
  const char* dir = std::getenv("RS_TESTS_DIR");
  if (!cli || !dir) {
    std::cerr << "RS_CLI and RS_TESTS_DIR must be set\n";
    return 2;
  }
  const bool update = std::getenv("RS_UPDATE_GOLDEN") != nullptr;
  const int failures = golden::run_all(cli, dir, update, std::cerr);
  if (failures) {
    std::cerr << failures << " golden case(s) failed\n";
    return 1;
  }
  std::cout << "all golden cases passed\n";
  return 0;
}

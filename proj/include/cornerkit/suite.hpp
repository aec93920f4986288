#pragma once

#include <string>
#include <vector>

#include "cornerkit/dblcat.hpp"

namespace cornerkit {

struct CriterionResult {
  int         id = 0;
  std::string name;
  bool        holds = true;
  json        detail;  // counts on success, the witness on failure
  double      seconds = 0;
};

// Runs the acceptance criteria on the JSON goldens in fixture_dir. Every
// fixture is parsed before any criterion runs, so a missing or malformed
// file raises InputError. Errors inside a criterion fail that criterion.
std::vector<CriterionResult> run_suite(std::string const& fixture_dir);

// The golden files the suite reads.
std::vector<std::string> suite_fixture_files();

}  // namespace cornerkit

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cornerkit/dblcat.hpp"

namespace cornerkit {

// A fixture checked into fixtures/ as JSON, with the builder call that
// regenerates it.
struct Golden {
  std::string           name;    // emit name
  std::vector<int>      params;  // emit parameters
  std::string           file;    // file name under fixtures/
  std::function<json()> build;
};

std::vector<Golden> const& golden_fixtures();

// Names accepted by `fixtures emit`, with their parameter count.
std::vector<std::pair<std::string, int>> fixture_names();

// Builds a fixture by name. InputError for unknown names or a wrong
// number of parameters; GuardError from the builders passes through.
json emit_fixture(std::string const& name, std::vector<int> const& params);

}  // namespace cornerkit

#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "qhh/parse.hpp"

namespace qhh::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(QHH_FIXTURE_DIR) + "/" + name;
}

inline ParsedInput load_fixture(const std::string& name) {
  std::ifstream f(fixture_path(name));
  if (!f) throw std::runtime_error("missing fixture " + name);
  return parse_input(f);
}

inline SubalgebraPair fixture_pair(const std::string& name,
                                   FieldSpec fs = FieldSpec::rationals()) {
  return build_pair(load_fixture(name), fs);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("missing file " + path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace qhh::testing

#pragma once

// Shared test helpers: fixture/golden file access.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

#ifdef PRIOREPAIR_FIXTURE_DIR
inline std::string fixture(const std::string& name) {
  return read_file(std::string(PRIOREPAIR_FIXTURE_DIR) + "/" + name);
}
#endif

#ifdef PRIOREPAIR_GOLDEN_DIR
inline std::string golden(const std::string& name) {
  return read_file(std::string(PRIOREPAIR_GOLDEN_DIR) + "/" + name);
}
#endif

}  // namespace testutil

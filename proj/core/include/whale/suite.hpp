#pragma once

#include "whale/model_io.hpp"

namespace whale {

struct SuiteResult {
  std::string file;
  std::string assertion;
  int line = 0;
  bool passed = false;
  std::string detail;
};

/// Execute every `assert` directive of a parsed file.
std::vector<SuiteResult> run_asserts(const ModelFile& mf,
                                     const std::string& filename);

}  // namespace whale

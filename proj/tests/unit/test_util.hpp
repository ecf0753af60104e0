// Copyright 2026 the qpdft developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "common.hpp"

namespace qpdft::test {

inline std::string data_path(const std::string& relative) {
  return std::string(QPDFT_TEST_DATA_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::io, "test fixture missing: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string read_fixture(const std::string& relative) {
  return read_file(data_path(relative));
}

}  // namespace qpdft::test

// Copyright 2026 The expzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXPZERO_FRONTEND_COMMANDS_HPP
#define EXPZERO_FRONTEND_COMMANDS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "util/error.hpp"

namespace expzero::fe {

struct CommandOptions {
  int precision_bits = 256;
  int max_height = 16;
  bool numeric_check = true;
  bool reproducible = false;
};

// Commands: normalize, height, depth, decompose, refine, zeros, iszero,
// common-zeros, eval. Throws Error on bad input or exhausted caps.
nlohmann::json run_command(const std::string& command, const std::vector<std::string>& args,
                           const CommandOptions& opt = {});

nlohmann::json error_document(const std::string& command, const std::vector<std::string>& args, const Error& e,
                              const CommandOptions& opt = {});

const std::vector<std::string>& command_names();

}  // namespace expzero::fe

#endif  // EXPZERO_FRONTEND_COMMANDS_HPP

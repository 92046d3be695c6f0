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

// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expzero/expzero.h"

namespace {

bool read_lines(const std::string& path, std::vector<std::string>& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact zero analysis of exponential polynomials"};
  app.set_version_flag("--version", std::string(ez_version()));

  std::string command;
  std::vector<std::string> exprs;
  std::string file;
  int precision = 256;
  int max_height = 16;
  bool pretty = false;
  bool reproducible = false;
  bool no_numeric = false;

  app.add_option("command", command,
                 "normalize | height | depth | decompose | refine | zeros | iszero | common-zeros | eval")
      ->required();
  app.add_option("exprs", exprs, "Expressions (use -- before one starting with '-')");
  app.add_option("--file", file, "Read expressions from a file, one per line");
  app.add_option("--precision", precision, "Numeric cross-check cap in bits")->capture_default_str();
  app.add_option("--max-height", max_height, "Recursion cap for zero enumeration")->capture_default_str();
  app.add_flag("--json", "Compact JSON output (default)");
  app.add_flag("--pretty", pretty, "Indented JSON output");
  app.add_flag("--reproducible", reproducible, "Omit the timestamp");
  app.add_flag("--no-numeric-check", no_numeric, "Skip ball-arithmetic cross-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : EZ_ERR_INPUT;
  }

  if (!file.empty() && !read_lines(file, exprs)) {
    std::cerr << "error: cannot read " << file << "\n";
    return EZ_ERR_INPUT;
  }

  ez_context* ctx = nullptr;
  if (ez_context_new(&ctx) != EZ_OK || ez_context_set_precision(ctx, precision) != EZ_OK ||
      ez_context_set_max_height(ctx, max_height) != EZ_OK || ez_context_set_numeric_check(ctx, !no_numeric) != EZ_OK ||
      ez_context_set_reproducible(ctx, reproducible) != EZ_OK) {
    std::cerr << "error: " << ez_last_error() << "\n";
    ez_context_free(ctx);
    return EZ_ERR_INPUT;
  }

  std::vector<const char*> args;
  for (const auto& e : exprs) args.push_back(e.c_str());
  char* out = nullptr;
  const ez_status st = ez_run_command(ctx, command.c_str(), args.data(), args.size(), pretty ? 1 : 0, &out);
  if (out) {
    std::cout << out << "\n";
    ez_string_free(out);
  }
  if (st != EZ_OK) std::cerr << "error: " << ez_last_error_kind() << ": " << ez_last_error() << "\n";
  ez_context_free(ctx);
  return static_cast<int>(st);
}

// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#include <iostream>
#include <string>
#include <vector>

#include "lpforget/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lpforget::run_cli(args, std::cin, std::cout, std::cerr);
}

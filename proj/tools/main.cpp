// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "paramadapt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return paramadapt::cli::main_entry(args, std::cout, std::cerr);
}

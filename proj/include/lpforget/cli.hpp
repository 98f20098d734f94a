// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpforget/syntax.hpp"

namespace lpforget {

enum class OutputFormat { Text, Json };

// One parsed invocation. seed is reserved for sampled workloads; no current
// subcommand samples.
struct CliConfig {
  std::string subcommand;
  std::string input_path = "-";
  std::optional<Atom> atom;
  bool facts_only = false;
  std::size_t max_contexts = 50000;
  bool simplify = false;
  OutputFormat format = OutputFormat::Text;
  bool dot = false;
  std::optional<long long> seed;
};

// Exit codes: 0 success or verified pass, 1 counterexample found, 2 usage
// or parse error, 3 residual occurrence of the forgotten atom.
int run(const CliConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

// Parses argv-style arguments (without the program name) and dispatches to
// run. All diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace lpforget

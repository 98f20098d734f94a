// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#include "lpforget/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpforget/depgraph.hpp"
#include "lpforget/forget.hpp"
#include "lpforget/ht.hpp"
#include "lpforget/verify.hpp"

namespace lpforget {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResidual = 3;

std::string read_input(const CliConfig& config, std::istream& in) {
  if (config.input_path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(config.input_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + config.input_path + "'");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// Emits "label: first-line" and indents any remaining lines two spaces.
void print_labeled(std::ostream& out, const std::string& label,
                   const std::string& block) {
  std::istringstream lines(block);
  std::string line;
  bool first = true;
  while (std::getline(lines, line)) {
    out << (first ? label + ": " : "  ") << line << "\n";
    first = false;
  }
}

int run_models(const CliConfig& config, const std::string& text,
               std::ostream& out) {
  Theory t = parse_theory(text);
  ModelSet ms = equilibrium_models(t);
  out << (config.format == OutputFormat::Json ? to_json(ms) + "\n"
                                              : to_text(ms));
  return kExitOk;
}

int run_ht_models(const CliConfig& config, const std::string& text,
                  std::ostream& out) {
  Theory t = parse_theory(text);
  HTModelSet ms = ht_models(t);
  out << (config.format == OutputFormat::Json ? to_json(ms) + "\n"
                                              : to_text(ms));
  return kExitOk;
}

int run_graph(const CliConfig& config, const std::string& text,
              std::ostream& out) {
  Program p = parse_program(text);
  DepGraph g = dependency_graph(p);
  if (config.format == OutputFormat::Json && !config.dot) {
    out << to_json(g) << "\n";
  } else {
    out << to_dot(g);
  }
  return kExitOk;
}

int run_forget(const CliConfig& config, const std::string& text,
               std::ostream& out, std::ostream& err) {
  Program p = parse_program(text);
  const Atom& a = *config.atom;
  if (!p.signature().count(a)) {
    err << "warning: atom '" << a.name()
        << "' does not occur in the program\n";
  }
  ForgetResult result = f_es(p, a);
  Theory shown = config.simplify ? simplify(result.theory) : result.theory;
  if (config.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["atom"] = a.name();
    j["residual"] = result.residual;
    j["text"] = render(shown);
    out << j.dump() << "\n";
  } else {
    out << render(shown);
    if (result.residual) {
      out << "% residual: " << a.name() << "\n";
    }
  }
  return result.residual ? kExitResidual : kExitOk;
}

int run_check(const CliConfig& config, const std::string& text,
              std::ostream& out) {
  Program p = parse_program(text);
  ApplicabilityReport report = applicability(p, *config.atom);
  if (config.format == OutputFormat::Json) {
    out << to_json(report) << "\n";
  } else {
    out << to_text(report);
  }
  return kExitOk;
}

int run_verify(const CliConfig& config, const std::string& text,
               std::ostream& out) {
  Program p = parse_program(text);
  const Atom& a = *config.atom;
  ForgetResult result = f_es(p, a);
  std::set<Atom> forgotten{a};

  Verdict uniform = check_uniform_persistence(p, result.theory, forgotten);
  std::optional<Verdict> strong;
  if (uniform.status == VerdictStatus::Pass && !config.facts_only) {
    strong = check_strong_persistence(p, result.theory, forgotten,
                                      ContextBudget{false,
                                                    config.max_contexts});
  }

  if (config.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["atom"] = a.name();
    j["residual"] = result.residual;
    j["uniform"] = nlohmann::ordered_json::parse(to_json(uniform));
    j["strong"] = strong ? nlohmann::ordered_json::parse(to_json(*strong))
                         : nlohmann::ordered_json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << "atom: " << a.name() << "\n";
    out << "residual: " << (result.residual ? "true" : "false") << "\n";
    print_labeled(out, "uniform", to_text(uniform));
    if (strong) {
      print_labeled(out, "strong", to_text(*strong));
    } else {
      out << "strong: skipped\n";
    }
  }

  if (uniform.status == VerdictStatus::ResidualAtom) {
    return kExitResidual;
  }
  if (uniform.status == VerdictStatus::Counterexample ||
      (strong && strong->status == VerdictStatus::Counterexample)) {
    return kExitCounterexample;
  }
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    std::string text = read_input(config, in);
    if (config.subcommand == "models") {
      return run_models(config, text, out);
    }
    if (config.subcommand == "ht-models") {
      return run_ht_models(config, text, out);
    }
    if (config.subcommand == "graph") {
      return run_graph(config, text, out);
    }
    if (config.subcommand == "forget") {
      return run_forget(config, text, out, err);
    }
    if (config.subcommand == "check") {
      return run_check(config, text, out);
    }
    if (config.subcommand == "verify") {
      return run_verify(config, text, out);
    }
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SignatureTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetInvalid& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string atom_name;
  std::string format = "text";

  CLI::App app{"Forgetting toolkit for extended logic programs"};
  app.name("lpforget");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", config.input_path,
                    "input file, or - for standard input");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_atom = [&](CLI::App* cmd) {
    cmd->add_option("--atom", atom_name, "atom to forget")->required();
  };

  CLI::App* models = app.add_subcommand("models", "print equilibrium models");
  add_common(models);

  CLI::App* ht = app.add_subcommand("ht-models", "print HT models");
  add_common(ht);

  CLI::App* graph = app.add_subcommand("graph", "print the dependency graph");
  add_common(graph);
  graph->add_flag("--dot", config.dot, "force DOT output");

  CLI::App* forget = app.add_subcommand("forget", "forget an atom");
  add_common(forget);
  add_atom(forget);
  forget->add_flag("--simplify", config.simplify,
                   "simplify the output theory");

  CLI::App* check =
      app.add_subcommand("check", "report applicability guarantees");
  add_common(check);
  add_atom(check);

  CLI::App* verify =
      app.add_subcommand("verify", "check persistence of forgetting");
  add_common(verify);
  add_atom(verify);
  verify->add_option("--budget", config.max_contexts,
                     "maximum number of contexts")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--facts-only", config.facts_only,
                   "only run the complete fact-context check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format =
      format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (!atom_name.empty()) {
    try {
      config.atom = Atom(atom_name);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return run(config, in, out, err);
}

}  // namespace lpforget

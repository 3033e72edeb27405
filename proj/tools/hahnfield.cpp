// hahnfield: command-line front end.
//
//   hahnfield repl
//   hahnfield run <verb> <args...> [--group G] [--field F] [--bound B] ...
//   hahnfield script <file>            (also: --script <file>)
//   hahnfield <verb> <args...>         shorthand for run

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hahnfield/error.hpp"
#include "hahnfield/session.hpp"

namespace {

void emit(const hahn::CommandOutput& out) {
  if (out.text.empty()) return;
  (out.exit_code == hahn::kExitOk ? std::cout : std::cerr) << out.text << "\n";
}

int run_stream(std::istream& in, bool interactive) {
  hahn::SessionContext ctx;
  int worst = hahn::kExitOk;
  std::string line;
  for (;;) {
    if (interactive) std::cout << "hahn> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line == "quit" || line == "exit") break;
    const hahn::CommandOutput out = hahn::run_line(line, ctx);
    emit(out);
    worst = std::max(worst, out.exit_code);
  }
  if (interactive) std::cout << "\n";
  return interactive ? hahn::kExitOk : worst;
}

int run_script(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << "\n";
    return hahn::kExitDomainError;
  }
  return run_stream(file, false);
}

int run_verb(const std::vector<std::string>& tokens) {
  hahn::SessionContext ctx;
  hahn::CommandOutput out;
  try {
    out = hahn::run_command(hahn::parse_command(tokens), ctx);
  } catch (const hahn::SyntaxError& e) {
    out = {std::string("error: ") + e.what(), hahn::kExitSyntaxError};
  }
  emit(out);
  return out.exit_code;
}

bool is_verb(const std::string& word) {
  static const std::vector<std::string> verbs = {"eval",  "val",      "cmp",      "floor",    "residue",
                                                 "decomp-add", "decomp-mul", "inv",  "root",     "classify",
                                                 "ip-check", "ip",    "expgroup", "ipa",      "axioms",
                                                 "catalog"};
  return std::find(verbs.begin(), verbs.end(), word) != verbs.end();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 2 && is_verb(argv[1])) return run_verb(std::vector<std::string>(argv + 1, argv + argc));

  CLI::App app{"Exact arithmetic in generalized power series fields"};
  app.require_subcommand(0, 1);
  std::string script_option;
  app.add_option("--script", script_option, "Run commands from a file");

  auto* repl = app.add_subcommand("repl", "Interactive session");
  auto* run = app.add_subcommand("run", "Run a single verb");
  run->prefix_command();
  auto* script = app.add_subcommand("script", "Run commands from a file");
  std::string script_path;
  script->add_option("file", script_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hahn::kExitSyntaxError;
  }

  if (*run) {
    const std::vector<std::string> tokens = run->remaining();
    return run_verb(tokens);
  }
  if (*script) return run_script(script_path);
  if (!script_option.empty()) return run_script(script_option);
  if (*repl || argc == 1) return run_stream(std::cin, isatty(STDIN_FILENO) != 0);
  return hahn::kExitOk;
}

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hahnfield/parser.hpp"
#include "hahnfield/series.hpp"

namespace hahn {

enum class Verb {
  Eval,
  Val,
  Cmp,
  Floor,
  Residue,
  DecompAdd,
  DecompMul,
  Inv,
  Root,
  Classify,
  IpCheck,
  ExpGroup,
  Ipa,
  Axioms,
  Catalog,
};

const char* to_string(Verb verb);

/// Active carriers and let-bindings of a REPL or script. Bindings always live over
/// the active carriers; switching carriers drops them.
class SessionContext {
 public:
  SessionContext();

  const Carrier& carrier() const { return carrier_; }
  const Bindings& bindings() const { return bindings_; }

  void set_carrier(FieldClass field, GroupRef group);
  void bind(const std::string& name, Series value);

 private:
  Carrier carrier_;
  Bindings bindings_;
};

struct Command {
  Verb verb = Verb::Eval;
  std::vector<std::string> args;
  /// --name value pairs; switches such as --full map to "true".
  std::map<std::string, std::string> flags;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitSyntaxError = 2;

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

/// Splits a command line on whitespace, honouring double quotes.
/// Throws SyntaxError on an unterminated quote.
std::vector<std::string> tokenize(std::string_view line);

/// Throws SyntaxError for unknown verbs or flags.
Command parse_command(const std::vector<std::string>& tokens);

/// Executes `cmd`. --field/--group apply to this command only; --out also writes
/// the rendered text to a file.
CommandOutput run_command(const Command& cmd, SessionContext& ctx);

/// One REPL/script line: blank or '#' comment, "field F; group G", "let x = expr",
/// or a verb with its arguments.
CommandOutput run_line(std::string_view line, SessionContext& ctx);

}  // namespace hahn

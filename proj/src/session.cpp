#include "hahnfield/session.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <utility>

#include "hahnfield/error.hpp"
#include "hahnfield/exp_analysis.hpp"
#include "hahnfield/integer_part.hpp"
#include "hahnfield/valuation.hpp"

namespace hahn {

namespace {

constexpr std::pair<const char*, Verb> kVerbs[] = {
    {"eval", Verb::Eval},          {"val", Verb::Val},
    {"cmp", Verb::Cmp},            {"floor", Verb::Floor},
    {"residue", Verb::Residue},    {"decomp-add", Verb::DecompAdd},
    {"decomp-mul", Verb::DecompMul}, {"inv", Verb::Inv},
    {"root", Verb::Root},          {"classify", Verb::Classify},
    {"ip-check", Verb::IpCheck},   {"expgroup", Verb::ExpGroup},
    {"ipa", Verb::Ipa},            {"axioms", Verb::Axioms},
    {"catalog", Verb::Catalog},
};

constexpr const char* kValueFlags[] = {"group", "field", "bound", "samples", "seed", "target", "out"};
constexpr const char* kSwitches[] = {"full"};

constexpr std::uint64_t kMaxAxiomBound = std::uint64_t{1} << 30;

[[noreturn]] void usage(const std::string& message) {
  throw SyntaxError(SyntaxErrorKind::Syntax, 0, message);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string chomp(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::uint64_t parse_unsigned(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    usage(std::string(what) + " must be a non-negative integer: '" + text + "'");
  }
  const mpz_class value(text, 10);
  if (value > std::numeric_limits<std::uint64_t>::max() || !value.fits_ulong_p()) {
    usage(std::string(what) + " out of range: " + text);
  }
  return value.get_ui();
}

std::string describe_exponent(const GroupElement& g) {
  if (g.is_zero()) return "0";
  if (g.terms().size() == 1) {
    const auto& [point, value] = g.terms().front();
    return to_string(value) + " (at chain point " + to_string(point) + ")";
  }
  return to_string(g);
}

void expect_args(const Command& cmd, std::size_t count) {
  if (cmd.args.size() != count) {
    usage(std::string(to_string(cmd.verb)) + " takes " + std::to_string(count) + " argument(s), got " +
          std::to_string(cmd.args.size()));
  }
}

const std::string* flag(const Command& cmd, const std::string& name) {
  const auto it = cmd.flags.find(name);
  return it == cmd.flags.end() ? nullptr : &it->second;
}

const std::string& required_flag(const Command& cmd, const std::string& name) {
  const std::string* value = flag(cmd, name);
  if (!value) usage(std::string(to_string(cmd.verb)) + " requires --" + name);
  return *value;
}

std::string execute(const Command& cmd, const SessionContext& ctx) {
  const Carrier& carrier = ctx.carrier();
  const auto series_arg = [&](std::size_t i) { return parse_series(cmd.args[i], carrier, ctx.bindings()); };
  // Single-expression verbs accept an unquoted expression split over several tokens.
  const auto expression = [&] {
    if (cmd.args.empty()) usage(std::string(to_string(cmd.verb)) + " needs an expression");
    std::string src = cmd.args.front();
    for (std::size_t i = 1; i < cmd.args.size(); ++i) src += " " + cmd.args[i];
    return parse_series(src, carrier, ctx.bindings());
  };
  const auto target = [&] {
    const std::string* t = flag(cmd, "target");
    return t ? parse_arch_class(*t) : additive_class(carrier.field);
  };

  switch (cmd.verb) {
    case Verb::Eval:
      return to_string(expression());
    case Verb::Val: {
      const auto v = valuation(expression());
      return v ? describe_exponent(*v) : "infinity";
    }
    case Verb::Cmp: {
      expect_args(cmd, 2);
      const auto order = series_arg(0) <=> series_arg(1);
      return order < 0 ? "LT" : (order > 0 ? "GT" : "EQ");
    }
    case Verb::Floor:
      return to_string(floor(expression()).series());
    case Verb::Residue:
      return to_string(residue(expression()));
    case Verb::DecompAdd: {
      const AdditiveDecomposition d = decompose_additive(expression());
      return "infinite: " + to_string(d.infinite_part) + "\nconstant: " + to_string(d.constant_part) +
             "\ninfinitesimal: " + to_string(d.infinitesimal_part);
    }
    case Verb::DecompMul: {
      const MultiplicativeDecomposition d = decompose_multiplicative(expression());
      return "exponent: " + describe_exponent(d.exponent) + "\nunit_coeff: " + to_string(d.unit_coeff) +
             "\none_unit: " + to_string(d.one_unit);
    }
    case Verb::Inv: {
      const GroupElement bound = parse_group_element(required_flag(cmd, "bound"), carrier.group);
      return to_string(inverse_truncated(expression(), bound));
    }
    case Verb::Root: {
      expect_args(cmd, 2);
      const std::uint64_t n = parse_unsigned(cmd.args[1], "root index");
      if (n == 0) usage("root index must be positive");
      const GroupElement bound = parse_group_element(required_flag(cmd, "bound"), carrier.group);
      return to_string(root_truncated(series_arg(0), n, bound));
    }
    case Verb::Classify:
      return to_string(classify(expression()));
    case Verb::IpCheck: {
      expect_args(cmd, 0);
      const std::string* samples = flag(cmd, "samples");
      const std::string* seed = flag(cmd, "seed");
      const IpCheckReport report =
          ip_closure_check(carrier, samples ? parse_unsigned(*samples, "samples") : 1000,
                           seed ? parse_unsigned(*seed, "seed") : 42);
      return chomp(to_string(report));
    }
    case Verb::ExpGroup: {
      expect_args(cmd, 0);
      const ArchClass c = target();
      return chomp(to_record(check_exponential_group(*carrier.group, c), *carrier.group, c));
    }
    case Verb::Ipa: {
      expect_args(cmd, 0);
      const FieldSpec spec{carrier.field, carrier.group, flag(cmd, "full") != nullptr};
      return chomp(to_record(ipa_verdict(spec, target())));
    }
    case Verb::Axioms: {
      expect_args(cmd, 0);
      const std::string* b = flag(cmd, "bound");
      const std::uint64_t bound = b ? parse_unsigned(*b, "bound") : (std::uint64_t{1} << 20);
      if (bound > kMaxAxiomBound) {
        throw MathError(ErrorKind::InvalidArgument, "bound above " + std::to_string(kMaxAxiomBound));
      }
      return chomp(to_string(exp_axioms_check(bound)));
    }
    case Verb::Catalog: {
      expect_args(cmd, 0);
      std::string out;
      for (const auto& entry : catalog_examples()) {
        if (!out.empty()) out += "\n";
        out += to_string(*entry.group) + " in " + to_string(entry.target) + ": " +
               summary(entry.expected) + " -- " + entry.rationale;
      }
      return out;
    }
  }
  usage("unhandled verb");
}

}  // namespace

const char* to_string(Verb verb) {
  for (const auto& [name, v] : kVerbs) {
    if (v == verb) return name;
  }
  return "?";
}

SessionContext::SessionContext()
    : carrier_{FieldClass::Rat, make_group(ChainOrder::finite(1), ArchClass::Rat)} {}

void SessionContext::set_carrier(FieldClass field, GroupRef group) {
  carrier_ = Carrier{field, std::move(group)};
  bindings_.clear();
}

void SessionContext::bind(const std::string& name, Series value) {
  if (!(value.carrier() == carrier_)) {
    throw MathError(ErrorKind::MixedCarriers, "binding '" + name + "' is not over the active carriers");
  }
  bindings_.insert_or_assign(name, std::move(value));
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '\n') {
      ++i;
      continue;
    }
    std::string token;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '\n') {
      if (line[i] == '"') {
        const std::size_t open = i++;
        while (i < line.size() && line[i] != '"') token += line[i++];
        if (i >= line.size()) throw SyntaxError(SyntaxErrorKind::Syntax, open, "unterminated quote");
        ++i;
      } else {
        token += line[i++];
      }
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

Command parse_command(const std::vector<std::string>& tokens) {
  if (tokens.empty()) usage("missing verb");
  Command cmd;
  std::size_t i = 0;
  std::string verb = tokens[i++];
  if (verb == "ip" && i < tokens.size() && tokens[i] == "check") {
    verb = "ip-check";
    ++i;
  }
  bool known = false;
  for (const auto& [name, v] : kVerbs) {
    if (verb == name) {
      cmd.verb = v;
      known = true;
    }
  }
  if (!known) usage("unknown verb '" + verb + "'");

  for (; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    if (token.rfind("--", 0) != 0) {
      cmd.args.push_back(token);
      continue;
    }
    std::string name = token.substr(2);
    std::optional<std::string> inline_value;
    if (const auto eq = name.find('='); eq != std::string::npos) {
      inline_value = name.substr(eq + 1);
      name = name.substr(0, eq);
    }
    bool is_switch = false;
    bool is_value = false;
    for (const char* s : kSwitches) is_switch = is_switch || name == s;
    for (const char* f : kValueFlags) is_value = is_value || name == f;
    if (is_switch && !inline_value) {
      cmd.flags[name] = "true";
    } else if (is_value) {
      if (inline_value) {
        cmd.flags[name] = *inline_value;
      } else if (i + 1 < tokens.size()) {
        cmd.flags[name] = tokens[++i];
      } else {
        usage("--" + name + " needs a value");
      }
    } else {
      usage("unknown flag --" + name);
    }
  }
  return cmd;
}

CommandOutput run_command(const Command& cmd, SessionContext& ctx) {
  try {
    const SessionContext* active = &ctx;
    SessionContext scoped;
    const std::string* field = flag(cmd, "field");
    const std::string* group = flag(cmd, "group");
    if (field || group) {
      scoped.set_carrier(field ? parse_field(*field) : ctx.carrier().field,
                         group ? parse_presentation(*group) : ctx.carrier().group);
      active = &scoped;
    }
    CommandOutput result{execute(cmd, *active), kExitOk};
    if (const std::string* out = flag(cmd, "out")) {
      std::ofstream file(*out);
      file << result.text << "\n";
      if (!file) throw MathError(ErrorKind::InvalidArgument, "cannot write " + *out);
    }
    return result;
  } catch (const SyntaxError& e) {
    return {std::string("error: ") + e.what(), kExitSyntaxError};
  } catch (const MathError& e) {
    return {std::string("error: ") + e.what(), kExitDomainError};
  }
}

CommandOutput run_line(std::string_view raw, SessionContext& ctx) {
  const std::string line = trim(raw);
  if (line.empty() || line.front() == '#') return {};
  try {
    if (line.rfind("field", 0) == 0 && (line.size() == 5 || !std::isalnum(static_cast<unsigned char>(line[5])))) {
      auto [field, group] = parse_group_spec(line);
      ctx.set_carrier(field, std::move(group));
      return {std::string("field ") + to_string(field) + "; group " + to_string(*ctx.carrier().group)};
    }
    if (line.rfind("let ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw SyntaxError(SyntaxErrorKind::Syntax, line.size(), "expected '='");
      const std::string name = trim(std::string_view(line).substr(4, eq - 4));
      const bool valid = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                         name.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") ==
                             std::string::npos;
      if (!valid || name == "t" || name == "r2") {
        throw SyntaxError(SyntaxErrorKind::Syntax, 4, "invalid binding name '" + name + "'");
      }
      Series value = parse_series(std::string_view(line).substr(eq + 1), ctx.carrier(), ctx.bindings());
      const std::string text = name + " = " + to_string(value);
      ctx.bind(name, std::move(value));
      return {text};
    }
    return run_command(parse_command(tokenize(line)), ctx);
  } catch (const SyntaxError& e) {
    return {std::string("error: ") + e.what(), kExitSyntaxError};
  } catch (const MathError& e) {
    return {std::string("error: ") + e.what(), kExitDomainError};
  }
}

}  // namespace hahn

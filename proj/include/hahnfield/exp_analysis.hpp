#pragma once

// Necessary conditions for a value group to be an exponential group in C, the
// resulting no-IPA certificates, and a bounded audit of the arithmetic facts about
// 2^x that the left-exponential construction relies on.
//
// Being an exponential group in C means: the rank is order-isomorphic to the
// negative cone G^{<0} and every Archimedean component is isomorphic to C. Full
// order-isomorphism of the rank with G^{<0} is not decidable in general, so a
// passing verdict only ever reports the decidable checks it ran.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hahnfield/group.hpp"
#include "hahnfield/scalar.hpp"

namespace hahn {

enum class ExpFailure {
  TrivialGroup,
  RankFinite,
  RankNotDense,
  RankHasEndpoint,
  NegConeMismatch,
  ComponentNotIsomorphicToTarget,
  ComponentsNotAllIsomorphic,
  NotDivisible,
};

const char* to_string(ExpFailure f);

/// The one failing invariant behind a NotExponential verdict, with its data.
struct ExpWitness {
  ExpFailure reason = ExpFailure::TrivialGroup;
  std::string invariant;
  std::vector<ChainPoint> points;
  std::vector<ArchClass> classes;
  std::optional<std::size_t> rank;

  friend bool operator==(const ExpWitness&, const ExpWitness&) = default;
};

enum class CheckStatus { Passed, NotDecided };

struct NecessaryCheck {
  std::string name;
  CheckStatus status = CheckStatus::Passed;

  friend bool operator==(const NecessaryCheck&, const NecessaryCheck&) = default;
};

struct NotExponential {
  ExpWitness witness;
  friend bool operator==(const NotExponential&, const NotExponential&) = default;
};

struct PassesNecessaryConditions {
  std::vector<NecessaryCheck> checks;
  friend bool operator==(const PassesNecessaryConditions&, const PassesNecessaryConditions&) = default;
};

struct UnknownVerdict {
  std::string note;
  friend bool operator==(const UnknownVerdict&, const UnknownVerdict&) = default;
};

using ExpGroupVerdict = std::variant<NotExponential, PassesNecessaryConditions, UnknownVerdict>;

/// Runs, in order: nontrivial; components pairwise isomorphic; divisible; rank a
/// dense order without endpoints; negative cone invariants equal to the rank's;
/// components isomorphic to `target`. The first failure is returned as witness.
ExpGroupVerdict check_exponential_group(const GroupPresentation& group, ArchClass target);

/// Re-derives the cited invariant directly from the presentation.
bool witness_holds(const GroupPresentation& group, ArchClass target, const ExpWitness& witness);

/// Additive group (k, +, 0, <) of the coefficient field.
ArchClass additive_class(FieldClass field);

/// A real closed K with k(G)^rc <= K <= k((G)); `full_power_series` selects K = k((G)).
struct FieldSpec {
  FieldClass field = FieldClass::Rat;
  GroupRef group;
  bool full_power_series = false;
};

enum class IpaVerdict { NoIPA, Inconclusive };
enum class IpaRule {
  /// The value group of a field with an IPA is an exponential group in (k, +).
  ValueGroupNotExponential,
  /// Maximally valued power series fields carry no left exponentiation, hence no IPA.
  MaximallyValued,
};

const char* to_string(IpaVerdict v);
const char* to_string(IpaRule r);

struct IpaCertificate {
  IpaVerdict verdict = IpaVerdict::Inconclusive;
  std::optional<IpaRule> rule;
  std::optional<ExpWitness> witness;
  /// Citation token for rules that consume an external nonexistence result.
  std::string citation;
  std::vector<std::string> caveats;
  FieldSpec spec;
  ArchClass target = ArchClass::Rat;

  friend bool operator==(const IpaCertificate& x, const IpaCertificate& y) {
    return x.verdict == y.verdict && x.rule == y.rule && x.witness == y.witness &&
           x.citation == y.citation && x.caveats == y.caveats && x.spec.field == y.spec.field &&
           same_presentation(x.spec.group, y.spec.group) &&
           x.spec.full_power_series == y.spec.full_power_series && x.target == y.target;
  }
};

/// Throws ResidueMismatch unless target is the additive class of spec.field.
IpaCertificate ipa_verdict(const FieldSpec& spec, ArchClass target);

/// Re-runs the cited check and confirms it reproduces the certificate.
bool revalidate(const IpaCertificate& certificate);

/// Stable line-oriented records, one "key: value" per line.
std::string to_record(const ExpGroupVerdict& verdict, const GroupPresentation& group, ArchClass target);
std::string to_record(const IpaCertificate& certificate);
std::string summary(const ExpGroupVerdict& verdict);

struct CatalogEntry {
  GroupRef group;
  ArchClass target = ArchClass::Rat;
  ExpGroupVerdict expected;
  std::string rationale;
};

/// Regression corpus covering each way a divisible group can fail to be exponential,
/// plus passing cases. Every entry is re-checked on construction; a mismatch throws
/// std::logic_error.
std::vector<CatalogEntry> catalog_examples();

struct FactResult {
  int fact = 0;
  std::string statement;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string counterexample;
};

struct ExpAxiomsReport {
  std::uint64_t bound = 0;
  std::array<FactResult, 5> facts;

  bool passed() const;
};

/// Decides E(x, y), "2^x = y", from the binary shape of y alone: y is a power of
/// two whose trailing-zero count is x.
bool exp_graph(std::uint64_t x, std::uint64_t y);

/// The unique y with 2^y <= x < 2^(y+1), for x >= 1.
std::uint64_t power_bracket(std::uint64_t x);

/// Exhaustive check of the five facts on the graph of E restricted to values
/// <= bound (and, for the bracketing fact, on every 1 <= x <= bound).
/// Throws InvalidArgument for bound < 2.
ExpAxiomsReport exp_axioms_check(std::uint64_t bound);

std::string to_string(const ExpAxiomsReport& report);

}  // namespace hahn

#include "hahnfield/exp_analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "hahnfield/error.hpp"

namespace hahn {

const char* to_string(ExpFailure f) {
  switch (f) {
    case ExpFailure::TrivialGroup:
      return "TrivialGroup";
    case ExpFailure::RankFinite:
      return "RankFinite";
    case ExpFailure::RankNotDense:
      return "RankNotDense";
    case ExpFailure::RankHasEndpoint:
      return "RankHasEndpoint";
    case ExpFailure::NegConeMismatch:
      return "NegConeMismatch";
    case ExpFailure::ComponentNotIsomorphicToTarget:
      return "ComponentNotIsomorphicToTarget";
    case ExpFailure::ComponentsNotAllIsomorphic:
      return "ComponentsNotAllIsomorphic";
    case ExpFailure::NotDivisible:
      return "NotDivisible";
  }
  return "?";
}

const char* to_string(IpaVerdict v) { return v == IpaVerdict::NoIPA ? "NoIPA" : "Inconclusive"; }

const char* to_string(IpaRule r) {
  return r == IpaRule::ValueGroupNotExponential ? "ValueGroupNotExponential" : "MaximallyValued";
}

namespace {

NotExponential fail(ExpFailure reason, std::string invariant, std::vector<ChainPoint> points = {},
                    std::vector<ArchClass> classes = {}, std::optional<std::size_t> rank = {}) {
  return {ExpWitness{reason, std::move(invariant), std::move(points), std::move(classes), rank}};
}

bool negcone_matches_rank(const OrderInvariants& inv) {
  return inv.rank_dense == inv.negcone_dense &&
         (inv.rank_has_min || inv.rank_has_max) == inv.negcone_has_endpoints;
}

ChainPoint point(std::size_t i) { return ChainPoint(static_cast<long>(i)); }

}  // namespace

ExpGroupVerdict check_exponential_group(const GroupPresentation& group, ArchClass target) {
  const OrderInvariants inv = order_invariants(group);
  const ChainOrder& chain = group.chain();

  if (inv.is_trivial) return fail(ExpFailure::TrivialGroup, "is_trivial");

  if (chain.is_finite()) {
    const ArchClass first = group.component(point(0));
    for (std::size_t j = 1; j < chain.size(); ++j) {
      const ArchClass other = group.component(point(j));
      if (!isomorphic(first, other)) {
        return fail(ExpFailure::ComponentsNotAllIsomorphic, "components_mutually_isomorphic",
                    {point(0), point(j)}, {first, other});
      }
    }
  }

  if (!inv.divisible) {
    std::size_t at = 0;
    if (chain.is_finite()) {
      while (group.component(point(at)) != ArchClass::Int) ++at;
    }
    return fail(ExpFailure::NotDivisible, "divisible", {point(at)}, {ArchClass::Int});
  }

  if (inv.rank_finite) return fail(ExpFailure::RankFinite, "rank_finite", {}, {}, inv.rank_finite);
  if (!inv.rank_dense) {
    // Only the Integers chain is infinite and not dense; 0 and 1 are adjacent there.
    return fail(ExpFailure::RankNotDense, "rank_dense", {point(0), point(1)});
  }
  if (inv.rank_has_min || inv.rank_has_max) {
    return fail(ExpFailure::RankHasEndpoint, "rank_without_endpoints");
  }
  if (!negcone_matches_rank(inv)) return fail(ExpFailure::NegConeMismatch, "negcone_matches_rank");

  const ArchClass component = group.component(point(0));
  if (!isomorphic(component, target)) {
    return fail(ExpFailure::ComponentNotIsomorphicToTarget, "components_isomorphic_to_target",
                {point(0)}, {component, target});
  }

  return PassesNecessaryConditions{{
      {"nontrivial", CheckStatus::Passed},
      {"components_mutually_isomorphic", CheckStatus::Passed},
      {"divisible", CheckStatus::Passed},
      {"rank_dense_without_endpoints", CheckStatus::Passed},
      {"negcone_matches_rank", CheckStatus::Passed},
      {"components_isomorphic_to_target", CheckStatus::Passed},
      {"rank_order_isomorphic_to_negcone", CheckStatus::NotDecided},
  }};
}

bool witness_holds(const GroupPresentation& group, ArchClass target, const ExpWitness& w) {
  const OrderInvariants inv = order_invariants(group);
  const ChainOrder& chain = group.chain();
  const auto component_is = [&](std::size_t i) {
    return i < w.points.size() && i < w.classes.size() && chain.contains(w.points[i]) &&
           group.component(w.points[i]) == w.classes[i];
  };
  switch (w.reason) {
    case ExpFailure::TrivialGroup:
      return group.is_trivial();
    case ExpFailure::ComponentsNotAllIsomorphic:
      return component_is(0) && component_is(1) && !isomorphic(w.classes[0], w.classes[1]);
    case ExpFailure::NotDivisible:
      return component_is(0) && w.classes[0] == ArchClass::Int && !inv.divisible;
    case ExpFailure::RankFinite:
      return chain.is_finite() && w.rank == chain.size();
    case ExpFailure::RankNotDense: {
      if (w.points.size() != 2 || !chain.contains(w.points[0]) || !chain.contains(w.points[1])) {
        return false;
      }
      // Adjacent integral points have nothing of an integral chain between them.
      return chain.kind() != ChainKind::Rationals &&
             w.points[1].position - w.points[0].position == 1;
    }
    case ExpFailure::RankHasEndpoint:
      return inv.rank_has_min || inv.rank_has_max;
    case ExpFailure::NegConeMismatch:
      return !negcone_matches_rank(inv);
    case ExpFailure::ComponentNotIsomorphicToTarget:
      return component_is(0) && w.classes.size() == 2 && w.classes[1] == target &&
             !isomorphic(w.classes[0], target);
  }
  return false;
}

ArchClass additive_class(FieldClass field) {
  return field == FieldClass::Rat ? ArchClass::Rat : ArchClass::RatRoot2;
}

namespace {

constexpr const char* kMaximallyValuedCitation = "no-left-exponential-on-maximally-valued-fields";

}  // namespace

IpaCertificate ipa_verdict(const FieldSpec& spec, ArchClass target) {
  if (target != additive_class(spec.field)) {
    throw MathError(ErrorKind::ResidueMismatch, std::string("target ") + to_string(target) +
                                                    " is not the additive group of " +
                                                    to_string(spec.field));
  }
  IpaCertificate cert;
  cert.spec = spec;
  cert.target = target;

  const ExpGroupVerdict check = check_exponential_group(*spec.group, target);
  if (const auto* failed = std::get_if<NotExponential>(&check)) {
    cert.verdict = IpaVerdict::NoIPA;
    cert.rule = IpaRule::ValueGroupNotExponential;
    cert.witness = failed->witness;
    return cert;
  }
  if (spec.full_power_series && !spec.group->is_trivial()) {
    cert.verdict = IpaVerdict::NoIPA;
    cert.rule = IpaRule::MaximallyValued;
    cert.citation = kMaximallyValuedCitation;
    // The nonexistence of left exponentiation is established for real coefficients.
    cert.caveats.push_back(std::string("nonexistence of left exponentiation is known for R((G)); "
                                       "applied here with residue field ") +
                           to_string(spec.field));
    return cert;
  }
  cert.verdict = IpaVerdict::Inconclusive;
  cert.caveats.push_back("necessary conditions pass; they are not sufficient for an IPA");
  return cert;
}

bool revalidate(const IpaCertificate& certificate) {
  if (!certificate.spec.group) return false;
  try {
    if (!(ipa_verdict(certificate.spec, certificate.target) == certificate)) return false;
  } catch (const MathError&) {
    return false;
  }
  if (certificate.witness) {
    return witness_holds(*certificate.spec.group, certificate.target, *certificate.witness);
  }
  return true;
}

namespace {

template <typename T, typename F>
std::string join(const std::vector<T>& items, F render) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += render(items[i]);
  }
  return out + "]";
}

std::string witness_data(const ExpWitness& w) {
  std::vector<std::string> parts;
  if (!w.points.empty()) {
    parts.push_back("points=" +
                    join(w.points, [](const ChainPoint& p) { return to_string(p); }));
  }
  if (!w.classes.empty()) {
    parts.push_back("classes=" +
                    join(w.classes, [](ArchClass c) { return std::string(to_string(c)); }));
  }
  if (w.rank) parts.push_back("rank=" + std::to_string(*w.rank));
  if (parts.empty()) return "-";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
  return out;
}

}  // namespace

std::string summary(const ExpGroupVerdict& verdict) {
  if (const auto* failed = std::get_if<NotExponential>(&verdict)) {
    return std::string("NotExponential(") + to_string(failed->witness.reason) + ")";
  }
  if (std::holds_alternative<PassesNecessaryConditions>(verdict)) return "PassesNecessaryConditions";
  return "Unknown(" + std::get<UnknownVerdict>(verdict).note + ")";
}

std::string to_record(const ExpGroupVerdict& verdict, const GroupPresentation& group,
                      ArchClass target) {
  std::string out;
  if (const auto* failed = std::get_if<NotExponential>(&verdict)) {
    out += "outcome: NotExponential\n";
    out += std::string("reason: ") + to_string(failed->witness.reason) + "\n";
    out += "invariant: " + failed->witness.invariant + "\n";
    out += "witness: " + witness_data(failed->witness) + "\n";
  } else if (const auto* passed = std::get_if<PassesNecessaryConditions>(&verdict)) {
    out += "outcome: PassesNecessaryConditions\n";
    for (const auto& check : passed->checks) {
      out += "check: " + check.name +
             (check.status == CheckStatus::Passed ? " passed" : " not decided") + "\n";
    }
  } else {
    out += "outcome: Unknown\n";
    out += "note: " + std::get<UnknownVerdict>(verdict).note + "\n";
  }
  out += "group: " + to_string(group) + "\n";
  out += std::string("target: ") + to_string(target) + "\n";
  return out;
}

std::string to_record(const IpaCertificate& c) {
  std::string out;
  out += std::string("verdict: ") + to_string(c.verdict) + "\n";
  out += std::string("rule: ") + (c.rule ? to_string(*c.rule) : "none") + "\n";
  if (c.witness) {
    out += std::string("witness: ") + to_string(c.witness->reason) + "\n";
    out += "invariant: " + c.witness->invariant + "\n";
    out += "witness_data: " + witness_data(*c.witness) + "\n";
  } else {
    out += "witness: " + (c.citation.empty() ? std::string("none") : c.citation) + "\n";
    out += "invariant: -\n";
    out += "witness_data: -\n";
  }
  out += std::string("field: ") + to_string(c.spec.field) + "\n";
  out += "group: " + to_string(*c.spec.group) + "\n";
  out += std::string("target: ") + to_string(c.target) + "\n";
  out += std::string("full_power_series: ") + (c.spec.full_power_series ? "true" : "false") + "\n";
  if (c.caveats.empty()) {
    out += "caveats: none\n";
  } else {
    for (const auto& caveat : c.caveats) out += "caveats: " + caveat + "\n";
  }
  return out;
}

std::vector<CatalogEntry> catalog_examples() {
  using Overrides = std::map<std::size_t, ArchClass>;
  const auto passes = [](const GroupRef& g, ArchClass c) { return check_exponential_group(*g, c); };
  const auto expect_fail = [](ExpFailure reason, std::string invariant,
                              std::vector<ChainPoint> points = {}, std::vector<ArchClass> classes = {},
                              std::optional<std::size_t> rank = {}) -> ExpGroupVerdict {
    return NotExponential{ExpWitness{reason, std::move(invariant), std::move(points),
                                     std::move(classes), rank}};
  };

  std::vector<CatalogEntry> entries;
  entries.push_back({make_group(ChainOrder::finite(0), ArchClass::Rat), ArchClass::Rat,
                     expect_fail(ExpFailure::TrivialGroup, "is_trivial"),
                     "the trivial group belongs to an Archimedean field"});
  entries.push_back({make_group(ChainOrder::finite(1), ArchClass::Rat), ArchClass::Rat,
                     expect_fail(ExpFailure::RankFinite, "rank_finite", {}, {}, 1),
                     "a finite rank is not a dense order without endpoints"});
  entries.push_back({make_group(ChainOrder::finite(3), ArchClass::Rat), ArchClass::Rat,
                     expect_fail(ExpFailure::RankFinite, "rank_finite", {}, {}, 3),
                     "divisible, uniform components, but finite rank"});
  entries.push_back({make_group(ChainOrder::finite(2), ArchClass::Rat, Overrides{{1, ArchClass::Int}}),
                     ArchClass::Rat,
                     expect_fail(ExpFailure::ComponentsNotAllIsomorphic,
                                 "components_mutually_isomorphic", {0, 1},
                                 {ArchClass::Rat, ArchClass::Int}),
                     "components Q and Z are not isomorphic"});
  entries.push_back(
      {make_group(ChainOrder::finite(2), ArchClass::Rat, Overrides{{1, ArchClass::RatRoot2}}),
       ArchClass::Rat,
       expect_fail(ExpFailure::ComponentsNotAllIsomorphic, "components_mutually_isomorphic", {0, 1},
                   {ArchClass::Rat, ArchClass::RatRoot2}),
       "divisible components that are not all isomorphic"});
  entries.push_back({make_group(ChainOrder::rationals(), ArchClass::Int), ArchClass::Rat,
                     expect_fail(ExpFailure::NotDivisible, "divisible", {0}, {ArchClass::Int}),
                     "Z components are not divisible"});
  entries.push_back({make_group(ChainOrder::integers(), ArchClass::Rat), ArchClass::Rat,
                     expect_fail(ExpFailure::RankNotDense, "rank_dense", {0, 1}),
                     "the rank Z is discrete"});
  entries.push_back(
      {make_group(ChainOrder::rationals(), ArchClass::Rat), ArchClass::RatRoot2,
       expect_fail(ExpFailure::ComponentNotIsomorphicToTarget, "components_isomorphic_to_target",
                   {0}, {ArchClass::Rat, ArchClass::RatRoot2}),
       "residue field additive group not isomorphic to the components"});
  entries.push_back({make_group(ChainOrder::rationals(), ArchClass::Rat), ArchClass::Rat,
                     passes(make_group(ChainOrder::rationals(), ArchClass::Rat), ArchClass::Rat),
                     "every decidable invariant holds"});
  entries.push_back(
      {make_group(ChainOrder::rationals(), ArchClass::RatRoot2), ArchClass::RatRoot2,
       passes(make_group(ChainOrder::rationals(), ArchClass::RatRoot2), ArchClass::RatRoot2),
       "every decidable invariant holds"});
  // The two passing entries compute their expectation; pin that they really pass.
  for (const auto& e : entries) {
    const ExpGroupVerdict actual = check_exponential_group(*e.group, e.target);
    if (!(actual == e.expected)) {
      throw std::logic_error("catalog entry " + to_string(*e.group) + " vs " + to_string(e.target) +
                             ": expected " + summary(e.expected) + ", got " + summary(actual));
    }
  }
  const auto passing = std::count_if(entries.begin(), entries.end(), [](const CatalogEntry& e) {
    return std::holds_alternative<PassesNecessaryConditions>(e.expected);
  });
  if (passing != 2) throw std::logic_error("catalog passing entries do not pass");
  return entries;
}

bool ExpAxiomsReport::passed() const {
  return std::all_of(facts.begin(), facts.end(), [](const FactResult& f) { return f.passed; });
}

bool exp_graph(std::uint64_t x, std::uint64_t y) {
  return y != 0 && (y & (y - 1)) == 0 && static_cast<std::uint64_t>(std::countr_zero(y)) == x;
}

std::uint64_t power_bracket(std::uint64_t x) {
  if (x == 0) throw MathError(ErrorKind::InvalidArgument, "0 lies above no power of 2");
  return static_cast<std::uint64_t>(std::bit_width(x)) - 1;
}

namespace {

void note(FactResult& fact, bool ok, const std::string& instance) {
  ++fact.checked;
  if (!ok && fact.passed) {
    fact.passed = false;
    fact.counterexample = instance;
  }
}

std::string pair(std::uint64_t a, std::uint64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

ExpAxiomsReport exp_axioms_check(std::uint64_t bound) {
  if (bound < 2) throw MathError(ErrorKind::InvalidArgument, "bound must be at least 2");
  ExpAxiomsReport report;
  report.bound = bound;
  auto& [f1, f2, f3, f4, f5] = report.facts;
  f1 = {1, "E(0,1); E(x,y) -> E(x+1,2y); E is functional and total"};
  f2 = {2, "x >= 1 and E(x,y) -> y >= x+1"};
  f3 = {3, "E(a,c) and E(b,d) -> E(a+b,cd)"};
  f4 = {4, "each 1 <= x lies in [z, 2z) for exactly one E(y,z)"};
  f5 = {5, "E(a,c), E(b,d), a < b -> c < d"};

  // The graph of E below the bound, found by scanning every candidate value.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> graph;
  std::vector<std::uint64_t> values_per_argument(65, 0);
  for (std::uint64_t y = 0; y <= bound; ++y) {
    for (std::uint64_t x = 0; x < 64; ++x) {
      if (exp_graph(x, y)) {
        graph.emplace_back(x, y);
        ++values_per_argument[x];
      }
    }
  }

  note(f1, exp_graph(0, 1), "E(0,1)");
  for (const auto& [x, y] : graph) {
    if (2 * y <= bound) note(f1, exp_graph(x + 1, 2 * y), "E" + pair(x, y) + " but not E" + pair(x + 1, 2 * y));
  }
  // Total and functional: arguments 0..max carry exactly one value each, none beyond.
  const std::uint64_t max_argument = graph.empty() ? 0 : graph.back().first;
  for (std::uint64_t x = 0; x <= max_argument; ++x) {
    note(f1, values_per_argument[x] == 1, "x=" + std::to_string(x) + " has " +
                                              std::to_string(values_per_argument[x]) + " values");
  }

  for (const auto& [x, y] : graph) {
    if (x >= 1) note(f2, y >= x + 1, "E" + pair(x, y));
  }

  for (const auto& [a, c] : graph) {
    for (const auto& [b, d] : graph) {
      if (c * d <= bound) note(f3, exp_graph(a + b, c * d), "E" + pair(a, c) + ", E" + pair(b, d));
      if (a < b) note(f5, c < d, "E" + pair(a, c) + ", E" + pair(b, d));
    }
  }

  for (std::uint64_t x = 1; x <= bound; ++x) {
    std::uint64_t matches = 0;
    for (const auto& [y, z] : graph) {
      if (z <= x && x < 2 * z) ++matches;
    }
    note(f4, matches == 1, "x=" + std::to_string(x) + " matches " + std::to_string(matches));
  }
  return report;
}

std::string to_string(const ExpAxiomsReport& report) {
  std::string out;
  for (const auto& fact : report.facts) {
    out += fact.passed ? "PASS" : "FAIL";
    out += " fact " + std::to_string(fact.fact) + ": " + fact.statement + " (" +
           std::to_string(fact.checked) + " checks)";
    if (!fact.passed) out += ": " + fact.counterexample;
    out += "\n";
  }
  return out;
}

}  // namespace hahn

#include "hahnfield/group.hpp"

#include <algorithm>

#include "hahnfield/error.hpp"

namespace hahn {

bool ChainOrder::contains(const ChainPoint& p) const {
  switch (kind_) {
    case ChainKind::Finite:
      return p.position.get_den() == 1 && sgn(p.position) >= 0 && p.position < mpq_class(size_);
    case ChainKind::Integers:
      return p.position.get_den() == 1;
    case ChainKind::Rationals:
      return true;
  }
  return false;
}

bool is_divisible(ArchClass c) { return c != ArchClass::Int; }

int rational_rank(ArchClass c) { return c == ArchClass::RatRoot2 ? 2 : 1; }

bool isomorphic(ArchClass x, ArchClass y) {
  return is_divisible(x) == is_divisible(y) && rational_rank(x) == rational_rank(y);
}

bool admits(ArchClass c, const Scalar& value) {
  switch (c) {
    case ArchClass::Int:
      return value.is_integer();
    case ArchClass::Rat:
      return value.is_rational();
    case ArchClass::RatRoot2:
      return true;
  }
  return false;
}

GroupPresentation::GroupPresentation(ChainOrder chain, ArchClass default_component,
                                     std::map<std::size_t, ArchClass> overrides)
    : chain_(chain), default_(default_component) {
  if (!overrides.empty() && !chain_.is_finite()) {
    throw MathError(ErrorKind::InvalidPresentation, "overrides require a Finite chain");
  }
  for (const auto& [index, component] : overrides) {
    if (index >= chain_.size()) {
      throw MathError(ErrorKind::InvalidPresentation,
                      "override point " + std::to_string(index) + " outside " + to_string(chain_));
    }
    if (component != default_) overrides_.emplace(index, component);
  }
}

ArchClass GroupPresentation::component(const ChainPoint& p) const {
  if (!chain_.contains(p)) {
    throw MathError(ErrorKind::InvalidChainPoint, to_string(p) + " not in " + to_string(chain_));
  }
  if (!overrides_.empty()) {
    const auto it = overrides_.find(p.position.get_num().get_ui());
    if (it != overrides_.end()) return it->second;
  }
  return default_;
}

GroupRef make_group(ChainOrder chain, ArchClass default_component,
                    std::map<std::size_t, ArchClass> overrides) {
  return std::make_shared<const GroupPresentation>(chain, default_component, std::move(overrides));
}

bool same_presentation(const GroupRef& x, const GroupRef& y) {
  return x == y || (x && y && *x == *y);
}

namespace {

void require_same(const GroupRef& x, const GroupRef& y) {
  if (!same_presentation(x, y)) {
    throw MathError(ErrorKind::MixedPresentations, to_string(*x) + " vs " + to_string(*y));
  }
}

}  // namespace

GroupElement::GroupElement(GroupRef group) : group_(std::move(group)) {}

GroupElement::GroupElement(GroupRef group, std::vector<Term> terms) : group_(std::move(group)) {
  for (const auto& [point, value] : terms) {
    const ArchClass c = group_->component(point);
    if (!admits(c, value)) {
      throw MathError(ErrorKind::ComponentOutOfClass,
                      to_string(value) + " at point " + to_string(point) + " is not in " + to_string(c));
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& x, const Term& y) { return x.first < y.first; });
  for (auto& term : terms) {
    if (!terms_.empty() && terms_.back().first == term.first) {
      terms_.back().second += term.second;
      if (terms_.back().second.is_zero()) terms_.pop_back();
    } else if (!term.second.is_zero()) {
      terms_.push_back(std::move(term));
    }
  }
}

GroupElement GroupElement::monomial(GroupRef group, ChainPoint point, Scalar value) {
  return GroupElement(std::move(group), {{std::move(point), std::move(value)}});
}

GroupElement GroupElement::operator-() const {
  GroupElement out(group_);
  out.terms_.reserve(terms_.size());
  for (const auto& [point, value] : terms_) out.terms_.emplace_back(point, -value);
  return out;
}

namespace {

// Merge two canonical supports with `combine` applied where both are present.
template <typename Combine, typename Lone>
std::vector<GroupElement::Term> merge(const std::vector<GroupElement::Term>& x,
                                      const std::vector<GroupElement::Term>& y, Combine combine,
                                      Lone lone_right) {
  std::vector<GroupElement::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, lone_right(j->second));
      ++j;
    } else {
      Scalar v = combine(i->second, j->second);
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  require_same(group_, other.group_);
  terms_ = merge(
      terms_, other.terms_, [](const Scalar& a, const Scalar& b) { return a + b; },
      [](const Scalar& b) { return b; });
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& other) {
  require_same(group_, other.group_);
  terms_ = merge(
      terms_, other.terms_, [](const Scalar& a, const Scalar& b) { return a - b; },
      [](const Scalar& b) { return -b; });
  return *this;
}

bool operator==(const GroupElement& x, const GroupElement& y) {
  return same_presentation(x.group_, y.group_) && x.terms_ == y.terms_;
}

std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
  require_same(x.group_, y.group_);
  auto i = x.terms_.begin();
  auto j = y.terms_.begin();
  // The first point where the two functions differ decides the order.
  while (i != x.terms_.end() || j != y.terms_.end()) {
    if (j == y.terms_.end() || (i != x.terms_.end() && i->first < j->first)) {
      return i->second.sign() < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i == x.terms_.end() || j->first < i->first) {
      return j->second.sign() > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

GroupElement scale(const mpq_class& q, const GroupElement& x) {
  std::vector<GroupElement::Term> terms;
  terms.reserve(x.terms().size());
  const Scalar factor(q);
  for (const auto& [point, value] : x.terms()) {
    Scalar scaled = value * factor;
    if (!admits(x.group()->component(point), scaled)) {
      throw MathError(ErrorKind::NotDivisible, to_string(value) + " at point " + to_string(point) +
                                                   " scaled by " + to_string(q));
    }
    terms.emplace_back(point, std::move(scaled));
  }
  return GroupElement(x.group(), std::move(terms));
}

OrderInvariants order_invariants(const GroupPresentation& group) {
  OrderInvariants inv;
  const ChainOrder& chain = group.chain();
  inv.is_trivial = group.is_trivial();

  bool has_int = false;
  switch (chain.kind()) {
    case ChainKind::Finite:
      inv.rank_finite = chain.size();
      inv.rank_dense = false;
      inv.rank_has_min = inv.rank_has_max = chain.size() > 0;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        has_int = has_int || group.component(ChainPoint(static_cast<long>(i))) == ArchClass::Int;
      }
      break;
    case ChainKind::Integers:
    case ChainKind::Rationals:
      inv.rank_dense = chain.kind() == ChainKind::Rationals;
      has_int = group.default_component() == ArchClass::Int;
      break;
  }
  inv.divisible = !has_int;

  if (!inv.is_trivial) {
    const bool least_positive =
        inv.rank_has_max &&
        group.component(ChainPoint(static_cast<long>(chain.size() - 1))) == ArchClass::Int;
    inv.negcone_dense = !least_positive;
    // G^{<0} never has a least element; its greatest element is minus the least positive one.
    inv.negcone_has_endpoints = least_positive;
  }
  return inv;
}

const char* to_string(ArchClass c) {
  switch (c) {
    case ArchClass::Int:
      return "Int";
    case ArchClass::Rat:
      return "Rat";
    case ArchClass::RatRoot2:
      return "RatRoot2";
  }
  return "?";
}

std::string to_string(const ChainOrder& chain) {
  switch (chain.kind()) {
    case ChainKind::Finite:
      return "Finite(" + std::to_string(chain.size()) + ")";
    case ChainKind::Integers:
      return "Integers";
    case ChainKind::Rationals:
      return "Rationals";
  }
  return "?";
}

std::string to_string(const ChainPoint& p) { return to_string(p.position); }

std::string to_string(const GroupPresentation& group) {
  std::string out = "HahnSum(" + to_string(group.chain()) + "; " + to_string(group.default_component());
  for (const auto& [index, component] : group.overrides()) {
    out += ", " + std::to_string(index) + ":" + to_string(component);
  }
  return out + ")";
}

namespace {

std::string pair_list(const GroupElement& g) {
  std::string out;
  for (const auto& [point, value] : g.terms()) {
    if (!out.empty()) out += ", ";
    out += "(" + to_string(point) + ", " + to_string(value) + ")";
  }
  return out;
}

}  // namespace

std::string to_string(const GroupElement& g) { return "{" + pair_list(g) + "}"; }

std::string to_exponent_string(const GroupElement& g) {
  if (g.is_zero()) return "0";
  if (g.terms().size() == 1 && sgn(g.terms().front().first.position) == 0) {
    return to_string(g.terms().front().second);
  }
  return pair_list(g);
}

}  // namespace hahn

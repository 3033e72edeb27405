#pragma once

// Presentable ordered abelian groups: Hahn sums over a catalog chain whose
// Archimedean components come from {Z, Q, Q + Q sqrt 2}.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hahnfield/scalar.hpp"

namespace hahn {

/// A point of the rank. Finite and Integers chains use integral positions,
/// the Rationals chain uses arbitrary rationals.
struct ChainPoint {
  mpq_class position{0};

  ChainPoint() = default;
  ChainPoint(long index) : position(index) {}  // NOLINT(google-explicit-constructor)
  explicit ChainPoint(mpq_class q) : position(std::move(q)) { position.canonicalize(); }

  friend bool operator==(const ChainPoint& x, const ChainPoint& y) {
    return x.position == y.position;
  }
  friend std::strong_ordering operator<=>(const ChainPoint& x, const ChainPoint& y) {
    const int c = cmp(x.position, y.position);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

enum class ChainKind { Finite, Integers, Rationals };

class ChainOrder {
 public:
  static ChainOrder finite(std::size_t n) { return ChainOrder(ChainKind::Finite, n); }
  static ChainOrder integers() { return ChainOrder(ChainKind::Integers, 0); }
  static ChainOrder rationals() { return ChainOrder(ChainKind::Rationals, 0); }

  ChainKind kind() const { return kind_; }
  /// Number of points; meaningful for Finite chains only.
  std::size_t size() const { return size_; }
  bool is_finite() const { return kind_ == ChainKind::Finite; }
  bool contains(const ChainPoint& p) const;

  friend bool operator==(const ChainOrder&, const ChainOrder&) = default;

 private:
  ChainOrder(ChainKind kind, std::size_t size) : kind_(kind), size_(size) {}

  ChainKind kind_;
  std::size_t size_;
};

enum class ArchClass { Int, Rat, RatRoot2 };

bool is_divisible(ArchClass c);
/// Dimension of c (x) Q over Q.
int rational_rank(ArchClass c);
/// Archimedean groups are classified by divisibility and rational rank within the catalog.
bool isomorphic(ArchClass x, ArchClass y);
/// Whether `value` is an element of the component group.
bool admits(ArchClass c, const Scalar& value);

class GroupPresentation {
 public:
  /// Throws InvalidPresentation if overrides are given for a non-finite chain or
  /// name points outside it. Overrides equal to the default are dropped.
  GroupPresentation(ChainOrder chain, ArchClass default_component,
                    std::map<std::size_t, ArchClass> overrides = {});

  const ChainOrder& chain() const { return chain_; }
  ArchClass default_component() const { return default_; }
  const std::map<std::size_t, ArchClass>& overrides() const { return overrides_; }

  /// B_p, the Archimedean component sitting at chain point p.
  ArchClass component(const ChainPoint& p) const;
  bool is_trivial() const { return chain_.is_finite() && chain_.size() == 0; }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  ChainOrder chain_;
  ArchClass default_;
  std::map<std::size_t, ArchClass> overrides_;
};

using GroupRef = std::shared_ptr<const GroupPresentation>;

GroupRef make_group(ChainOrder chain, ArchClass default_component,
                    std::map<std::size_t, ArchClass> overrides = {});

bool same_presentation(const GroupRef& x, const GroupRef& y);

/// Finitely supported element of a Hahn sum. Terms are sorted strictly ascending by
/// chain point and carry no zero values, so structural equality is group equality.
class GroupElement {
 public:
  using Term = std::pair<ChainPoint, Scalar>;

  explicit GroupElement(GroupRef group);
  /// Sorts and merges `terms`, dropping zeros. Throws InvalidChainPoint or
  /// ComponentOutOfClass when a term does not fit the presentation.
  GroupElement(GroupRef group, std::vector<Term> terms);

  static GroupElement monomial(GroupRef group, ChainPoint point, Scalar value);

  const GroupRef& group() const { return group_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Sign of the value at the least support point.
  int sign() const { return terms_.empty() ? 0 : terms_.front().second.sign(); }

  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& other);
  GroupElement& operator-=(const GroupElement& other);
  friend GroupElement operator+(GroupElement x, const GroupElement& y) { return x += y; }
  friend GroupElement operator-(GroupElement x, const GroupElement& y) { return x -= y; }

  friend bool operator==(const GroupElement& x, const GroupElement& y);
  /// Lexicographic order. Throws MixedPresentations.
  friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y);

 private:
  GroupRef group_;
  std::vector<Term> terms_;
};

/// q * x componentwise. Throws NotDivisible if an Int component leaves Z.
GroupElement scale(const mpq_class& q, const GroupElement& x);

struct OrderInvariants {
  bool is_trivial = false;
  std::optional<std::size_t> rank_finite;
  /// Dense means at least two points and a third strictly between any two.
  bool rank_dense = false;
  bool rank_has_min = false;
  bool rank_has_max = false;
  bool negcone_dense = false;
  bool negcone_has_endpoints = false;
  bool divisible = false;

  friend bool operator==(const OrderInvariants&, const OrderInvariants&) = default;
};

/// Decidable order invariants of the rank and of the negative cone G^{<0}.
/// G has a least positive element iff the rank has a maximum carrying Z; that is
/// exactly when G^{<0} has a greatest element and fails to be dense.
OrderInvariants order_invariants(const GroupPresentation& group);

const char* to_string(ArchClass c);
std::string to_string(const ChainOrder& chain);
std::string to_string(const ChainPoint& p);
/// "HahnSum(Finite(2); Rat, 1:Int)".
std::string to_string(const GroupPresentation& group);
/// "{(0, 1/2), (1, 3)}".
std::string to_string(const GroupElement& g);
/// Exponent text used inside t^{...}: a bare value when the support is {0},
/// otherwise the comma-separated pair list.
std::string to_exponent_string(const GroupElement& g);

}  // namespace hahn

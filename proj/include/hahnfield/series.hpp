#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hahnfield/group.hpp"
#include "hahnfield/scalar.hpp"

namespace hahn {

/// The field k and value group G a series lives over.
struct Carrier {
  FieldClass field = FieldClass::Rat;
  GroupRef group;

  friend bool operator==(const Carrier& x, const Carrier& y) {
    return x.field == y.field && same_presentation(x.group, y.group);
  }
};

struct Term {
  GroupElement exponent;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finitely supported element sum c_g t^g of k((G)), terms strictly ascending by
/// exponent with no zero coefficients. Infinite-support elements only appear as
/// truncations produced by `inverse_truncated` and `root_truncated`.
class Series {
 public:
  explicit Series(Carrier carrier);
  /// Canonicalizes `terms`. Throws MixedPresentations for foreign exponents and
  /// CoefficientOutsideField for coefficients outside the carrier field.
  Series(Carrier carrier, std::vector<Term> terms);

  static Series constant(Carrier carrier, Scalar c);
  static Series monomial(Carrier carrier, GroupElement exponent, Scalar c);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int sign() const { return terms_.empty() ? 0 : terms_.front().coeff.sign(); }
  /// Coefficient of t^g (zero when g is outside the support).
  Scalar coefficient(const GroupElement& g) const;

  Series operator-() const;
  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);
  friend Series operator+(Series x, const Series& y) { return x += y; }
  friend Series operator-(Series x, const Series& y) { return x -= y; }
  friend Series operator*(const Series& x, const Series& y);

  /// Structural equality; false across different carriers.
  friend bool operator==(const Series& x, const Series& y);
  /// Lexicographic order. Throws MixedCarriers.
  friend std::strong_ordering operator<=>(const Series& x, const Series& y);

 private:
  Carrier carrier_;
  std::vector<Term> terms_;
};

/// Natural valuation: the least support exponent, nullopt standing for infinity at 0.
std::optional<GroupElement> valuation(const Series& x);

/// Leading exponent and coefficient. Throws LeadingOfZero.
const Term& leading(const Series& x);

Series power(const Series& x, unsigned long exponent);

/// x * c t^g for a monomial factor; always exact.
Series times_monomial(const Series& x, const GroupElement& g, const Scalar& c);

/// x-hat with v(x * x-hat - 1) > bound, from the geometric expansion of
/// c^-1 t^-v(x) (1 + eps)^-1. Exact for monomials. Throws DivisionByZero for 0 and
/// UnreachableBound when no finite multiple of v(eps) exceeds the bound.
Series inverse_truncated(const Series& x, const GroupElement& bound);

/// r > 0 with v(r^n - x) > bound + (n - 1) v(x) / n, that is v(r - x^(1/n)) > bound,
/// from the binomial series of (1 + eps)^(1/n). Throws NonPositive,
/// NotDivisibleExponent, NoExactRoot or UnreachableBound.
Series root_truncated(const Series& x, unsigned long n, const GroupElement& bound);

/// Least m >= 1 with m * step > bound, for step > 0; nullopt when none exists
/// (step is infinitesimal relative to bound).
std::optional<mpz_class> archimedean_multiplier(const GroupElement& step, const GroupElement& bound);

/// "2 - 3*t^{-1/2} + 1/2*t^{(0, 1), (1, 2)}", "0" for zero.
std::string to_string(const Series& x);

}  // namespace hahn

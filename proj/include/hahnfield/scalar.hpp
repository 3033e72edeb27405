#pragma once

#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace hahn {

/// Coefficient field: the rationals, or Q(sqrt 2) embedded in R with sqrt 2 > 0.
enum class FieldClass { Rat, Root2 };

const char* to_string(FieldClass field);

/// Exact element a + b*sqrt(2) of Q(sqrt 2). Rationals are the elements with b = 0.
/// Both parts are kept canonical (lowest terms, positive denominator).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class a, mpq_class b = 0);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& root2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_integer() const { return is_rational() && a_.get_den() == 1; }
  bool belongs_to(FieldClass field) const { return field == FieldClass::Root2 || is_rational(); }

  /// Exact sign of a + b*sqrt(2) in R.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

/// (a - b sqrt 2) / (a^2 - 2 b^2). Throws DivisionByZero on zero.
Scalar inverse(const Scalar& x);

/// Algebraic conjugate a - b*sqrt(2).
Scalar conjugate(const Scalar& x);

/// Field norm a^2 - 2 b^2.
mpq_class norm(const Scalar& x);

Scalar abs(const Scalar& x);

Scalar power(const Scalar& x, unsigned long exponent);

/// The unique integer z with z <= x < z + 1.
///
/// Irrational inputs are bracketed between consecutive convergents of sqrt 2
/// (1/1, 3/2, 7/5, 17/12, ...) until both ends of the bracket have the same
/// floor. Rational inputs (including exact integers) never enter that loop, so it
/// always terminates.
mpz_class floor(const Scalar& x);

/// y > 0 with y^n == x inside `field`, or nullopt when no such y exists there.
/// Throws NonPositiveRadicand for x <= 0 and CoefficientOutsideField when x is
/// not an element of `field`.
std::optional<Scalar> nth_root(const Scalar& x, unsigned long n, FieldClass field);

/// "3", "-1/2", "1+1*r2", "-1/3-2*r2", "1/2*r2".
std::string to_string(const Scalar& x);

std::string to_string(const mpq_class& q);

}  // namespace hahn

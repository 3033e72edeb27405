#include "hahnfield/series.hpp"

#include <algorithm>
#include <map>

#include "hahnfield/error.hpp"

namespace hahn {

namespace {

void require_same(const Carrier& x, const Carrier& y) {
  if (!(x == y)) {
    throw MathError(ErrorKind::MixedCarriers, std::string(to_string(x.field)) + " " +
                                                  to_string(*x.group) + " vs " + to_string(y.field) +
                                                  " " + to_string(*y.group));
  }
}

}  // namespace

Series::Series(Carrier carrier) : carrier_(std::move(carrier)) {}

Series::Series(Carrier carrier, std::vector<Term> terms) : carrier_(std::move(carrier)) {
  for (const auto& term : terms) {
    if (!same_presentation(term.exponent.group(), carrier_.group)) {
      throw MathError(ErrorKind::MixedPresentations, "exponent " + to_string(term.exponent) +
                                                         " outside " + to_string(*carrier_.group));
    }
    if (!term.coeff.belongs_to(carrier_.field)) {
      throw MathError(ErrorKind::CoefficientOutsideField,
                      to_string(term.coeff) + " is not in " + to_string(carrier_.field));
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  for (auto& term : terms) {
    if (!terms_.empty() && terms_.back().exponent == term.exponent) {
      terms_.back().coeff += term.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!term.coeff.is_zero()) {
      terms_.push_back(std::move(term));
    }
  }
}

Series Series::constant(Carrier carrier, Scalar c) {
  GroupElement zero(carrier.group);
  return Series(std::move(carrier), {{std::move(zero), std::move(c)}});
}

Series Series::monomial(Carrier carrier, GroupElement exponent, Scalar c) {
  return Series(std::move(carrier), {{std::move(exponent), std::move(c)}});
}

Scalar Series::coefficient(const GroupElement& g) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                                   [](const Term& t, const GroupElement& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == g) return it->coeff;
  return Scalar();
}

Series Series::operator-() const {
  Series out(carrier_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.exponent, -t.coeff});
  return out;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& x, const std::vector<Term>& y, int y_sign) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->exponent < j->exponent)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->exponent < i->exponent) {
      out.push_back({j->exponent, y_sign > 0 ? j->coeff : -j->coeff});
      ++j;
    } else {
      Scalar c = y_sign > 0 ? i->coeff + j->coeff : i->coeff - j->coeff;
      if (!c.is_zero()) out.push_back({i->exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Series& Series::operator+=(const Series& other) {
  require_same(carrier_, other.carrier_);
  terms_ = merge_terms(terms_, other.terms_, 1);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same(carrier_, other.carrier_);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Series& Series::operator*=(const Series& other) { return *this = *this * other; }

Series operator*(const Series& x, const Series& y) {
  require_same(x.carrier_, y.carrier_);
  // Convolution: aggregate c_g d_h at g + h in an ordered map.
  std::map<GroupElement, Scalar> sums;
  for (const auto& a : x.terms_) {
    for (const auto& b : y.terms_) {
      auto [it, inserted] = sums.try_emplace(a.exponent + b.exponent, a.coeff * b.coeff);
      if (!inserted) it->second += a.coeff * b.coeff;
    }
  }
  Series out(x.carrier_);
  out.terms_.reserve(sums.size());
  for (auto& [g, c] : sums) {
    if (!c.is_zero()) out.terms_.push_back({g, std::move(c)});
  }
  return out;
}

bool operator==(const Series& x, const Series& y) {
  return x.carrier_ == y.carrier_ && x.terms_ == y.terms_;
}

std::strong_ordering operator<=>(const Series& x, const Series& y) {
  require_same(x.carrier_, y.carrier_);
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<GroupElement> valuation(const Series& x) {
  if (x.is_zero()) return std::nullopt;
  return x.terms().front().exponent;
}

const Term& leading(const Series& x) {
  if (x.is_zero()) throw MathError(ErrorKind::LeadingOfZero, "the zero series has no leading term");
  return x.terms().front();
}

Series power(const Series& x, unsigned long exponent) {
  Series result = Series::constant(x.carrier(), Scalar(1));
  Series base = x;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Series times_monomial(const Series& x, const GroupElement& g, const Scalar& c) {
  std::vector<Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& t : x.terms()) terms.push_back({t.exponent + g, t.coeff * c});
  return Series(x.carrier(), std::move(terms));
}

std::optional<mpz_class> archimedean_multiplier(const GroupElement& step, const GroupElement& bound) {
  if (step.sign() <= 0) {
    throw MathError(ErrorKind::InvalidArgument, "step must be positive: " + to_string(step));
  }
  if (bound.sign() < 0 || bound < step) return mpz_class(1);
  const auto& [step_point, step_value] = step.terms().front();
  const auto& [bound_point, bound_value] = bound.terms().front();
  if (step_point > bound_point) return std::nullopt;
  if (step_point < bound_point) return mpz_class(1);
  // Same Archimedean class: m * step > bound once m * s > b at the shared leading
  // point, or m * s == b and the tail of m * step beats the tail of bound.
  mpz_class m = floor(bound_value / step_value);
  if (m < 1) m = 1;
  while (!(scale(mpq_class(m), step) > bound)) ++m;
  return m;
}

namespace {

// Splits x = c t^v (1 + eps) and returns eps with v(eps) > 0 (or eps = 0).
Series unit_tail(const Series& x) {
  const Term& lead = leading(x);
  Series unit = times_monomial(x, -lead.exponent, inverse(lead.coeff));
  return unit - Series::constant(x.carrier(), Scalar(1));
}

unsigned long required_terms(const Series& eps, const GroupElement& needed) {
  const auto count = archimedean_multiplier(*valuation(eps), needed);
  if (!count) {
    throw MathError(ErrorKind::UnreachableBound,
                    "no multiple of " + to_string(*valuation(eps)) + " exceeds " + to_string(needed));
  }
  if (!count->fits_ulong_p()) throw MathError(ErrorKind::UnreachableBound, "expansion too long");
  return count->get_ui();
}

}  // namespace

Series inverse_truncated(const Series& x, const GroupElement& bound) {
  if (x.is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of 0");
  const Term lead = leading(x);
  const Series eps = unit_tail(x);
  Series sum = Series::constant(x.carrier(), Scalar(1));
  if (!eps.is_zero()) {
    // (1 + eps) * sum_{j<J} (-eps)^j = 1 - (-eps)^J, so J terms give residual J v(eps).
    const unsigned long count = required_terms(eps, bound);
    const Series step = -eps;
    Series term = sum;
    for (unsigned long j = 1; j < count; ++j) {
      term *= step;
      sum += term;
    }
  }
  return times_monomial(sum, -lead.exponent, inverse(lead.coeff));
}

Series root_truncated(const Series& x, unsigned long n, const GroupElement& bound) {
  if (n == 0) throw MathError(ErrorKind::InvalidArgument, "root index must be positive");
  if (x.sign() <= 0) throw MathError(ErrorKind::NonPositive, to_string(x));
  if (n == 1) return x;
  const Term lead = leading(x);

  GroupElement root_exponent(x.carrier().group);
  try {
    root_exponent = scale(mpq_class(1, n), lead.exponent);
  } catch (const MathError& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    throw MathError(ErrorKind::NotDivisibleExponent,
                    to_string(lead.exponent) + " is not divisible by " + std::to_string(n));
  }
  const auto root_coeff = nth_root(lead.coeff, n, x.carrier().field);
  if (!root_coeff) {
    throw MathError(ErrorKind::NoExactRoot, "no exact root of index " + std::to_string(n) + " for " +
                                                to_string(lead.coeff) + " in " +
                                                to_string(x.carrier().field));
  }

  const Series eps = unit_tail(x);
  Series sum = Series::constant(x.carrier(), Scalar(1));
  if (!eps.is_zero()) {
    // Omitting binom(1/n, j) eps^j for j >= J moves the root by t^(v/n) eps^J.
    const unsigned long count = required_terms(eps, bound - root_exponent);
    const mpq_class exponent(1, n);
    mpq_class binomial = 1;
    Series eps_power = sum;
    for (unsigned long j = 1; j < count; ++j) {
      binomial *= (exponent - (j - 1)) / mpq_class(j);
      eps_power *= eps;
      sum += times_monomial(eps_power, GroupElement(x.carrier().group), Scalar(binomial));
    }
  }
  return times_monomial(sum, root_exponent, *root_coeff);
}

std::string to_string(const Series& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, coeff] : x.terms()) {
    const bool constant_term = exponent.is_zero();
    Scalar magnitude = coeff;
    const bool single_part = coeff.is_rational() || sgn(coeff.rational_part()) == 0;
    if (single_part) {
      if (coeff.sign() < 0) {
        out += first ? "-" : " - ";
        magnitude = -coeff;
      } else if (!first) {
        out += " + ";
      }
    } else if (!first) {
      out += " + ";
    }
    first = false;

    const std::string monomial = constant_term ? "" : "t^{" + to_exponent_string(exponent) + "}";
    std::string c = to_string(magnitude);
    if (!single_part) c = "(" + c + ")";
    if (constant_term) {
      out += c;
    } else if (magnitude == Scalar(1)) {
      out += monomial;
    } else {
      out += c + "*" + monomial;
    }
  }
  return out;
}

}  // namespace hahn

#include "hahnfield/valuation.hpp"

#include "hahnfield/error.hpp"

namespace hahn {

const char* to_string(ValuationClass c) {
  switch (c) {
    case ValuationClass::Zero:
      return "Zero";
    case ValuationClass::Infinitesimal:
      return "Infinitesimal";
    case ValuationClass::FiniteUnit:
      return "FiniteUnit";
    case ValuationClass::Infinite:
      return "Infinite";
  }
  return "?";
}

ValuationClass classify(const Series& x) {
  if (x.is_zero()) return ValuationClass::Zero;
  const int s = x.terms().front().exponent.sign();
  if (s > 0) return ValuationClass::Infinitesimal;
  if (s < 0) return ValuationClass::Infinite;
  return ValuationClass::FiniteUnit;
}

Scalar residue(const Series& x) {
  if (classify(x) == ValuationClass::Infinite) {
    throw MathError(ErrorKind::NotFinite, to_string(x) + " is not in the valuation ring");
  }
  return x.coefficient(GroupElement(x.carrier().group));
}

Series AdditiveDecomposition::recompose() const {
  return infinite_part + Series::constant(infinite_part.carrier(), constant_part) + infinitesimal_part;
}

AdditiveDecomposition decompose_additive(const Series& x) {
  std::vector<Term> negative;
  std::vector<Term> positive;
  Scalar constant;
  for (const auto& term : x.terms()) {
    const int s = term.exponent.sign();
    if (s < 0) {
      negative.push_back(term);
    } else if (s > 0) {
      positive.push_back(term);
    } else {
      constant = term.coeff;
    }
  }
  return {Series(x.carrier(), std::move(negative)), std::move(constant),
          Series(x.carrier(), std::move(positive))};
}

Series MultiplicativeDecomposition::recompose() const {
  return times_monomial(one_unit, exponent, unit_coeff);
}

MultiplicativeDecomposition decompose_multiplicative(const Series& x) {
  if (x.sign() <= 0) throw MathError(ErrorKind::NonPositive, to_string(x));
  const Term& lead = leading(x);
  return {lead.exponent, lead.coeff, times_monomial(x, -lead.exponent, inverse(lead.coeff))};
}

}  // namespace hahn

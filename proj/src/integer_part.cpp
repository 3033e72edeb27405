#include "hahnfield/integer_part.hpp"

#include <algorithm>
#include <functional>

#include "hahnfield/error.hpp"
#include "hahnfield/sampling.hpp"
#include "hahnfield/valuation.hpp"

namespace hahn {

bool is_ip_member(const Series& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const Term& t) {
    const int s = t.exponent.sign();
    return s < 0 || (s == 0 && t.coeff.is_integer());
  });
}

IntegerPartElement::IntegerPartElement(Series value) : value_(std::move(value)) {
  if (!is_ip_member(value_)) {
    throw MathError(ErrorKind::NotIntegerPart, to_string(value_) + " is not in the integer part");
  }
}

IntegerPartElement floor(const Series& x) {
  AdditiveDecomposition parts = decompose_additive(x);
  mpz_class whole = floor(parts.constant_part);
  // c + eps with c integral and eps < 0 lies just below c.
  if (Scalar(mpq_class(whole)) == parts.constant_part && parts.infinitesimal_part.sign() < 0) {
    whole -= 1;
  }
  return IntegerPartElement(parts.infinite_part +
                            Series::constant(x.carrier(), Scalar(mpq_class(whole))));
}

bool IpCheckReport::passed() const {
  return std::all_of(families.begin(), families.end(),
                     [](const IpCheckFamily& f) { return f.passed; });
}

namespace {

void record(IpCheckFamily& family, bool ok, const std::function<std::string()>& describe) {
  ++family.checked;
  if (!ok && family.passed) {
    family.passed = false;
    family.counterexample = describe();
  }
}

Series crafted_floor_case(Sampler& sampler, const Carrier& carrier) {
  // Integer constant plus an infinitesimal tail of random sign, on top of an
  // infinite part: the case that needs the -1 correction.
  Series x = sampler.integer_part_series(carrier);
  if (carrier.group->is_trivial()) return x;
  const GroupElement small = sampler.signed_element(carrier.group, 1);
  return x + Series::monomial(carrier, small, sampler.nonzero_scalar(carrier.field));
}

}  // namespace

IpCheckReport ip_closure_check(const Carrier& carrier, std::size_t samples, std::uint64_t seed) {
  Sampler sampler(seed);
  IpCheckFamily closure{"closure under +, -, *"};
  IpCheckFamily floor_contract{"floor contract z <= x < z + 1"};
  IpCheckFamily finite_standard{"finite members are standard integers"};
  IpCheckFamily discrete{"no member strictly between 0 and 1 in absolute value"};

  const Series one = Series::constant(carrier, Scalar(1));
  for (std::size_t i = 0; i < samples; ++i) {
    const Series a = sampler.integer_part_series(carrier);
    const Series b = sampler.integer_part_series(carrier);
    for (const Series& r : {a + b, a - b, a * b}) {
      record(closure, is_ip_member(r), [&] { return to_string(a) + " ; " + to_string(b); });
    }

    const Series x = (i % 4 == 0) ? crafted_floor_case(sampler, carrier) : sampler.series(carrier);
    const Series z = floor(x).series();
    record(floor_contract, z <= x && x < z + one, [&] { return to_string(x) + " -> " + to_string(z); });

    if (classify(a) != ValuationClass::Infinite) {
      const Scalar c = a.coefficient(GroupElement(carrier.group));
      record(finite_standard, c.is_integer() && a == Series::constant(carrier, c),
             [&] { return to_string(a); });
    }

    if (!a.is_zero()) {
      const Series magnitude = a.sign() < 0 ? -a : a;
      record(discrete, magnitude >= one, [&] { return to_string(a); });
    }
  }
  return {{closure, floor_contract, finite_standard, discrete}};
}

std::string to_string(const IpCheckReport& report) {
  std::string out;
  for (const auto& family : report.families) {
    out += family.passed ? "PASS " : "FAIL ";
    out += family.name + " (" + std::to_string(family.checked) + " checks)";
    if (!family.passed) out += ": " + family.counterexample;
    out += "\n";
  }
  return out;
}

}  // namespace hahn

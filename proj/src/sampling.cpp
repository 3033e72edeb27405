#include "hahnfield/sampling.hpp"

#include <vector>

namespace hahn {

long Sampler::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

mpq_class Sampler::rational(long max_abs, long max_den) {
  const long den = integer(1, max_den);
  mpq_class q(integer(-max_abs * den, max_abs * den), den);
  q.canonicalize();
  return q;
}

Scalar Sampler::scalar(FieldClass field) {
  if (field == FieldClass::Root2 && coin()) return Scalar(rational(3, 3), rational(2, 2));
  return Scalar(rational(4, 3));
}

Scalar Sampler::nonzero_scalar(FieldClass field) {
  for (;;) {
    Scalar s = scalar(field);
    if (!s.is_zero()) return s;
  }
}

ChainPoint Sampler::chain_point(const ChainOrder& chain) {
  switch (chain.kind()) {
    case ChainKind::Finite:
      return ChainPoint(integer(0, static_cast<long>(chain.size()) - 1));
    case ChainKind::Integers:
      return ChainPoint(integer(-2, 2));
    case ChainKind::Rationals:
      return ChainPoint(rational(1, 2));
  }
  return ChainPoint();
}

Scalar Sampler::component_value(ArchClass c) {
  for (;;) {
    Scalar v;
    switch (c) {
      case ArchClass::Int:
        v = Scalar(integer(-3, 3));
        break;
      case ArchClass::Rat:
        v = Scalar(rational(2, 3));
        break;
      case ArchClass::RatRoot2:
        v = coin() ? Scalar(rational(2, 2), rational(1, 2)) : Scalar(rational(2, 3));
        break;
    }
    if (!v.is_zero()) return v;
  }
}

GroupElement Sampler::element(const GroupRef& group, std::size_t max_terms) {
  if (group->is_trivial()) return GroupElement(group);
  std::vector<GroupElement::Term> terms;
  const long count = integer(0, static_cast<long>(max_terms));
  for (long i = 0; i < count; ++i) {
    ChainPoint p = chain_point(group->chain());
    Scalar v = component_value(group->component(p));
    terms.emplace_back(std::move(p), std::move(v));
  }
  return GroupElement(group, std::move(terms));
}

GroupElement Sampler::signed_element(const GroupRef& group, int sign, std::size_t max_terms) {
  if (group->is_trivial()) return GroupElement(group);
  for (;;) {
    GroupElement g = element(group, max_terms);
    if (g.sign() == sign) return g;
    if (!g.is_zero()) return -g;
  }
}

Series Sampler::series(const Carrier& carrier, std::size_t max_terms) {
  std::vector<Term> terms;
  const long count = integer(0, static_cast<long>(max_terms));
  for (long i = 0; i < count; ++i) {
    terms.push_back({element(carrier.group), nonzero_scalar(carrier.field)});
  }
  return Series(carrier, std::move(terms));
}

Series Sampler::nonzero_series(const Carrier& carrier, std::size_t max_terms) {
  for (;;) {
    Series s = series(carrier, max_terms);
    if (!s.is_zero()) return s;
  }
}

Series Sampler::positive_series(const Carrier& carrier, std::size_t max_terms) {
  Series s = nonzero_series(carrier, max_terms);
  return s.sign() > 0 ? s : -s;
}

Series Sampler::integer_part_series(const Carrier& carrier, std::size_t max_terms) {
  std::vector<Term> terms;
  const long count = carrier.group->is_trivial() ? 0 : integer(0, static_cast<long>(max_terms));
  for (long i = 0; i < count; ++i) {
    terms.push_back({signed_element(carrier.group, -1), nonzero_scalar(carrier.field)});
  }
  terms.push_back({GroupElement(carrier.group), Scalar(integer(-5, 5))});
  return Series(carrier, std::move(terms));
}

}  // namespace hahn

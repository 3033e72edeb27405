#pragma once

// Seeded generators of small random group elements and series. Small ranges on
// purpose: products then collide on exponents, which is where convolution bugs live.

#include <cstddef>
#include <cstdint>
#include <random>

#include "hahnfield/group.hpp"
#include "hahnfield/scalar.hpp"
#include "hahnfield/series.hpp"

namespace hahn {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }
  /// p/q with |p| <= max_abs * q and 1 <= q <= max_den.
  mpq_class rational(long max_abs, long max_den);
  Scalar scalar(FieldClass field);
  Scalar nonzero_scalar(FieldClass field);

  ChainPoint chain_point(const ChainOrder& chain);
  /// Nonzero value admitted by the component class.
  Scalar component_value(ArchClass c);
  GroupElement element(const GroupRef& group, std::size_t max_terms = 2);
  /// Strictly negative (or positive, for sign > 0) element; zero for the trivial group.
  GroupElement signed_element(const GroupRef& group, int sign, std::size_t max_terms = 2);

  Series series(const Carrier& carrier, std::size_t max_terms = 4);
  Series nonzero_series(const Carrier& carrier, std::size_t max_terms = 4);
  Series positive_series(const Carrier& carrier, std::size_t max_terms = 4);
  /// Element of the canonical integer part: negative support plus an integer constant.
  Series integer_part_series(const Carrier& carrier, std::size_t max_terms = 3);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hahn

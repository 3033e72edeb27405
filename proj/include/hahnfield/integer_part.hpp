#pragma once

// The canonical integer part of k((G)): Z = {series with negative support} + Z.
// It is a discretely ordered subring and every series has a floor in it.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hahnfield/series.hpp"

namespace hahn {

/// Series whose nonconstant exponents are all negative and whose constant term is
/// a rational integer. The constructor throws NotIntegerPart otherwise.
class IntegerPartElement {
 public:
  explicit IntegerPartElement(Series value);

  const Series& series() const { return value_; }

  friend bool operator==(const IntegerPartElement&, const IntegerPartElement&) = default;

 private:
  Series value_;
};

bool is_ip_member(const Series& x);

/// The unique z in Z with z <= x < z + 1.
IntegerPartElement floor(const Series& x);

struct IpCheckFamily {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  /// First failing instance, empty on success.
  std::string counterexample;
};

struct IpCheckReport {
  std::vector<IpCheckFamily> families;

  bool passed() const;
};

/// Randomized audit of Z over `carrier`: closure under +, -, *; the floor contract
/// (with crafted integer-constant / negative-infinitesimal cases); finite members
/// are standard integers; no member lies strictly between -1 and 1 except 0.
/// Deterministic in (samples, seed).
IpCheckReport ip_closure_check(const Carrier& carrier, std::size_t samples, std::uint64_t seed);

std::string to_string(const IpCheckReport& report);

}  // namespace hahn

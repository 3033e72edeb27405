#pragma once

// Valuation-theoretic view of finitely supported series: the valuation ring R_v
// (finite elements), its maximal ideal (infinitesimals), the residue map, and the
// canonical additive and multiplicative complements.

#include "hahnfield/group.hpp"
#include "hahnfield/scalar.hpp"
#include "hahnfield/series.hpp"

namespace hahn {

enum class ValuationClass { Zero, Infinitesimal, FiniteUnit, Infinite };

const char* to_string(ValuationClass c);

/// Zero, v(x) > 0, v(x) = 0 or v(x) < 0.
ValuationClass classify(const Series& x);

/// Image of x in the residue field: its t^0 coefficient. Throws NotFinite for
/// infinite x.
Scalar residue(const Series& x);

/// x = infinite_part + constant_part + infinitesimal_part with supports in G^{<0},
/// {0} and G^{>0}. The negative-support series form the complement of R_v, the
/// constants the complement of the infinitesimals inside R_v.
struct AdditiveDecomposition {
  Series infinite_part;
  Scalar constant_part;
  Series infinitesimal_part;

  Series recompose() const;
  friend bool operator==(const AdditiveDecomposition&, const AdditiveDecomposition&) = default;
};

AdditiveDecomposition decompose_additive(const Series& x);

/// x = t^exponent * unit_coeff * one_unit for x > 0, with unit_coeff > 0 and
/// v(one_unit - 1) > 0. Monomials t^g form the complement of the positive units
/// (order-reversing in g); positive constants the complement of the 1-units.
/// Division by the leading monomial is exact, so no truncation is involved.
struct MultiplicativeDecomposition {
  GroupElement exponent;
  Scalar unit_coeff;
  Series one_unit;

  Series recompose() const;
  friend bool operator==(const MultiplicativeDecomposition&,
                         const MultiplicativeDecomposition&) = default;
};

/// Throws NonPositive unless x > 0.
MultiplicativeDecomposition decompose_multiplicative(const Series& x);

}  // namespace hahn

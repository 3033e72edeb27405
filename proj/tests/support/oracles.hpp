#pragma once

// Reference implementations used only by the tests. They share nothing with the
// library beyond the value types: exponents become plain maps, the order is
// re-derived from scratch, and real-number questions go through mpf at high
// precision.

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "hahnfield/group.hpp"
#include "hahnfield/scalar.hpp"
#include "hahnfield/series.hpp"

namespace oracle {

using hahn::Scalar;

/// a + b*sqrt(2) evaluated with 4096 bits.
inline mpf_class approx(const Scalar& x) {
  constexpr unsigned long kBits = 4096;
  mpf_class root(2, kBits);
  root = sqrt(root);
  mpf_class a(x.rational_part(), kBits);
  mpf_class b(x.root2_part(), kBits);
  return a + b * root;
}

inline int sign(const Scalar& x) {
  if (x.is_zero()) return 0;
  return sgn(approx(x));
}

/// Floor through the high-precision approximation. Irrational inputs are never
/// integers, and small rationals are exact in mpf, so this is reliable for the
/// magnitudes the samplers produce.
inline mpz_class floor(const Scalar& x) {
  if (x.is_rational()) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.rational_part().get_num_mpz_t(), x.rational_part().get_den_mpz_t());
    return q;
  }
  mpf_class f = ::floor(approx(x));
  return mpz_class(f);
}

/// Chain point -> value, with zeros removed.
using Exponent = std::map<mpq_class, Scalar>;

inline Exponent exponent(const hahn::GroupElement& g) {
  Exponent e;
  for (const auto& [p, v] : g.terms()) e[p.position] = v;
  return e;
}

inline Exponent add(const Exponent& x, const Exponent& y) {
  Exponent r = x;
  for (const auto& [p, v] : y) {
    r[p] = r[p] + v;
    if (r[p].is_zero()) r.erase(p);
  }
  return r;
}

/// Lexicographic comparison: the sign of x - y at the least point where they differ.
inline int compare(const Exponent& x, const Exponent& y) {
  Exponent diff = x;
  for (const auto& [p, v] : y) {
    diff[p] = diff[p] - v;
    if (diff[p].is_zero()) diff.erase(p);
  }
  return diff.empty() ? 0 : sign(diff.begin()->second);
}

/// A series as an unordered list of (exponent, coefficient).
using Terms = std::vector<std::pair<Exponent, Scalar>>;

inline Terms terms(const hahn::Series& x) {
  Terms out;
  for (const auto& t : x.terms()) out.emplace_back(exponent(t.exponent), t.coeff);
  return out;
}

inline void accumulate(Terms& acc, const Exponent& e, const Scalar& c) {
  for (auto it = acc.begin(); it != acc.end(); ++it) {
    if (compare(it->first, e) == 0) {
      it->second = it->second + c;
      if (it->second.is_zero()) acc.erase(it);
      return;
    }
  }
  if (!c.is_zero()) acc.emplace_back(e, c);
}

/// Schoolbook product: every pair of terms, collected by linear search.
inline Terms convolve(const Terms& x, const Terms& y) {
  Terms acc;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) accumulate(acc, add(ex, ey), cx * cy);
  }
  return acc;
}

inline Terms sum(const Terms& x, const Terms& y) {
  Terms acc = x;
  for (const auto& [e, c] : y) accumulate(acc, e, c);
  return acc;
}

/// Equality as multisets of terms.
inline bool same(const Terms& x, const Terms& y) {
  if (x.size() != y.size()) return false;
  for (const auto& [e, c] : x) {
    bool found = false;
    for (const auto& [f, d] : y) found = found || (compare(e, f) == 0 && c == d);
    if (!found) return false;
  }
  return true;
}

/// Index of the lexicographically least exponent; -1 for the empty series.
inline long least(const Terms& x) {
  long best = -1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (best < 0 || compare(x[i].first, x[static_cast<std::size_t>(best)].first) < 0) {
      best = static_cast<long>(i);
    }
  }
  return best;
}

/// Sign of a series: sign of the coefficient at its least exponent.
inline int sign(const Terms& x) {
  const long i = least(x);
  return i < 0 ? 0 : sign(x[static_cast<std::size_t>(i)].second);
}

inline Terms negate(Terms x) {
  for (auto& [e, c] : x) c = -c;
  return x;
}

/// Sign of x - y.
inline int compare(const Terms& x, const Terms& y) { return sign(sum(x, negate(y))); }

inline Terms constant(const Scalar& c) {
  Terms t;
  if (!c.is_zero()) t.emplace_back(Exponent{}, c);
  return t;
}

inline int exponent_sign(const Exponent& e) { return e.empty() ? 0 : sign(e.begin()->second); }

}  // namespace oracle

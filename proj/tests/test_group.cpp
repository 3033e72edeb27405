#include <gtest/gtest.h>

#include <functional>

#include "hahnfield/error.hpp"
#include "hahnfield/group.hpp"
#include "hahnfield/sampling.hpp"
#include "support/oracles.hpp"

using hahn::ArchClass;
using hahn::ChainOrder;
using hahn::GroupElement;
using hahn::GroupRef;
using hahn::Scalar;

namespace {

GroupRef rat_line() { return hahn::make_group(ChainOrder::rationals(), ArchClass::Rat); }

GroupElement el(const GroupRef& g, std::vector<std::pair<long, Scalar>> terms) {
  std::vector<GroupElement::Term> t;
  for (auto& [p, v] : terms) t.emplace_back(hahn::ChainPoint(p), v);
  return GroupElement(g, std::move(t));
}

Scalar q(long p, long d = 1) { return Scalar(mpq_class(p, d)); }

}  // namespace

TEST(Group, Addition) {
  const GroupRef g = rat_line();
  EXPECT_TRUE((el(g, {{0, 1}}) + el(g, {{0, -1}})).is_zero());
  EXPECT_EQ(el(g, {{0, q(1, 2)}}) + el(g, {{1, 3}}), el(g, {{0, q(1, 2)}, {1, 3}}));
  EXPECT_EQ(el(g, {{0, 2}, {1, -1}}) + el(g, {{0, -2}, {1, 5}}), el(g, {{1, 4}}));
}

TEST(Group, Compare) {
  const GroupRef g = rat_line();
  EXPECT_GT(el(g, {{0, 1}}), el(g, {{1, 100}}));
  EXPECT_EQ(GroupElement(g) <=> GroupElement(g), std::strong_ordering::equal);
  EXPECT_LT(el(g, {{0, q(-1, 3)}}), GroupElement(g));
  const GroupRef other = hahn::make_group(ChainOrder::integers(), ArchClass::Rat);
  EXPECT_THROW((void)(GroupElement(g) < GroupElement(other)), hahn::MathError);
  EXPECT_FALSE(GroupElement(g) == GroupElement(other));
}

TEST(Group, Scale) {
  const GroupRef rat = hahn::make_group(ChainOrder::finite(1), ArchClass::Rat);
  const GroupRef integer = hahn::make_group(ChainOrder::finite(1), ArchClass::Int);
  EXPECT_EQ(hahn::scale(mpq_class(1, 2), el(rat, {{0, 3}})), el(rat, {{0, q(3, 2)}}));
  EXPECT_THROW(hahn::scale(mpq_class(1, 2), el(integer, {{0, 3}})), hahn::MathError);
  const GroupRef g = rat_line();
  EXPECT_EQ(hahn::scale(mpq_class(-2), el(g, {{0, q(1, 2)}, {5, 1}})), el(g, {{0, -1}, {5, -2}}));
}

TEST(Group, Validation) {
  const GroupRef f2 = hahn::make_group(ChainOrder::finite(2), ArchClass::Rat, {{1, ArchClass::Int}});
  EXPECT_THROW(el(f2, {{2, 1}}), hahn::MathError);
  EXPECT_THROW(el(f2, {{1, q(1, 2)}}), hahn::MathError);
  EXPECT_THROW(el(f2, {{0, Scalar(0, 1)}}), hahn::MathError);
  EXPECT_THROW(hahn::make_group(ChainOrder::rationals(), ArchClass::Rat, {{0, ArchClass::Int}}),
               hahn::MathError);
  EXPECT_THROW(hahn::make_group(ChainOrder::finite(2), ArchClass::Rat, {{2, ArchClass::Int}}),
               hahn::MathError);
  const GroupRef ints = hahn::make_group(ChainOrder::integers(), ArchClass::Rat);
  EXPECT_THROW(GroupElement(ints, {{hahn::ChainPoint(mpq_class(1, 2)), 1}}), hahn::MathError);
  EXPECT_EQ(hahn::to_string(*f2), "HahnSum(Finite(2); Rat, 1:Int)");
  // An override equal to the default is dropped from the canonical presentation.
  EXPECT_EQ(*hahn::make_group(ChainOrder::finite(2), ArchClass::Rat, {{1, ArchClass::Rat}}),
            *hahn::make_group(ChainOrder::finite(2), ArchClass::Rat));
}

TEST(Group, AxiomsAndOrderProperties) {
  hahn::Sampler rng(3);
  const GroupRef groups[] = {
      rat_line(),
      hahn::make_group(ChainOrder::integers(), ArchClass::RatRoot2),
      hahn::make_group(ChainOrder::finite(3), ArchClass::Rat, {{1, ArchClass::Int}}),
  };
  for (const GroupRef& g : groups) {
    for (int i = 0; i < 300; ++i) {
      const GroupElement x = rng.element(g, 3);
      const GroupElement y = rng.element(g, 3);
      const GroupElement z = rng.element(g, 3);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x + GroupElement(g), x);
      EXPECT_TRUE((x + (-x)).is_zero());
      const int c = oracle::compare(oracle::exponent(x), oracle::exponent(y));
      EXPECT_EQ((x <=> y) < 0, c < 0);
      EXPECT_EQ((x <=> y) == 0, c == 0);
      if (x < y) EXPECT_LT(x + z, y + z);
    }
  }
}

TEST(Group, ScaleIsOrderAutomorphism) {
  hahn::Sampler rng(5);
  const GroupRef g = hahn::make_group(ChainOrder::rationals(), ArchClass::RatRoot2);
  for (int i = 0; i < 300; ++i) {
    const GroupElement x = rng.element(g, 3);
    const GroupElement y = rng.element(g, 3);
    mpq_class s = rng.rational(3, 4);
    if (s == 0) s = 1;
    const GroupElement sx = hahn::scale(s, x);
    const GroupElement sy = hahn::scale(s, y);
    EXPECT_EQ(hahn::scale(1 / s, sx), x);
    EXPECT_EQ(sx + sy, hahn::scale(s, x + y));
    if (x < y) {
      if (s > 0) {
        EXPECT_LT(sx, sy);
      } else {
        EXPECT_GT(sx, sy);
      }
    }
  }
}

namespace {

// Brute-force description of HahnSum(Finite(n); classes) from finite grids of
// elements. A grid of resolution k has coordinates in [-r, r] that are multiples of
// 1/k on divisible components and integers on Int components.
std::vector<oracle::Exponent> grid(const std::vector<ArchClass>& classes, long k, long r) {
  std::vector<oracle::Exponent> out{{}};
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const long step = classes[i] == ArchClass::Int ? k : 1;
    std::vector<oracle::Exponent> next;
    for (const auto& base : out) {
      for (long m = -r * k; m <= r * k; m += step) {
        oracle::Exponent e = base;
        if (m != 0) e[mpq_class(static_cast<long>(i))] = Scalar(mpq_class(m, k));
        next.push_back(e);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::optional<oracle::Exponent> greatest_negative(const std::vector<oracle::Exponent>& elems) {
  std::optional<oracle::Exponent> best;
  for (const auto& e : elems) {
    if (oracle::exponent_sign(e) < 0 && (!best || oracle::compare(e, *best) > 0)) best = e;
  }
  return best;
}

}  // namespace

TEST(Group, OrderInvariantsMatchBruteForce) {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<ArchClass> classes;
      std::map<std::size_t, ArchClass> overrides;
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) {
        classes.push_back(static_cast<ArchClass>(c % 3));
        overrides.emplace(i, classes.back());
      }
      const GroupRef g = hahn::make_group(ChainOrder::finite(n), ArchClass::Rat, overrides);
      const hahn::OrderInvariants inv = hahn::order_invariants(*g);
      SCOPED_TRACE(hahn::to_string(*g));

      EXPECT_EQ(inv.is_trivial, n == 0);
      EXPECT_EQ(inv.rank_finite, std::optional<std::size_t>(n));
      EXPECT_FALSE(inv.rank_dense);
      EXPECT_EQ(inv.rank_has_min, n > 0);
      EXPECT_EQ(inv.rank_has_max, n > 0);

      bool divisible = true;
      for (const auto& e : grid(classes, 1, 1)) {
        for (const auto& [p, v] : e) {
          if (classes[p.get_num().get_ui()] == ArchClass::Int && !(v * Scalar(mpq_class(1, 2))).is_integer()) {
            divisible = false;
          }
        }
      }
      EXPECT_EQ(inv.divisible, divisible);

      if (n == 0) continue;
      // A greatest negative element persists under refinement; otherwise it moves.
      const auto coarse = greatest_negative(grid(classes, 2, 1));
      const auto fine = greatest_negative(grid(classes, 3, 1));
      ASSERT_TRUE(coarse && fine);
      const bool has_greatest = oracle::compare(*coarse, *fine) == 0;
      EXPECT_EQ(inv.negcone_has_endpoints, has_greatest);

      // Density: look for an element strictly between 2y and y, y the coarse maximum.
      const oracle::Exponent y = *coarse;
      const oracle::Exponent x = oracle::add(y, y);
      bool between = false;
      for (const auto& z : grid(classes, 3, 2)) {
        between = between || (oracle::compare(x, z) < 0 && oracle::compare(z, y) < 0);
      }
      EXPECT_EQ(inv.negcone_dense, between);
    }
  }
}

TEST(Group, OrderInvariantsInfiniteChains) {
  const auto q = hahn::order_invariants(*rat_line());
  EXPECT_TRUE(q.rank_dense);
  EXPECT_FALSE(q.rank_has_min);
  EXPECT_FALSE(q.rank_has_max);
  EXPECT_TRUE(q.divisible);
  EXPECT_EQ(q.rank_finite, std::nullopt);
  EXPECT_TRUE(q.negcone_dense);

  const auto z = hahn::order_invariants(*hahn::make_group(ChainOrder::integers(), ArchClass::Int));
  EXPECT_FALSE(z.rank_dense);
  EXPECT_FALSE(z.rank_has_min);
  EXPECT_FALSE(z.divisible);
  // No greatest point, so no least positive element even with Z components.
  EXPECT_TRUE(z.negcone_dense);

  const auto one = hahn::order_invariants(*hahn::make_group(ChainOrder::finite(1), ArchClass::Rat));
  EXPECT_EQ(one.rank_finite, std::optional<std::size_t>(1));
  EXPECT_FALSE(one.rank_dense);
  EXPECT_TRUE(one.negcone_dense);
  EXPECT_FALSE(one.negcone_has_endpoints);
  EXPECT_TRUE(one.divisible);

  const auto zint = hahn::order_invariants(*hahn::make_group(ChainOrder::finite(1), ArchClass::Int));
  EXPECT_FALSE(zint.negcone_dense);
  EXPECT_FALSE(zint.divisible);
}

TEST(Group, Printing) {
  const GroupRef g = rat_line();
  EXPECT_EQ(hahn::to_string(el(g, {{0, q(1, 2)}, {1, 3}})), "{(0, 1/2), (1, 3)}");
  EXPECT_EQ(hahn::to_exponent_string(el(g, {{0, q(-1, 2)}})), "-1/2");
  EXPECT_EQ(hahn::to_exponent_string(GroupElement(g)), "0");
}

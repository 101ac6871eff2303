#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "todaslice/errors.hpp"
#include "todaslice/rootsys.hpp"

using namespace todaslice;

namespace {

// Degrees of the basic invariants, from the classification tables.
std::vector<int> table_degrees(CartanType t, int r) {
  std::vector<int> d;
  switch (t) {
    case CartanType::A:
      for (int k = 2; k <= r + 1; ++k) d.push_back(k);
      break;
    case CartanType::B:
    case CartanType::C:
      for (int k = 1; k <= r; ++k) d.push_back(2 * k);
      break;
    case CartanType::D:
      for (int k = 1; k < r; ++k) d.push_back(2 * k);
      d.push_back(r);
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Exponents are the dual partition of the multiplicities of root heights.
std::vector<int> degrees_from_heights(const RootSystem& rs) {
  std::vector<int> count(rs.max_height() + 2, 0);
  for (int i = 0; i < rs.num_positive(); ++i) ++count[rs.height(i)];
  std::vector<int> d;
  for (int h = 1; h <= rs.max_height(); ++h) {
    const int drop = count[h] - count[h + 1];
    for (int k = 0; k < drop; ++k) d.push_back(h + 1);
  }
  std::sort(d.begin(), d.end());
  return d;
}

struct Case {
  CartanType t;
  int r;
};

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (int r = 1; r <= 8; ++r) out.push_back({CartanType::A, r});
  for (int r = 2; r <= 6; ++r) out.push_back({CartanType::B, r});
  for (int r = 2; r <= 6; ++r) out.push_back({CartanType::C, r});
  for (int r = 3; r <= 6; ++r) out.push_back({CartanType::D, r});
  return out;
}

}  // namespace

TEST(RootSystem, CountsAndCoxeterNumber) {
  for (const Case& c : all_cases()) {
    const RootSystem rs = RootSystem::build(c.t, c.r);
    int roots = 0, coxeter = 0;
    switch (c.t) {
      case CartanType::A: roots = c.r * (c.r + 1); coxeter = c.r + 1; break;
      case CartanType::B:
      case CartanType::C: roots = 2 * c.r * c.r; coxeter = 2 * c.r; break;
      case CartanType::D: roots = 2 * c.r * (c.r - 1); coxeter = 2 * c.r - 2; break;
    }
    SCOPED_TRACE(rs.label());
    EXPECT_EQ(rs.num_roots(), roots);
    EXPECT_EQ(rs.max_height(), coxeter - 1);
    EXPECT_EQ(rs.algebra_dim(), roots + c.r);
  }
}

TEST(RootSystem, HeightPartitionGivesInvariantDegrees) {
  for (const Case& c : all_cases()) {
    const RootSystem rs = RootSystem::build(c.t, c.r);
    SCOPED_TRACE(rs.label());
    const std::vector<int> d = degrees_from_heights(rs);
    EXPECT_EQ(d, table_degrees(c.t, c.r));
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), 0),
              rs.num_positive() + rs.rank());
  }
}

TEST(RootSystem, OrderingAndNegation) {
  for (const Case& c : all_cases()) {
    const RootSystem rs = RootSystem::build(c.t, c.r);
    SCOPED_TRACE(rs.label());
    for (int k = 0; k < rs.rank(); ++k) {
      EXPECT_TRUE(rs.is_simple(k));
      EXPECT_EQ(rs.height(k), 1);
      std::vector<int> unit(rs.rank(), 0);
      unit[k] = 1;
      EXPECT_EQ(rs.coords(k), unit);
    }
    for (int i = 1; i < rs.num_positive(); ++i)
      EXPECT_LE(rs.height(i - 1), rs.height(i));
    for (int i = 0; i < rs.num_roots(); ++i) {
      const int j = rs.negative(i);
      EXPECT_EQ(rs.negative(j), i);
      EXPECT_EQ(rs.height(j), -rs.height(i));
      EXPECT_NE(rs.is_positive(i), rs.is_positive(j));
      EXPECT_EQ(rs.find(rs.coords(i)), i);
      const auto& co = rs.coords(i);
      const bool nonneg = std::all_of(co.begin(), co.end(), [](int x) { return x >= 0; });
      const bool nonpos = std::all_of(co.begin(), co.end(), [](int x) { return x <= 0; });
      EXPECT_TRUE(nonneg || nonpos);
    }
  }
}

TEST(RootSystem, TypeAPositiveRootsAreIntervals) {
  const RootSystem rs = RootSystem::build(CartanType::A, 4);
  for (int i = 0; i < rs.num_positive(); ++i) {
    const auto& co = rs.coords(i);
    const auto first = std::find(co.begin(), co.end(), 1);
    const auto last = std::find(co.rbegin(), co.rend(), 1).base();
    EXPECT_TRUE(std::all_of(first, last, [](int x) { return x == 1; }));
    EXPECT_EQ(std::count(co.begin(), co.end(), 1), rs.height(i));
  }
}

TEST(RootSystem, RejectsBadConfigurations) {
  EXPECT_EQ(parse_cartan_type("A"), CartanType::A);
  EXPECT_EQ(parse_cartan_type("D"), CartanType::D);
  EXPECT_THROW(parse_cartan_type("E"), ConfigurationError);
  EXPECT_THROW(RootSystem::build(CartanType::A, 0), ConfigurationError);
  EXPECT_THROW(RootSystem::build(CartanType::D, 2), ConfigurationError);
  EXPECT_EQ(RootSystem::build(CartanType::A, 2).find({1, 1, 1}), -1);
}

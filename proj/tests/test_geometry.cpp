#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nucover/geometry.hpp"
#include "support.hpp"

using namespace nucover;
using nucover::testing::tiles;

TEST(Box, Accessors) {
  const Box b{{0.0, 4.0}, {1.0, 4.0}};
  EXPECT_EQ(b.center(), (Point{2.0, 2.5}));
  EXPECT_DOUBLE_EQ(b.diagonal(), 5.0);
  EXPECT_DOUBLE_EQ(b.volume(), 12.0);
  EXPECT_THROW(Box({1.0}, {0.0}), std::invalid_argument);
  EXPECT_THROW(Box({0.0, 0.0}, {1.0}), std::invalid_argument);
}

TEST(CornerSplit, SquareTwoChildren) {
  const Box b{{0, 10}, {0, 10}};
  const auto c = corner_split(b, 2.0);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (Box{{2, 10}, {0, 10}}));
  EXPECT_EQ(c[1], (Box{{0, 2}, {2, 10}}));
  auto pieces = c;
  pieces.push_back(corner_box(b, 2.0));
  EXPECT_EQ(pieces.back(), (Box{{0, 2}, {0, 2}}));
  EXPECT_TRUE(tiles(b, pieces));
}

TEST(CornerSplit, StepCoversWholeBox) { EXPECT_TRUE(corner_split(Box{{0, 10}, {0, 10}}, 12.0).empty()); }

TEST(CornerSplit, NarrowFirstAxis) {
  const auto c = corner_split(Box{{0, 3}, {0, 10}}, 4.0);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (Box{{0, 3}, {4, 10}}));
}

TEST(CornerSplit, RejectsNonPositiveStep) {
  EXPECT_THROW(corner_split(Box{{0, 1}}, 0.0), std::invalid_argument);
  EXPECT_THROW(corner_split(Box{{0, 1}}, -1.0), std::invalid_argument);
}

TEST(BisectLongest, Examples) {
  auto [a, b] = bisect_longest(Box{{0, 10}, {0, 4}});
  EXPECT_EQ(a, (Box{{0, 5}, {0, 4}}));
  EXPECT_EQ(b, (Box{{5, 10}, {0, 4}}));

  std::tie(a, b) = bisect_longest(Box{{0, 2}, {0, 2}});
  EXPECT_EQ(a, (Box{{0, 1}, {0, 2}}));
  EXPECT_EQ(b, (Box{{1, 2}, {0, 2}}));

  std::tie(a, b) = bisect_longest(Box{{0, 1}, {0, 8}, {0, 1}});
  EXPECT_EQ(a, (Box{{0, 1}, {0, 4}, {0, 1}}));
  EXPECT_EQ(b, (Box{{0, 1}, {4, 8}, {0, 1}}));
}

TEST(BisectLongest, RejectsDegenerate) { EXPECT_THROW(bisect_longest(Box{{0, 0}, {0, 1}}), std::invalid_argument); }

TEST(InscribeMaxBox, SymmetricUnclamped) {
  const auto s = inscribe_max_box(Box{{-5, 5}, {-5, 5}}, 5.0);
  EXPECT_NEAR(s[0], 5.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1], 5.0 / std::sqrt(2.0), 1e-15);
}

TEST(InscribeMaxBox, OneAxisClamped) {
  const auto s = inscribe_max_box(Box{{-1, 1}, {-10, 10}}, 5.0);
  EXPECT_EQ(s[0], 1.0);
  EXPECT_NEAR(s[1], std::sqrt(24.0), 1e-14);
}

TEST(InscribeMaxBox, AllAxesClamped) {
  const auto s = inscribe_max_box(Box{{-0.5, 0.5}, {-0.6, 0.6}}, 1.0);
  EXPECT_EQ(s[0], 0.5);
  EXPECT_EQ(s[1], 0.6);
}

TEST(InscribeMaxBox, RejectsNonPositiveRadius) {
  EXPECT_THROW(inscribe_max_box(Box{{0, 1}}, 0.0), std::invalid_argument);
}

TEST(SlabDecompose, FourSlabs) {
  const Box outer{{0, 10}, {0, 10}};
  const Box inner{{4, 6}, {3, 7}};
  const auto s = slab_decompose(outer, inner);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], (Box{{0, 4}, {0, 10}}));
  EXPECT_EQ(s[1], (Box{{6, 10}, {0, 10}}));
  EXPECT_EQ(s[2], (Box{{4, 6}, {0, 3}}));
  EXPECT_EQ(s[3], (Box{{4, 6}, {7, 10}}));
  auto pieces = s;
  pieces.push_back(inner);
  EXPECT_TRUE(tiles(outer, pieces));
}

TEST(SlabDecompose, FullSpanAxisDropsEmptySlabs) {
  const auto s = slab_decompose(Box{{0, 10}, {0, 2}}, Box{{3, 7}, {0, 2}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (Box{{0, 3}, {0, 2}}));
  EXPECT_EQ(s[1], (Box{{7, 10}, {0, 2}}));
}

TEST(SlabDecompose, InnerEqualsOuter) {
  const Box b{{0, 1}, {2, 5}};
  EXPECT_TRUE(slab_decompose(b, b).empty());
}

TEST(SlabDecompose, LongFullSpanAxisDoesNotStall) {
  // The longest edge is fully spanned by the inner box; the cut must move on.
  const auto s = slab_decompose(Box{{0, 10}, {0, 2}}, Box{{0, 10}, {0.5, 1.5}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (Box{{0, 10}, {0, 0.5}}));
}

TEST(SlabDecompose, RejectsBadInner) {
  EXPECT_THROW(slab_decompose(Box{{0, 10}}, Box{{1, 3}}), std::invalid_argument);   // off-centre
  EXPECT_THROW(slab_decompose(Box{{0, 10}}, Box{{-1, 11}}), std::invalid_argument);  // not contained
}

TEST(GeometryProperties, RandomizedTilingAndNesting) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> frac(0.02, 1.2);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    const Box b = nucover::testing::random_box(rng, dim);

    const double step = frac(rng) * b.diagonal() / 2.0;
    auto pieces = corner_split(b, step);
    pieces.push_back(corner_box(b, step));
    ASSERT_TRUE(tiles(b, pieces)) << b.to_string();

    const auto [l, r] = bisect_longest(b);
    ASSERT_TRUE(tiles(b, {l, r}));
    ASSERT_NEAR(l.volume(), 0.5 * b.volume(), 1e-12 * b.volume());

    const double radius = frac(rng) * b.half_diagonal() * 0.8;
    const auto s = inscribe_max_box(b, radius);
    const Box inner = centered_box(b, s);
    auto slabs = slab_decompose(b, inner);
    ASSERT_LE(slabs.size(), 2 * dim);
    slabs.push_back(inner);
    ASSERT_TRUE(tiles(b, slabs)) << b.to_string() << " inner " << inner.to_string();
  }
}

TEST(GeometryProperties, InscribeMatchesGridOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> frac(0.05, 0.999);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const Box b = nucover::testing::random_box(rng, dim);
    const double radius = frac(rng) * b.half_diagonal();
    const auto s = inscribe_max_box(b, radius);
    double prod = 1.0, norm2 = 0.0;
    std::vector<double> w(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      w[i] = 0.5 * b.width(i);
      ASSERT_LE(s[i], w[i]);
      prod *= s[i];
      norm2 += s[i] * s[i];
    }
    ASSERT_LE(norm2, radius * radius + 1e-12);
    const double grid = nucover::testing::grid_best_product(w, radius, dim == 2 ? 300 : 50);
    ASSERT_GE(prod, grid - 1e-9);
  }
}

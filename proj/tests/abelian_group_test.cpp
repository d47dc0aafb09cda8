#include "abelian_group.hpp"

#include <gtest/gtest.h>

namespace toric {
namespace {

TEST(AbelianGroup, NormalizesToInvariantFactors) {
  EXPECT_EQ(AbelianGroup::from_orders({2, 3}).torsion(), make_vector({6}));
  EXPECT_EQ(AbelianGroup::from_orders({4, 6}).torsion(), make_vector({2, 12}));
  EXPECT_EQ(AbelianGroup::from_orders({1, 1}), AbelianGroup::trivial());
  const AbelianGroup g = AbelianGroup::from_orders({0, 1, 5});
  EXPECT_EQ(g.free_rank(), 1u);
  EXPECT_EQ(g.torsion(), make_vector({5}));
}

TEST(AbelianGroup, OrderIsSignaledForInfiniteGroups) {
  EXPECT_EQ(AbelianGroup::from_orders({2, 4}).order(), Integer(8));
  EXPECT_EQ(AbelianGroup::trivial().order(), Integer(1));
  EXPECT_FALSE(AbelianGroup::free(2).order().has_value());
}

TEST(AbelianGroup, RenderUsesTableNotation) {
  EXPECT_EQ(AbelianGroup::trivial().render(), "0");
  EXPECT_EQ(AbelianGroup::cyclic(21).render(), "C21");
  EXPECT_EQ(AbelianGroup::cyclic(-21).render(), "C21");
  EXPECT_EQ(AbelianGroup::from_orders({2, 4}).render(), "C2×C4");
  EXPECT_EQ(AbelianGroup::free(1).render(), "Z");
  EXPECT_EQ(direct_sum(AbelianGroup::free(2), AbelianGroup::cyclic(3)).render(), "Z^2×C3");
}

TEST(AbelianGroup, DirectSumMergesPrimaryParts) {
  const AbelianGroup s = direct_sum(AbelianGroup::cyclic(7), AbelianGroup::cyclic(21));
  EXPECT_EQ(s.torsion(), make_vector({7, 21}));
  EXPECT_EQ(direct_sum(AbelianGroup::cyclic(4), AbelianGroup::cyclic(9)), AbelianGroup::cyclic(36));
}

TEST(AbelianGroup, PrimaryDecomposition) {
  const auto parts = AbelianGroup::from_orders({12, 18}).primary_decomposition();
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, 2);
  EXPECT_EQ(parts[0].second, (std::vector<unsigned long>{1, 2}));
  EXPECT_EQ(parts[1].first, 3);
  EXPECT_EQ(parts[1].second, (std::vector<unsigned long>{1, 2}));
}

TEST(Factorize, SmallNumbers) {
  EXPECT_TRUE(factorize(1).empty());
  const auto f = factorize(147);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], std::make_pair(Integer(3), 1ul));
  EXPECT_EQ(f[1], std::make_pair(Integer(7), 2ul));
}

}  // namespace
}  // namespace toric

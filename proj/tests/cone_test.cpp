#include "cone.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "error.hpp"
#include "exact_linalg.hpp"
#include "test_support.hpp"

namespace toric {
namespace {

using testing::random_generators;
using testing::random_unimodular;

SimplicialCone cone(std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IntVector> v;
  for (const auto& g : gens) v.push_back(make_vector(g));
  return SimplicialCone::make(std::move(v));
}

// Random valid cone by rejection; independent of the library's own sampler.
SimplicialCone random_cone(std::mt19937_64& rng, std::size_t n, long bound) {
  for (;;) {
    auto gens = random_generators(rng, n, bound);
    if (std::any_of(gens.begin(), gens.end(), [](const IntVector& g) { return content(g) == 0; }))
      continue;
    if (determinant(IntMatrix::from_columns(gens, n)) == 0) continue;
    return SimplicialCone::make(std::move(gens));
  }
}

ErrorCode error_of(std::vector<IntVector> gens) {
  try {
    SimplicialCone::make(std::move(gens));
  } catch (const ToricError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidArgument;
}

TEST(MakeCone, ValidatesAndPrimitivizes) {
  EXPECT_EQ(delta(cone({{1, 0}, {0, 1}})), 1);
  const SimplicialCone c = cone({{2, 0}, {0, 1}});
  EXPECT_EQ(c.generator(0), make_vector({1, 0}));
  EXPECT_EQ(c.generator(1), make_vector({0, 1}));
}

TEST(MakeCone, DistinctErrors) {
  EXPECT_EQ(error_of({make_vector({1, 0}), make_vector({2, 0})}), ErrorCode::kDependentGenerators);
  EXPECT_EQ(error_of({make_vector({1, 0}), make_vector({0, 0})}), ErrorCode::kZeroGenerator);
  EXPECT_EQ(error_of({make_vector({1, 0, 0}), make_vector({0, 1, 0})}), ErrorCode::kWrongCount);
  EXPECT_EQ(error_of({make_vector({1, 0}), make_vector({0, 1, 0})}), ErrorCode::kWrongCount);
  EXPECT_EQ(error_of({}), ErrorCode::kWrongCount);
}

TEST(Delta, ReferenceValues) {
  EXPECT_EQ(delta(cone({{1, 0}, {0, 1}})), 1);
  EXPECT_EQ(delta(cone({{1, 0, 0}, {2, 3, 0}, {3, 5, 7}})), 21);
  EXPECT_EQ(delta(cone({{1, 0, 0}, {5, 7, 0}, {7, 8, 19}})), 133);
}

TEST(Delta, SignUnderReorderAndAbsUnderUnimodularMaps) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const SimplicialCone c = random_cone(rng, n, 15);
    auto swapped = c.generators();
    std::swap(swapped[0], swapped[1]);
    ASSERT_EQ(delta(SimplicialCone::make(swapped)), -delta(c));
    const UnimodularTransform t(random_unimodular(rng, n));
    ASSERT_EQ(abs(delta(transform(c, t))), abs(delta(c)));
  }
}

TEST(Faces, LexicographicSubsets) {
  const SimplicialCone c = cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto rays = faces(c, 1);
  ASSERT_EQ(rays.size(), 3u);
  EXPECT_EQ(rays[0].indices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(rays[2].indices, (std::vector<std::size_t>{2}));
  const auto zero = faces(c, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].indices.empty());
  const auto two = faces(c, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0].indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(two[1].indices, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(two[2].indices, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(faces(c, 3).size(), 1u);
  EXPECT_THROW(faces(c, 4), ToricError);
}

TEST(DualCone, Examples) {
  EXPECT_EQ(dual_cone(cone({{1, 0}, {0, 1}})),
            (std::vector<IntVector>{make_vector({1, 0}), make_vector({0, 1})}));
  EXPECT_EQ(dual_cone(cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).size(), 3u);

  // Each dual generator pairs >= 0 with both generators and vanishes on one.
  const SimplicialCone c = cone({{1, 0}, {1, 2}});
  auto dual = dual_cone(c);
  for (const auto& y : dual) {
    int zeros = 0;
    for (const auto& u : c.generators()) {
      EXPECT_GE(dot(y, u), 0);
      if (dot(y, u) == 0) ++zeros;
    }
    EXPECT_EQ(zeros, 1);
  }
  std::sort(dual.begin(), dual.end());
  EXPECT_EQ(dual, (std::vector<IntVector>{make_vector({0, 1}), make_vector({2, -1})}));
}

TEST(DualCone, DoubleDualRecoversRays) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const SimplicialCone c = random_cone(rng, 2 + trial % 3, 12);
    const SimplicialCone d = SimplicialCone::make(dual_cone(c));
    auto back = dual_cone(d);
    auto original = c.generators();
    std::sort(back.begin(), back.end());
    std::sort(original.begin(), original.end());
    ASSERT_EQ(back, original);
  }
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(cone({{1, 0}, {0, 1}}), make_vector({3, 5})));
  EXPECT_FALSE(contains(cone({{1, 0}, {0, 1}}), make_vector({-1, 0})));
  EXPECT_TRUE(contains(cone({{1, 0}, {1, 2}}), make_vector({1, 1})));
  EXPECT_TRUE(contains(cone({{1, 0}, {1, 2}}), make_vector({0, 0})));
  EXPECT_FALSE(contains(cone({{1, 0}, {1, 2}}), make_vector({0, 1})));
  EXPECT_THROW(contains(cone({{1, 0}, {1, 2}}), make_vector({0, 1, 2})), ToricError);
}

TEST(Contains, MatchesRationalCoordinates) {
  // Generators and their nonnegative combinations are inside; pushing past a
  // facet leaves the cone.
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> coef(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const SimplicialCone c = random_cone(rng, n, 10);
    IntVector p(n);
    for (const auto& u : c.generators()) {
      const long k = coef(rng);
      for (std::size_t i = 0; i < n; ++i) p[i] += k * u[i];
    }
    ASSERT_TRUE(contains(c, p));
    IntVector outside = p;
    for (std::size_t i = 0; i < n; ++i) outside[i] -= 7 * c.generator(0)[i];
    ASSERT_FALSE(contains(c, outside));
  }
}

void expect_planar_form(const SimplicialCone& c, const NormalForm& nf) {
  ASSERT_TRUE(is_unimodular(nf.transform.matrix()));
  ASSERT_EQ(transform(c, nf.transform), nf.image);
  ASSERT_EQ(nf.image.generator(0), make_vector({1, 0}));
  const Integer& a = nf.image.generator(1)[0];
  const Integer& b = nf.image.generator(1)[1];
  ASSERT_GT(a, 0);
  ASSERT_GT(b, 0);
  ASSERT_EQ(gcd(a, b), 1);
  ASSERT_EQ(b, abs(delta(c)));
  ASSERT_LE(a, b);  // least shear
}

TEST(Normalize2d, Examples) {
  const SimplicialCone already = cone({{1, 0}, {1, 2}});
  auto nf = normalize_2d(already);
  expect_planar_form(already, nf);
  EXPECT_EQ(nf.transform.matrix(), IntMatrix::identity(2));
  EXPECT_EQ(nf.image.generator(1), make_vector({1, 2}));

  const SimplicialCone c = cone({{2, 1}, {1, 1}});
  nf = normalize_2d(c);
  expect_planar_form(c, nf);
  EXPECT_EQ(nf.transform.apply(make_vector({2, 1})), make_vector({1, 0}));
  EXPECT_EQ(nf.image.generator(1), make_vector({1, 1}));

  const SimplicialCone smooth = cone({{1, 0}, {0, 1}});
  nf = normalize_2d(smooth);
  expect_planar_form(smooth, nf);
  EXPECT_EQ(nf.image.generator(1), make_vector({1, 1}));

  EXPECT_THROW(normalize_2d(cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), ToricError);
}

TEST(Normalize2d, RandomConesSatisfyPostconditions) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 600; ++trial) {
    const SimplicialCone c = random_cone(rng, 2, 100);
    expect_planar_form(c, normalize_2d(c));
  }
}

void expect_triangular_form(const SimplicialCone& c, const NormalForm& nf) {
  ASSERT_TRUE(is_unimodular(nf.transform.matrix()));
  ASSERT_EQ(transform(c, nf.transform), nf.image);
  ASSERT_EQ(nf.image.generator(0), make_vector({1, 0, 0}));
  const IntVector& second = nf.image.generator(1);
  const IntVector& third = nf.image.generator(2);
  ASSERT_EQ(second[2], 0);
  ASSERT_GT(second[1], 0);
  ASSERT_NE(third[2], 0);
  ASSERT_EQ(abs(second[1] * third[2]), abs(delta(c)));
}

TEST(Normalize3d, Examples) {
  const SimplicialCone smooth = cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto nf = normalize_3d(smooth);
  expect_triangular_form(smooth, nf);
  EXPECT_EQ(abs(nf.image.generator(1)[1]), 1);
  EXPECT_EQ(abs(nf.image.generator(2)[2]), 1);

  const SimplicialCone row1 = cone({{1, 0, 0}, {1, 2, 0}, {1, 2, 4}});
  nf = normalize_3d(row1);
  expect_triangular_form(row1, nf);
  EXPECT_EQ(nf.image, row1);

  const SimplicialCone row3 = cone({{3, 5, 7}, {1, 0, 0}, {2, 3, 0}});
  nf = normalize_3d(row3);
  expect_triangular_form(row3, nf);
  EXPECT_EQ(abs(nf.image.generator(1)[1] * nf.image.generator(2)[2]), 21);

  EXPECT_THROW(normalize_3d(cone({{1, 0}, {0, 1}})), ToricError);
}

TEST(Normalize3d, RandomConesSatisfyPostconditions) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 600; ++trial) {
    const SimplicialCone c = random_cone(rng, 3, 30);
    expect_triangular_form(c, normalize_3d(c));
  }
}

TEST(DualTransform, Examples) {
  EXPECT_EQ(dual_transform(UnimodularTransform::identity(3)), UnimodularTransform::identity(3));
  EXPECT_EQ(dual_transform(UnimodularTransform(IntMatrix{{1, 1}, {0, 1}})).matrix(),
            (IntMatrix{{1, 0}, {-1, 1}}));
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const UnimodularTransform a(random_unimodular(rng, 2 + trial % 3));
    ASSERT_EQ(dual_transform(dual_transform(a)), a);
  }
  EXPECT_THROW(UnimodularTransform(IntMatrix{{2, 0}, {0, 1}}), ToricError);
}

bool in_dual(const SimplicialCone& c, std::span<const Integer> p) {
  return contains(SimplicialCone::make(dual_cone(c)), p);
}

TEST(DualTransform, PreservesDualMembership) {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> coord(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const SimplicialCone sigma = random_cone(rng, n, 10);
    const UnimodularTransform a(random_unimodular(rng, n));
    const SimplicialCone tau = transform(sigma, a);
    const UnimodularTransform dual = dual_transform(a);
    std::vector<IntVector> points = dual_cone(sigma);  // boundary cases
    for (int k = 0; k < 50; ++k) {
      IntVector p(n);
      for (auto& x : p) x = coord(rng);
      points.push_back(std::move(p));
    }
    for (const auto& p : points) {
      const bool before = in_dual(sigma, p);
      bool by_pairing = true;
      for (const auto& u : sigma.generators()) by_pairing = by_pairing && dot(p, u) >= 0;
      ASSERT_EQ(before, by_pairing);
      ASSERT_EQ(before, in_dual(tau, dual.apply(p)));
    }
  }
}

}  // namespace
}  // namespace toric
